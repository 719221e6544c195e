#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace causal_bgk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed text input; line is 1-based, 0 when unknown
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// caller broke a documented precondition
class ContractError : public Error {
public:
    using Error::Error;
};

// knowledge contradicts the graph; witness lists the vertices left when
// leaf elimination got stuck (may be empty if not applicable)
class InconsistentError : public Error {
public:
    InconsistentError(const std::string& msg, std::vector<int> witness = {})
        : Error(msg), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

// input exceeds a configured enumeration limit
class CapabilityError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace causal_bgk
