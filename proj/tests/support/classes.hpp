#pragma once

#include <set>
#include <vector>

#include "causal_bgk/oracle.hpp"

namespace classes {

using namespace causal_bgk;

using Code = std::vector<int>;

inline Code code(const Pdag& d) {
    Code v;
    for (auto e : d.directed_edges()) v.push_back(e.tail * 64 + e.head);
    return v;
}

inline std::set<Code> codes(const RestrictedClass& rc) {
    std::set<Code> out;
    for (auto& d : rc.members) out.insert(code(d));
    return out;
}

// members of an MPDAG's class that also satisfy k; the MPDAG's own directed
// edges are checked explicitly
inline std::set<Code> codes(const Cpdag& base, const Pdag& h, const DccSet& k) {
    std::set<Code> out;
    for (auto& d : enumerate_class(base)) {
        bool ok = true;
        for (auto e : h.directed_edges())
            if (!d.graph().has_directed(e.tail, e.head)) ok = false;
        for (auto& c : k)
            if (ok && !dag_satisfies(d, c)) ok = false;
        if (ok) out.insert(code(d));
    }
    return out;
}

}  // namespace classes
