#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causal_bgk/vertex_set.hpp"

namespace causal_bgk {

// mark of the pair (a, b) as seen from a
enum class Mark : std::uint8_t { none, out, in, undirected };

struct Edge {
    Vertex tail;
    Vertex head;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Partially directed graph over labelled vertices 0..n-1.
// Plain value type: copies are independent, library functions never mutate
// their inputs and return fresh graphs.
class Pdag {
public:
    Pdag() = default;
    explicit Pdag(std::vector<std::string> labels);
    // unlabelled graph, vertices named V0..V{n-1}
    static Pdag with_size(int n);

    int size() const noexcept { return n_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    // throws ContractError for unknown labels
    Vertex vertex(std::string_view label) const;

    Mark mark(Vertex a, Vertex b) const { return static_cast<Mark>(m_[idx(a, b)]); }
    bool adjacent(Vertex a, Vertex b) const { return mark(a, b) != Mark::none; }
    bool has_directed(Vertex a, Vertex b) const { return mark(a, b) == Mark::out; }
    bool has_undirected(Vertex a, Vertex b) const { return mark(a, b) == Mark::undirected; }

    const VertexSet& parents(Vertex v) const { return pa_[v]; }
    const VertexSet& children(Vertex v) const { return ch_[v]; }
    const VertexSet& siblings(Vertex v) const { return sib_[v]; }
    VertexSet neighbors(Vertex v) const { return pa_[v] | ch_[v] | sib_[v]; }

    VertexSet parents(const VertexSet& s) const;
    VertexSet children(const VertexSet& s) const;
    VertexSet siblings(const VertexSet& s) const;

    VertexSet all() const { return VertexSet::full(n_); }

    std::vector<Edge> directed_edges() const;
    // each undirected edge once, tail < head
    std::vector<Edge> undirected_edges() const;
    int edge_count() const;
    bool has_undirected_edges() const;

    // in-place edits for building values; algorithms work on copies
    void add_directed(Vertex a, Vertex b);
    void add_undirected(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);

    // same ids, only edges with both ends in s
    Pdag restricted_to(const VertexSet& s) const;
    // undirected part only
    Pdag undirected_part() const;
    // every edge made undirected
    Pdag skeleton() const;

    friend bool operator==(const Pdag& a, const Pdag& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
    std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }
    void set_pair(Vertex a, Vertex b, Mark ab);
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> m_;
    std::vector<VertexSet> pa_, ch_, sib_;
};

bool has_directed_cycle(const Pdag& g);
// directed part only; throws InconsistentError on a cycle
std::vector<Vertex> topological_order(const Pdag& g);
// vertices reachable from s by directed paths, s included
VertexSet descendants(const Pdag& g, const VertexSet& s);
VertexSet ancestors(const Pdag& g, const VertexSet& s);
// connected components of the undirected part, ordered by smallest member
std::vector<VertexSet> chain_components(const Pdag& g);

// Validated specializations. from() checks the invariant, trusted() is for
// results that hold it by construction.
class Dag {
public:
    static Dag from(Pdag g);
    static Dag trusted(Pdag g) { return Dag(std::move(g)); }
    const Pdag& graph() const noexcept { return g_; }
    operator const Pdag&() const noexcept { return g_; }
    friend bool operator==(const Dag& a, const Dag& b) { return a.g_ == b.g_; }

private:
    explicit Dag(Pdag g) : g_(std::move(g)) {}
    Pdag g_;
};

class Cpdag {
public:
    static Cpdag from(Pdag g);
    static Cpdag trusted(Pdag g) { return Cpdag(std::move(g)); }
    const Pdag& graph() const noexcept { return g_; }
    operator const Pdag&() const noexcept { return g_; }
    friend bool operator==(const Cpdag& a, const Cpdag& b) { return a.g_ == b.g_; }

private:
    explicit Cpdag(Pdag g) : g_(std::move(g)) {}
    Pdag g_;
};

class Mpdag {
public:
    // checks closure under the orientation rules and acyclicity
    static Mpdag from(Pdag g);
    static Mpdag trusted(Pdag g) { return Mpdag(std::move(g)); }
    const Pdag& graph() const noexcept { return g_; }
    operator const Pdag&() const noexcept { return g_; }
    friend bool operator==(const Mpdag& a, const Mpdag& b) { return a.g_ == b.g_; }

private:
    explicit Mpdag(Pdag g) : g_(std::move(g)) {}
    Pdag g_;
};

// label list like "{A,B}"
std::string format_set(const Pdag& g, const VertexSet& s);
std::string format_edge(const Pdag& g, const Edge& e);

}  // namespace causal_bgk
