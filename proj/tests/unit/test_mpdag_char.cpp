#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "../support/random_instances.hpp"
#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/meek.hpp"
#include "causal_bgk/mpdag_char.hpp"

using namespace causal_bgk;
using fixtures::set;

namespace {
std::set<std::string> names(const Pdag& g, const std::vector<Edge>& es) {
    std::set<std::string> out;
    for (auto e : es) out.insert(format_edge(g, e));
    return out;
}

Pdag with_generator(const Pdag& g) {
    Pdag p = cpdag_of(g).graph();
    for (auto e : minimal_generator(g)) p.add_directed(e.tail, e.head);
    return meek_closure(p).graph();
}
}  // namespace

TEST_CASE("B-components and chain skeleton of the five vertex example") {
    Pdag g = parse_graph(fixtures::fig3_text);
    auto bc = b_components(g);
    REQUIRE(bc.size() == 3);
    CHECK(bc[0].vertices == set(g, {"A"}));
    CHECK(bc[1].vertices == set(g, {"B", "C", "D"}));
    CHECK(bc[2].vertices == set(g, {"E"}));
    CHECK(bc[1].subgraph.has_directed(g.vertex("C"), g.vertex("B")));

    Pdag cs = chain_skeleton(g);
    CHECK(cs.has_undirected(g.vertex("B"), g.vertex("C")));
    CHECK(cs.has_undirected(g.vertex("B"), g.vertex("D")));
    CHECK(cs.has_directed(g.vertex("A"), g.vertex("B")));
    CHECK(cs.has_directed(g.vertex("D"), g.vertex("E")));

    Pdag dag = parse_graph("a -> b\nb -> c\n");
    CHECK(b_components(dag).size() == 3);
    CHECK(chain_skeleton(dag) == dag);
}

TEST_CASE("characterization of the five vertex example") {
    Pdag g = parse_graph(fixtures::fig3_text);
    auto rep = is_causal_mpdag(g);
    CHECK(rep.is_causal_mpdag);
    CHECK(rep.violations.empty());

    // reversing C -> B gives another valid MPDAG of the same (undirected) CPDAG
    Pdag rev = g;
    rev.add_directed(g.vertex("B"), g.vertex("C"));
    CHECK(is_causal_mpdag(rev).is_causal_mpdag);
    CHECK(brute::causal_mpdag(rev));

    Pdag bad = parse_graph("a -- c\nc -- b\na -> b\nb -- d\n");
    auto r2 = is_causal_mpdag(bad);
    CHECK_FALSE(r2.is_causal_mpdag);
    bool found = false;
    for (auto& v : r2.violations)
        if (v.condition == Condition::inner_edge)
            for (auto e : v.edges) found = found || (e == Edge{bad.vertex("a"), bad.vertex("b")});
    CHECK(found);
    CHECK_FALSE(brute::causal_mpdag(bad));

    Pdag cyc = parse_graph("a -> b\nb -- c\nc -> a\n");
    auto r3 = is_causal_mpdag(cyc);
    CHECK_FALSE(r3.is_causal_mpdag);
    REQUIRE_FALSE(r3.violations.empty());
    CHECK(r3.violations[0].condition == Condition::chain_graph);

    Pdag square = parse_graph("a -- b\nb -- c\nc -- d\nd -- a\n");
    auto r4 = is_causal_mpdag(square);
    CHECK_FALSE(r4.is_causal_mpdag);
    bool chordal_hit = false;
    for (auto& v : r4.violations) chordal_hit = chordal_hit || v.condition == Condition::chordal;
    CHECK(chordal_hit);

    Pdag split = parse_graph("p -> a\na -- b\n");
    auto r5 = is_causal_mpdag(split);
    CHECK_FALSE(r5.is_causal_mpdag);
    bool shared = false;
    for (auto& v : r5.violations) shared = shared || v.condition == Condition::shared_parents;
    CHECK(shared);
}

TEST_CASE("protected edges and minimal generator of the five vertex example") {
    Pdag g = parse_graph(fixtures::fig3_text);
    CHECK(names(g, m_strongly_protected(g)) == std::set<std::string>{"A->B", "A->E", "B->E", "D->E"});
    CHECK(names(g, minimal_generator(g)) == std::set<std::string>{"A->C", "A->D", "C->B"});
    Cpdag c = cpdag_of(g);
    CHECK(c.graph().skeleton() == g.skeleton());
    CHECK(with_generator(g) == g);
    Pdag bad = parse_graph("a -> b\nb -- c\n");
    CHECK_THROWS_AS(minimal_generator(bad), ContractError);
    CHECK_THROWS_AS(cpdag_of(bad), ContractError);
}

TEST_CASE("underlying CPDAG of the effect example") {
    Pdag h = parse_graph(fixtures::f10_text);
    Pdag c = cpdag_of(h).graph();
    CHECK(c == h.skeleton());
    for (const char* v : {"A", "B", "C"}) CHECK(c.has_undirected(c.vertex("X"), c.vertex(v)));
}

TEST_CASE("characterization matches the brute force definition on small graphs") {
    // exhaustive on up to 4 vertices: every pair is absent, ->, <- or --
    for (int n = 1; n <= 4; ++n) {
        Pdag base = Pdag::with_size(n);
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        int total = 1;
        for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
        int yes = 0;
        for (int code = 0; code < total; ++code) {
            Pdag g = base;
            int c = code;
            for (auto [a, b] : pairs) {
                switch (c % 4) {
                    case 1: g.add_directed(a, b); break;
                    case 2: g.add_directed(b, a); break;
                    case 3: g.add_undirected(a, b); break;
                }
                c /= 4;
            }
            bool mine = is_causal_mpdag(g).is_causal_mpdag;
            REQUIRE(mine == brute::causal_mpdag(g));
            if (mine) {
                ++yes;
                REQUIRE(with_generator(g) == g);
            }
        }
        CHECK(yes > 0);
    }
    // sampled on 5 and 6 vertices
    gen::Rng rng(41);
    for (int it = 0; it < 20000; ++it) {
        int n = gen::pick(rng, 5, 6);
        Pdag g = Pdag::with_size(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) switch (gen::pick(rng, 0, 3)) {
                    case 1: g.add_directed(a, b); break;
                    case 2: g.add_directed(b, a); break;
                    case 3: g.add_undirected(a, b); break;
                }
        bool mine = is_causal_mpdag(g).is_causal_mpdag;
        REQUIRE(mine == brute::causal_mpdag(g));
        if (mine) REQUIRE(with_generator(g) == g);
    }
}

TEST_CASE("constructed MPDAGs round trip through their generator") {
    gen::Rng rng(42);
    for (int it = 0; it < 1000; ++it) {
        int n = gen::pick(rng, 2, 8);
        Pdag d = gen::random_dag(n, 0.5, rng);
        Cpdag g = dag_to_cpdag(Dag::trusted(d));
        auto k = gen::random_dccs(g, rng, &d, 4);
        Pdag h = construct_mpdag(g, k).graph();
        REQUIRE(is_causal_mpdag(h).is_causal_mpdag);
        CHECK(cpdag_of(h) == g);
        CHECK(with_generator(h) == h);
        // every generator edge is needed
        auto gen_edges = minimal_generator(h);
        for (std::size_t i = 0; i < gen_edges.size(); ++i) {
            Pdag p = g;
            for (std::size_t j = 0; j < gen_edges.size(); ++j)
                if (j != i) p.add_directed(gen_edges[j].tail, gen_edges[j].head);
            CHECK_FALSE(meek_closure(p).graph() == h);
        }
    }
}
