#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/classes.hpp"
#include "../support/fixtures.hpp"
#include "../support/random_instances.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/meek.hpp"
#include "causal_bgk/oracle.hpp"

using namespace causal_bgk;
using fixtures::set;

TEST_CASE("class sizes") {
    Cpdag chain = Cpdag::from(parse_graph(fixtures::chain_text));
    CHECK(enumerate_class(chain).size() == 3);
    Pdag dag = parse_graph("a -> b\nc -> b\nb -> d\n");
    auto one = enumerate_class(Cpdag::from(dag));
    REQUIRE(one.size() == 1);
    CHECK(one[0].graph() == dag);
    int fact = 1;
    for (int k = 1; k <= 6; ++k) {
        fact *= k;
        Pdag full = Pdag::with_size(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) full.add_undirected(a, b);
        CHECK(static_cast<int>(enumerate_class(Cpdag::from(full)).size()) == fact);
    }
    // a tree on n vertices has n members (one per root)
    Pdag tree = parse_graph("a -- b\nb -- c\nb -- d\nd -- e\n");
    CHECK(enumerate_class(Cpdag::from(tree)).size() == 5);

    Pdag big = Pdag::with_size(9);
    for (int a = 0; a < 8; ++a) big.add_undirected(a, a + 1);
    CHECK_THROWS_AS(enumerate_class(Cpdag::from(big)), CapabilityError);
    CHECK(enumerate_class(Cpdag::from(big), OracleOptions{9}).size() == 9);
}

TEST_CASE("enumeration matches brute force") {
    gen::Rng rng(71);
    for (int it = 0; it < 400; ++it) {
        int n = gen::pick(rng, 1, 6);
        Cpdag g = gen::random_cpdag(n, gen::pick(rng, 2, 9) / 10.0, rng);
        std::set<classes::Code> mine, ref;
        auto members = enumerate_class(g);
        for (auto& d : members) mine.insert(classes::code(d));
        for (auto& d : brute::class_members(g)) ref.insert(classes::code(d));
        CHECK(mine.size() == members.size());
        REQUIRE(mine == ref);
    }
}

TEST_CASE("constraint semantics") {
    Dag d = Dag::from(parse_graph("S -> B\nB -> D\n"));
    const Pdag& p = d;
    Vertex S = p.vertex("S"), B = p.vertex("B"), D = p.vertex("D");
    CHECK(dag_satisfies(d, PairwiseConstraint{ConstraintKind::ancestral, S, D}));
    CHECK_FALSE(dag_satisfies(d, PairwiseConstraint{ConstraintKind::ancestral, D, S}));
    CHECK(dag_satisfies(d, PairwiseConstraint{ConstraintKind::non_ancestral, D, S}));
    CHECK(dag_satisfies(d, PairwiseConstraint{ConstraintKind::direct, S, B}));
    CHECK_FALSE(dag_satisfies(d, PairwiseConstraint{ConstraintKind::direct, S, D}));
    CHECK(dag_satisfies(d, Dcc{B, VertexSet(3, {S, D})}));
    CHECK_FALSE(dag_satisfies(d, Dcc{B, VertexSet(3, {S})}));
    CHECK_FALSE(dag_satisfies(d, Dcc{B, VertexSet(3)}));
}

TEST_CASE("the four vertex restricted class") {
    Cpdag g = Cpdag::from(parse_graph(fixtures::fig5_text));
    const Pdag& p = g;
    Vertex X = p.vertex("X"), Y = p.vertex("Y");
    auto full = enumerate_class(g);
    CHECK(full.size() == 10);
    auto rc = restricted_class(g, std::vector<PairwiseConstraint>{{ConstraintKind::ancestral, X, Y}});
    CHECK(rc.members.size() == 4);
    for (auto& d : rc.members) CHECK(dag_satisfies(d, PairwiseConstraint{ConstraintKind::ancestral, X, Y}));
    Mpdag h = oracle_mpdag(rc);
    CHECK(h.graph().has_directed(p.vertex("A"), Y));
    CHECK(h.graph().has_directed(p.vertex("B"), Y));
    CHECK(h.graph().directed_edges().size() == 2);

    auto none = restricted_class(g, std::vector<PairwiseConstraint>{{ConstraintKind::ancestral, X, Y},
                                                                    {ConstraintKind::non_ancestral, X, Y}});
    CHECK(none.members.empty());
    CHECK_THROWS_AS(oracle_mpdag(none), ContractError);
    CHECK(restricted_class(g, DccSet{}).members.size() == 10);
    CHECK(oracle_mpdag(restricted_class(g, DccSet{})).graph() == p);
}

TEST_CASE("oracle MPDAG of a singleton class is the DAG") {
    gen::Rng rng(72);
    for (int it = 0; it < 100; ++it) {
        int n = gen::pick(rng, 2, 6);
        Pdag d = gen::random_dag(n, 0.5, rng);
        Cpdag g = dag_to_cpdag(Dag::trusted(d));
        DccSet all;
        for (auto e : d.directed_edges()) all.push_back({e.tail, VertexSet(n, {e.head})});
        auto rc = restricted_class(g, all);
        REQUIRE(rc.members.size() == 1);
        CHECK(oracle_mpdag(rc).graph() == d);
    }
}
