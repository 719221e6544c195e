#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/classes.hpp"
#include "../support/fixtures.hpp"
#include "../support/random_instances.hpp"
#include "causal_bgk/dcc.hpp"
#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/oracle.hpp"

using namespace causal_bgk;
using fixtures::clause;
using fixtures::set;

namespace {
Cpdag f4() { return Cpdag::from(parse_graph(fixtures::f4_text)); }
bool same_clauses(const DccSet& a, const DccSet& b) {
    if (a.size() != b.size()) return false;
    for (auto& c : a)
        if (std::find(b.begin(), b.end(), c) == b.end()) return false;
    return true;
}
}  // namespace

TEST_CASE("critical sets on the four-clique example") {
    Cpdag g = f4();
    const Pdag& p = g;
    CHECK(critical_set(g, p.vertex("A"), p.vertex("Y")) == set(p, {"B", "C"}));
    CHECK(critical_set(g, p.vertex("D"), p.vertex("Y")) == set(p, {"A", "X"}));
    CHECK(critical_set(g, p.vertex("Y"), p.vertex("A")).empty());
    Pdag two = parse_graph("a -- b\nvertex c\n");
    CHECK(critical_set(Cpdag::from(two), 0, 2).empty());
}

TEST_CASE("critical sets agree with chordless path enumeration") {
    gen::Rng rng(4);
    int checked = 0;
    for (int it = 0; it < 1500; ++it) {
        int n = gen::pick(rng, 2, 8);
        Cpdag g = gen::random_cpdag(n, gen::pick(rng, 2, 7) / 10.0, rng);
        int x = gen::pick(rng, 0, n - 1), y = gen::pick(rng, 0, n - 1);
        if (x == y) continue;
        auto cs = critical_set(g, x, y);
        std::set<int> mine(cs.begin(), cs.end());
        REQUIRE(mine == brute::critical_set(g, x, y));
        CHECK(cs.is_subset_of(g.graph().neighbors(x)));
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("translation of pairwise constraints") {
    Cpdag g = f4();
    const Pdag& p = g;
    Vertex A = p.vertex("A"), D = p.vertex("D"), Y = p.vertex("Y");
    auto na = constraints_to_dccs(g, {{ConstraintKind::non_ancestral, A, Y}});
    CHECK(na == DccSet{clause(p, "B", {"A"}), clause(p, "C", {"A"})});
    auto an = constraints_to_dccs(g, {{ConstraintKind::ancestral, D, Y}});
    CHECK(an == DccSet{clause(p, "D", {"A", "X"})});
    auto di = constraints_to_dccs(g, {{ConstraintKind::direct, A, p.vertex("B")}});
    CHECK(di == DccSet{clause(p, "A", {"B"})});
}

TEST_CASE("translated constraints select the same DAGs") {
    gen::Rng rng(8);
    for (int it = 0; it < 400; ++it) {
        int n = gen::pick(rng, 2, 6);
        Cpdag g = gen::random_cpdag(n, 0.5, rng);
        auto b = gen::random_constraints(g, rng, nullptr, 3);
        auto k = constraints_to_dccs(g, b);
        CHECK(classes::codes(restricted_class(g, b)) == classes::codes(restricted_class(g, k)));
    }
}

TEST_CASE("tiers") {
    Cpdag g = Cpdag::from(parse_graph(fixtures::chain_text));
    const Pdag& p = g;
    auto t = tiered_to_direct(g, {set(p, {"S"}), set(p, {"B"}), set(p, {"D"})});
    REQUIRE(t.size() == 2);
    CHECK(t[0] == PairwiseConstraint{ConstraintKind::direct, p.vertex("S"), p.vertex("B")});
    CHECK(t[1] == PairwiseConstraint{ConstraintKind::direct, p.vertex("B"), p.vertex("D")});
    auto t2 = tiered_to_direct(g, {set(p, {"S", "D"}), set(p, {"B"})});
    CHECK(t2.size() == 2);
    CHECK(tiered_to_direct(g, {p.all()}).empty());
    Pdag three = parse_graph("a -- b\nvertex c\n");
    CHECK(tiered_to_direct(Cpdag::from(three), {set(three, {"a", "b"}), set(three, {"c"})}).empty());
    CHECK_THROWS_AS(tiered_to_direct(g, {set(p, {"S"}), set(p, {"B"})}), ContractError);
    CHECK_THROWS_AS(tiered_to_direct(g, {set(p, {"S", "B"}), set(p, {"B", "D"})}), ContractError);
}

TEST_CASE("reduced form") {
    Cpdag g = Cpdag::from(parse_graph(fixtures::f6_text));
    const Pdag& p = g;
    auto r = reduced_form(g, fixtures::k6(p));
    CHECK(r == DccSet{clause(p, "A", {"X", "B"}), clause(p, "B", {"X", "A"}), clause(p, "X", {"B", "C"})});

    Pdag coll = parse_graph("a -> b\nc -> b\n");
    CHECK(reduced_form(Cpdag::from(coll), {clause(coll, "a", {"b"})}).empty());
    auto e = reduced_form(Cpdag::from(coll), {clause(coll, "b", {"a"})});
    REQUIRE(e.size() == 1);
    CHECK(e[0].heads.empty());
    CHECK_FALSE(check_consistency(Cpdag::from(coll), e));
}

TEST_CASE("reduced form keeps the restricted class") {
    gen::Rng rng(12);
    for (int it = 0; it < 400; ++it) {
        int n = gen::pick(rng, 2, 5);
        Cpdag g = gen::random_cpdag(n, 0.6, rng);
        auto k = gen::random_dccs(g, rng, nullptr, 4);
        CHECK(classes::codes(restricted_class(g, k)) == classes::codes(restricted_class(g, reduced_form(g, k))));
    }
}

TEST_CASE("restriction and potential leaf nodes") {
    Cpdag g = Cpdag::from(parse_graph(fixtures::f8_text));
    const Pdag& p = g;
    auto k = fixtures::k8(p);
    CHECK(restriction(g, k, set(p, {"A", "B", "E"})).empty());
    CHECK(restriction(g, k, VertexSet(p.size())).empty());
    CHECK(restriction(g, k, p.all()) == reduced_form(g, k));
    CHECK(restriction(g, k, set(p, {"B", "D", "E"})) == DccSet{clause(p, "D", {"E", "B"})});
    CHECK(potential_leaf_nodes(g, k, p.all()) == set(p, {"A", "C", "H"}));
    CHECK(potential_leaf_nodes(g, k, set(p, {"C"})) == set(p, {"C"}));

    Cpdag f = f4();
    const Pdag& q = f;
    DccSet kc{clause(q, "B", {"A"}), clause(q, "C", {"A"}), clause(q, "D", {"A", "X"})};
    CHECK(potential_leaf_nodes(f, kc, set(q, {"A", "B", "C", "D", "X"})).empty());
    CHECK_THROWS_AS(restriction(f, kc, set(q, {"B", "Y"})), ContractError);
}

TEST_CASE("consistency examples") {
    Cpdag g = f4();
    const Pdag& p = g;
    DccSet k{clause(p, "B", {"A"}), clause(p, "C", {"A"}), clause(p, "D", {"A", "X"})};
    CHECK_FALSE(check_consistency(g, k));
    CHECK(check_consistency(g, {}));
    // B and C are not adjacent, so B->A<-C would be a new v-structure
    CHECK_FALSE(check_consistency(g, {clause(p, "B", {"A"}), clause(p, "C", {"A"})}));
    CHECK(check_consistency(g, {clause(p, "B", {"A"}), clause(p, "D", {"A", "X"})}) == false);
    CHECK(check_consistency(g, {clause(p, "B", {"A"})}));
    CHECK(check_consistency(g, {clause(p, "D", {"A", "X"})}));
    for (Vertex v = 0; v < p.size(); ++v) CHECK_FALSE(check_consistency(g, {Dcc{v, VertexSet(p.size())}}));
}

TEST_CASE("consistency agrees with the oracle") {
    gen::Rng rng(13);
    int incons = 0;
    for (int it = 0; it < 2000; ++it) {
        int n = gen::pick(rng, 2, 7);
        Cpdag g = gen::random_cpdag(n, gen::pick(rng, 3, 8) / 10.0, rng);
        auto k = gen::random_dccs(g, rng, nullptr, 5);
        bool ora = !restricted_class(g, k).members.empty();
        REQUIRE(check_consistency(g, k) == ora);
        incons += !ora;
    }
    CHECK(incons > 100);
}

TEST_CASE("equivalency") {
    Cpdag g = f4();
    const Pdag& p = g;
    Vertex A = p.vertex("A"), Y = p.vertex("Y");
    DccSet k1{clause(p, "B", {"A"}), clause(p, "C", {"A"})};
    auto k2 = constraints_to_dccs(g, {{ConstraintKind::non_ancestral, A, Y}});
    CHECK(check_equivalency(g, k1, k2));
    CHECK(check_equivalency(g, k1, k1));
    CHECK_FALSE(check_equivalency(g, k1, {clause(p, "B", {"A"})}));
    DccSet bad{clause(p, "B", {"A"}), clause(p, "C", {"A"}), clause(p, "D", {"A", "X"})};
    // both sides empty
    CHECK(check_equivalency(g, k1, bad));
    CHECK(check_equivalency(g, bad, {Dcc{A, VertexSet(p.size())}}));
    CHECK_FALSE(check_equivalency(g, {clause(p, "B", {"A"})}, bad));
    CHECK_FALSE(check_equivalency(g, {clause(p, "B", {"A"})}, {clause(p, "D", {"A", "X"})}));

    gen::Rng rng(14);
    for (int it = 0; it < 1500; ++it) {
        int n = gen::pick(rng, 2, 5);
        Cpdag g2 = gen::random_cpdag(n, 0.6, rng);
        auto a = gen::random_dccs(g2, rng, nullptr, 3);
        auto b = gen::coin(rng, 0.3) ? reduced_form(g2, a) : gen::random_dccs(g2, rng, nullptr, 3);
        bool ora = classes::codes(restricted_class(g2, a)) == classes::codes(restricted_class(g2, b));
        REQUIRE(check_equivalency(g2, a, b) == ora);
        CHECK(check_equivalency(g2, b, a) == ora);
    }
}

TEST_CASE("redundancy") {
    Cpdag g = Cpdag::from(parse_graph(fixtures::f8_text));
    const Pdag& p = g;
    auto k = fixtures::k8(p);
    CHECK(is_redundant(g, k, clause(p, "E", {"A", "C"})));
    CHECK(is_redundant(g, {clause(p, "D", {"E", "B"})}, clause(p, "D", {"E", "B"})));
    DccSet others{clause(p, "E", {"A", "C"}), clause(p, "E", {"B", "F"}), clause(p, "G", {"B", "H"})};
    CHECK_FALSE(is_redundant(g, others, clause(p, "D", {"E", "B"})));
    Cpdag f = f4();
    const Pdag& q = f;
    DccSet bad{clause(q, "B", {"A"}), clause(q, "C", {"A"}), clause(q, "D", {"A", "X"})};
    CHECK_THROWS_AS(is_redundant(f, bad, clause(q, "A", {"X"})), InconsistentError);

    gen::Rng rng(15);
    for (int it = 0; it < 800; ++it) {
        int n = gen::pick(rng, 2, 6);
        Pdag d = gen::random_dag(n, 0.5, rng);
        Cpdag g2 = dag_to_cpdag(Dag::trusted(d));
        auto k2 = gen::random_dccs(g2, rng, &d, 3);
        auto c = gen::random_dccs(g2, rng, nullptr, 1);
        if (c.empty()) continue;
        DccSet plus = k2;
        plus.push_back(c[0]);
        bool ora = classes::codes(restricted_class(g2, k2)) == classes::codes(restricted_class(g2, plus));
        REQUIRE(is_redundant(g2, k2, c[0]) == ora);
    }
}

TEST_CASE("knowledge sessions") {
    Cpdag g = f4();
    const Pdag& p = g;
    auto s0 = KnowledgeSession::start(g);
    CHECK(s0.current.graph() == p);
    auto r1 = session_add(s0, clause(p, "D", {"A", "X"}));
    REQUIRE(std::holds_alternative<KnowledgeSession>(r1));
    auto& s1 = std::get<KnowledgeSession>(r1);
    const Pdag& h1 = s1.current;
    CHECK(h1.has_directed(h1.vertex("A"), h1.vertex("B")));
    CHECK(h1.has_directed(h1.vertex("A"), h1.vertex("C")));
    // whichever clause comes next is refused
    for (const char* t : {"B", "C"}) {
        auto r = session_add(s1, clause(p, t, {"A"}));
        REQUIRE(std::holds_alternative<SessionRejection>(r));
        CHECK(std::get<SessionRejection>(r).clause == clause(p, t, {"A"}));
        CHECK(std::get<SessionRejection>(r).forcing_parents == set(p, {"A"}));
    }

    // other order: B => {A} forces A -> D and X -> D, so D => {A,X} is refused
    auto rb = session_add(s0, clause(p, "B", {"A"}));
    REQUIRE(std::holds_alternative<KnowledgeSession>(rb));
    auto& sb = std::get<KnowledgeSession>(rb);
    CHECK(sb.current.graph().has_directed(p.vertex("A"), p.vertex("D")));
    CHECK(sb.current.graph().has_directed(p.vertex("X"), p.vertex("D")));
    auto rd = session_add(sb, clause(p, "D", {"A", "X"}));
    REQUIRE(std::holds_alternative<SessionRejection>(rd));
    CHECK(std::get<SessionRejection>(rd).forcing_parents == set(p, {"A", "X"}));

    // a satisfied clause leaves the MPDAG alone
    auto again = session_add(s1, clause(p, "A", {"B"}));
    REQUIRE(std::holds_alternative<KnowledgeSession>(again));
    CHECK(std::get<KnowledgeSession>(again).current == s1.current);

    gen::Rng rng(16);
    int rejected = 0;
    for (int it = 0; it < 500; ++it) {
        int n = gen::pick(rng, 2, 7);
        Cpdag g2 = gen::random_cpdag(n, 0.5, rng);
        auto s = KnowledgeSession::start(g2);
        for (auto& c : gen::random_dccs(g2, rng, nullptr, 5)) {
            DccSet all = s.accepted;
            all.push_back(c);
            bool batch = check_consistency(g2, all);
            auto r = session_add(s, c);
            REQUIRE(std::holds_alternative<KnowledgeSession>(r) == batch);
            if (batch) {
                s = std::get<KnowledgeSession>(r);
                CHECK(s.current == construct_mpdag(g2, s.accepted));
            } else {
                ++rejected;
            }
        }
    }
    CHECK(rejected > 20);
}
