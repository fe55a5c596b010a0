#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace tropcone;
using fx::pt;
using fx::sec;

namespace {

bool has_arc(const DirectedHypergraph& g, IndexSet t, IndexSet h) {
    for (const auto& a : g.arcs)
        if (a.tail == t && a.head == h) return true;
    return false;
}

// Gamma \ {indices} helper over the cyclic list (1-based indices).
std::vector<HalfSpace> cyclic_minus(const std::vector<int>& drop) {
    auto gamma = fx::cyclic_gamma();
    std::vector<HalfSpace> out;
    for (size_t k = 0; k < gamma.size(); ++k)
        if (std::find(drop.begin(), drop.end(), static_cast<int>(k) + 1) == drop.end())
            out.push_back(gamma[k]);
    return out;
}

} // namespace

TEST_CASE("reachability on a small worked hypergraph") {
    DirectedHypergraph g;
    g.n = 7;
    g.arcs = {{sec({1}), sec({2})}, {sec({2, 3}), sec({4, 5})}, {sec({5, 6}), sec({7})}};
    CHECK(reachable_set(g, sec({1, 3, 6})) == IndexSet::full(7));
    CHECK(reachable_set(g, sec({1, 3})) == sec({1, 2, 3, 4, 5}));
    DirectedHypergraph empty;
    empty.n = 7;
    CHECK(reachable_set(empty, sec({2, 6})) == sec({2, 6}));
}

TEST_CASE("reachability is monotone and idempotent") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> d(0, 6), m(1, 3);
    for (int t = 0; t < 100; ++t) {
        DirectedHypergraph g;
        g.n = 7;
        for (int a = 0; a < 5; ++a) {
            IndexSet T, H;
            for (int k = 0; k < m(rng); ++k) T.add(d(rng));
            for (int k = 0; k < m(rng); ++k) H.add(d(rng));
            g.arcs.push_back({T, H});
        }
        IndexSet I, extra;
        for (int k = 0; k < m(rng); ++k) I.add(d(rng));
        extra = I;
        extra.add(d(rng));
        IndexSet cI = reachable_set(g, I);
        CHECK(cI.subset_of(reachable_set(g, extra)));
        CHECK(reachable_set(g, cI) == cI);
    }
}

TEST_CASE("tangent hypergraph at v1 for the five-half-space list") {
    auto list = fx::five_list();
    TangentHypergraph g = tangent_hypergraph(list, pt({0, 1, 3}));
    CHECK(g.graph.arcs.size() == 3);
    CHECK(has_arc(g.graph, sec({2}), sec({1})));
    CHECK(has_arc(g.graph, sec({3}), sec({1})));
    CHECK(has_arc(g.graph, sec({1}), sec({3})));
    // arcs depend only on argmax sets: shifting one member's alpha by a
    // common constant changes nothing
    auto shifted = list;
    shifted[0] = fx::ghs(3, {2}, {1}, {{2, "5"}, {1, "4"}});
    TangentHypergraph g2 = tangent_hypergraph(shifted, pt({0, 1, 3}));
    CHECK(g2.graph.arcs.size() == 3);
    for (const auto& a : g.graph.arcs) CHECK(has_arc(g2.graph, a.tail, a.head));
}

TEST_CASE("tangent hypergraph rejects outside points naming the member") {
    auto list = fx::five_list();
    CHECK_THROWS_WITH_AS(tangent_hypergraph(list, pt({0, 20, 0})),
                         doctest::Contains("#"), PreconditionError);
}

TEST_CASE("cyclic tangent hypergraphs") {
    TangentHypergraph a = tangent_hypergraph(cyclic_minus({11}), pt({0, 2, 5, 8}));
    CHECK(a.graph.arcs.size() == 3);
    CHECK(has_arc(a.graph, sec({4}), sec({3})));
    CHECK(has_arc(a.graph, sec({2}), sec({3})));
    CHECK(has_arc(a.graph, sec({1, 3}), sec({2})));

    TangentHypergraph b = tangent_hypergraph(cyclic_minus({2, 3}), pt({0, 3, 7, 11}));
    CHECK(b.graph.arcs.size() == 3);
    CHECK(has_arc(b.graph, sec({3}), sec({4})));
    CHECK(has_arc(b.graph, sec({2}), sec({3, 4})));
    CHECK(has_arc(b.graph, sec({4}), sec({3})));
}

TEST_CASE("redundancy goldens") {
    CHECK(is_redundant(HalfSpace(pt({0, 1, 3}), sec({2})), fx::five_list()));
    CHECK(is_redundant(HalfSpace(pt({0, 2, 5, 8}), sec({1, 4})), cyclic_minus({11})));
    CHECK_FALSE(
        is_redundant(HalfSpace(pt({0, 3, 7, 11}), sec({1, 3})), cyclic_minus({2, 3})));
}

TEST_CASE("witness points") {
    HalfSpace h(pt({0, 3, 7, 11}), sec({1, 3}));
    auto gamma = cyclic_minus({2, 3});
    Point w = witness_point(h, gamma);
    for (const auto& g : gamma) CHECK(g.member(w));
    CHECK_FALSE(h.member(w));

    // the remaining green half-space is not implied by the other four
    auto five = fx::five_list();
    HalfSpace green(pt({0, 6, 1}), sec({3}));
    std::vector<GeneralHalfSpace> others;
    for (size_t k = 0; k < five.size(); ++k)
        if (!(five[k] == green.general())) others.push_back(five[k]);
    REQUIRE(others.size() == 4);
    Point w2 = witness_point(green, others);
    for (const auto& g : others) CHECK(g.member(w2));
    CHECK_FALSE(green.member(w2));

    // empty list: the off-sector bump works immediately
    Point w3 = witness_point(green, std::vector<HalfSpace>{});
    CHECK_FALSE(green.member(w3));

    CHECK_THROWS_AS(
        witness_point(HalfSpace(pt({0, 1, 3}), sec({2})),
                      std::vector<GeneralHalfSpace>(fx::five_list())),
        PreconditionError);
}

TEST_CASE("redundant verdicts corroborated near the apex") {
    HalfSpace h(pt({0, 2, 5, 8}), sec({1, 4}));
    auto gamma = cyclic_minus({11});
    REQUIRE(is_redundant(h, gamma));
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> d(-4, 4);
    int found = 0;
    for (int t = 0; t < 5000 && found < 300; ++t) {
        std::vector<Rat> coords;
        for (int i = 0; i < 4; ++i) {
            Rat noise(d(rng), 4);
            noise.canonicalize();
            coords.emplace_back(h.apex()[i].value() + noise);
        }
        Point x = Point::finite(std::move(coords));
        bool in_all = true;
        for (const auto& g : gamma)
            if (!g.member(x)) { in_all = false; break; }
        if (!in_all) continue;
        ++found;
        CHECK(h.member(x));
    }
    CHECK(found >= 300);
}

TEST_CASE("apex digraph at (0,3,7,11)") {
    Cone c = fx::cyclic_cone();
    Point a = pt({0, 3, 7, 11});
    auto Ea = enumerate_Ea(c, a);
    ApexDigraph dg = apex_digraph(cyclic_minus({2, 3}), a, Ea);
    REQUIRE(dg.nodes.size() == 7);
    auto node = [&](const std::vector<int>& s) {
        auto it = std::find(dg.nodes.begin(), dg.nodes.end(), sec(s));
        REQUIRE(it != dg.nodes.end());
        return static_cast<int>(it - dg.nodes.begin());
    };
    auto arc = [&](int u, int v) {
        return std::find(dg.adjacency[u].begin(), dg.adjacency[u].end(), v) !=
               dg.adjacency[u].end();
    };
    int n12 = node({1, 2}), n13 = node({1, 3}), n14 = node({1, 4}),
        n134 = node({1, 3, 4});
    CHECK(arc(n12, n13));
    CHECK(arc(n12, n14));
    CHECK(arc(n12, n134));
    CHECK_FALSE(arc(n13, n12));
    CHECK(arc(n13, n14));
    CHECK(arc(n14, n13));
    CHECK(arc(n13, n134));
    CHECK(arc(n134, n13));

    SccQuotient q = scc_quotient(dg.adjacency);
    CHECK_FALSE(q.strongly_connected());
    int maximal = 0;
    for (const auto& comp : q.components) {
        if (!comp.maximal) continue;
        ++maximal;
        std::vector<IndexSet> members;
        for (int v : comp.members) members.push_back(dg.nodes[v]);
        CHECK(members.size() == 3);
        for (auto s : {sec({1, 3}), sec({1, 4}), sec({1, 3, 4})})
            CHECK(std::find(members.begin(), members.end(), s) != members.end());
        CHECK(dg.nodes[principal_element(dg, comp)] == sec({1, 3, 4}));
    }
    CHECK(maximal == 1);
}

TEST_CASE("apex digraph at (0,2,5,8) is strongly connected") {
    Cone c = fx::cyclic_cone();
    Point a = pt({0, 2, 5, 8});
    auto Ea = enumerate_Ea(c, a);
    REQUIRE(Ea.size() == 4);
    for (auto s : {sec({1, 4}), sec({1, 2, 4}), sec({1, 3, 4}), sec({1, 2, 3, 4})})
        CHECK(std::find(Ea.begin(), Ea.end(), s) != Ea.end());
    ApexDigraph dg = apex_digraph(cyclic_minus({11}), a, Ea);
    CHECK(scc_quotient(dg.adjacency).strongly_connected());
}

TEST_CASE("apex digraph preconditions") {
    Cone c = fx::cyclic_cone();
    Point a = pt({0, 2, 5, 8});
    CHECK_THROWS_AS(apex_digraph(fx::cyclic_gamma(), a, enumerate_Ea(c, a)),
                    PreconditionError);
}

TEST_CASE("scc quotient degenerate shapes") {
    SccQuotient single = scc_quotient({{}});
    CHECK(single.components.size() == 1);
    CHECK(single.components[0].maximal);
    SccQuotient cycle = scc_quotient({{1}, {2}, {0}});
    CHECK(cycle.strongly_connected());
    CHECK(cycle.components[0].maximal);
}

TEST_CASE("closures are representation independent") {
    // adding an implied member active nowhere new leaves closures unchanged
    auto lambda = cyclic_minus({2, 3});
    Point a = pt({0, 3, 7, 11});
    Cone c = fx::cyclic_cone();
    auto Ea = enumerate_Ea(c, a);
    ApexDigraph base = apex_digraph(lambda, a, Ea);
    auto padded = lambda;
    padded.push_back(HalfSpace(pt({0, 1, 5, 9}), sec({2})));  // duplicate of H9
    ApexDigraph more = apex_digraph(padded, a, Ea);
    for (size_t v = 0; v < Ea.size(); ++v) CHECK(base.closure[v] == more.closure[v]);
}
