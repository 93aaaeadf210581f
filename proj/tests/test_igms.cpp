#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "igms.hpp"
#include "network.hpp"
#include "siphons.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace crnkit;

namespace {

using Arcs = std::vector<std::pair<int, int>>;

std::vector<std::string> species_names(const ReactionNetwork& net, const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(net.species[static_cast<std::size_t>(i)]);
    return out;
}

IgmsGraph synthetic(int n, const Arcs& arcs) {
    IgmsGraph g;
    for (int i = 0; i < n; ++i) g.nodes.push_back({i});
    for (const auto& [a, b] : arcs) g.edges.push_back({a, b, 0});
    return g;
}

}  // namespace

TEST_CASE("interaction graph of the five-cycle model is the complete digraph on three nodes") {
    ReactionNetwork net = load_fixture("fivecycles");
    IgmsGraph g = build_igms(net);
    REQUIRE(g.nodes.size() == 3);
    CHECK(species_names(net, g.nodes[0]) == std::vector<std::string>{"I1", "I2"});
    CHECK(species_names(net, g.nodes[1]) == std::vector<std::string>{"I1", "I12"});
    CHECK(species_names(net, g.nodes[2]) == std::vector<std::string>{"I2", "I12"});
    CHECK(g.arcs() == Arcs{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});

    // The arc {I1,I2} -> {I1,I12} carries exactly the witnesses that consume
    // the first pair and net-produce into the second.
    std::set<int> witnesses;
    for (const auto& e : g.edges)
        if (e.from == 0 && e.to == 1) witnesses.insert(e.reaction);
    CHECK(witnesses == std::set<int>{2, 4, 6});

    std::vector<std::vector<int>> cycles = elementary_cycles(g);
    CHECK(cycles == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {0, 2, 1}});

    AmsdVerdict v = amsd_check(net, g);
    CHECK_FALSE(v.is_partition);  // nodes overlap pairwise
    CHECK_FALSE(v.is_acyclic);
    CHECK(v.species_order.empty());
}

TEST_CASE("three-tier chain block-triangularizes") {
    ReactionNetwork net = load_fixture("threetier");
    IgmsGraph g = build_igms(net);
    CHECK(g.arcs() == Arcs{{0, 1}, {1, 2}});
    CHECK(elementary_cycles(g).empty());

    AmsdVerdict v = amsd_check(net, g);
    CHECK(v.is_partition);
    CHECK(v.is_acyclic);
    CHECK(v.topo_order == std::vector<int>{0, 1, 2});
    CHECK(species_names(net, v.species_order) == std::vector<std::string>{"I1", "I2", "I3"});
}

TEST_CASE("two-strain cross-immunity model has no cross arcs") {
    ReactionNetwork net = load_fixture("gavish");
    IgmsGraph g = build_igms(net);
    REQUIRE(g.nodes.size() == 2);
    CHECK(g.arcs().empty());
    AmsdVerdict v = amsd_check(net, g);
    CHECK(v.is_partition);
    CHECK(v.is_acyclic);
    CHECK(species_names(net, v.species_order) ==
          std::vector<std::string>{"I1", "I21", "I2", "I12"});
}

TEST_CASE("mutation-coupled strains form a two-cycle") {
    for (const char* name : {"ex3", "gk"}) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        IgmsGraph g = build_igms(net);
        REQUIRE(g.nodes.size() == 2);
        CHECK(g.arcs() == Arcs{{0, 1}, {1, 0}});
        CHECK(elementary_cycles(g) == std::vector<std::vector<int>>{{0, 1}});
        AmsdVerdict v = amsd_check(net, g);
        CHECK_FALSE(v.is_partition);  // the shared strain sits in both nodes
        CHECK_FALSE(v.is_acyclic);
    }
}

TEST_CASE("antisymmetric cross-protection model is an acyclic fan-in") {
    ReactionNetwork net = load_fixture("gk-antisym");
    AmsdVerdict v = amsd_check(net);
    CHECK(v.is_partition);
    CHECK(v.is_acyclic);
    CHECK(v.topo_order == std::vector<int>{0, 1, 2});
    CHECK(species_names(net, v.species_order) == std::vector<std::string>{"I1", "I2", "I3"});
    CHECK(build_igms(net).arcs() == Arcs{{0, 2}, {1, 2}});
}

TEST_CASE("non-critical node spoils the partition even when the graph is acyclic") {
    ReactionNetwork net = load_fixture("ex4");
    IgmsGraph g = build_igms(net);
    REQUIRE(g.nodes.size() == 3);  // {I1}, {I2}, {D,E}
    CHECK(g.arcs().empty());
    AmsdVerdict v = amsd_check(net, g);
    CHECK(v.is_acyclic);
    CHECK_FALSE(v.is_partition);  // {D,E} is not part of the total siphon
    CHECK(v.topo_order == std::vector<int>{0, 1, 2});
    CHECK(v.species_order.empty());
}

TEST_CASE("net production and product touching can disagree") {
    ReactionNetwork net = parse_network(
        "reactions:\n"
        "A -> 2*A @ a*A\n"
        "B -> 2*B @ bb*B\n"
        "A + 2*B -> C + B @ c*A*B*B\n"
        "C -> 0 @ d*C\n");
    std::vector<std::vector<int>> mins = minimal_siphons(net);
    REQUIRE(mins.size() == 2);

    IgmsGraph net_rule = build_igms(net, mins, IgmsEdgeRule::net_producing);
    CHECK(net_rule.arcs().empty());

    IgmsGraph touch_rule = build_igms(net, mins, IgmsEdgeRule::touching);
    CHECK(touch_rule.arcs() == Arcs{{0, 1}});
    REQUIRE(touch_rule.edges.size() == 1);
    CHECK(touch_rule.edges[0].reaction == 2);
}

TEST_CASE("cycle enumeration matches brute force on a complete digraph") {
    Arcs all;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) all.emplace_back(i, j);
    IgmsGraph k4 = synthetic(4, all);
    std::vector<std::vector<int>> fast = elementary_cycles(k4);
    CHECK(fast.size() == 20);
    CHECK(fast == elementary_cycles_bruteforce(k4));
}

TEST_CASE("cycle enumeration matches brute force on random digraphs") {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    auto rnd = [&]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s >> 11) / 9007199254740992.0;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Arcs arcs;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j && rnd() < 0.4) arcs.emplace_back(i, j);
        IgmsGraph g = synthetic(6, arcs);
        CAPTURE(trial);
        CHECK(elementary_cycles(g) == elementary_cycles_bruteforce(g));
    }
}

TEST_CASE("single-node graph is trivially acyclic") {
    ReactionNetwork net = load_fixture("sirs");
    IgmsGraph g = build_igms(net);
    REQUIRE(g.nodes.size() == 1);
    CHECK(g.arcs().empty());
    CHECK(elementary_cycles(g).empty());
    AmsdVerdict v = amsd_check(net, g);
    CHECK(v.is_partition);
    CHECK(v.is_acyclic);
    CHECK(species_names(net, v.species_order) == std::vector<std::string>{"I"});
}

TEST_CASE("dot export names nodes by their species and arcs by witness reactions") {
    ReactionNetwork net = load_fixture("threetier");
    IgmsGraph g = build_igms(net);
    std::string dot = igms_dot(net, g);
    CHECK(dot.find("digraph igms") != std::string::npos);
    CHECK(dot.find("{I1}") != std::string::npos);
    CHECK(dot.find("{I2}") != std::string::npos);
    CHECK(dot.find("{I3}") != std::string::npos);
    CHECK(dot.find("n0 -> n1 [label=\"r4\"]") != std::string::npos);
    CHECK(dot.find("n1 -> n2 [label=\"r6\"]") != std::string::npos);
}
