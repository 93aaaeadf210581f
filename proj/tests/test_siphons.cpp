#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "network.hpp"
#include "siphons.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace crnkit;
using testsupport::RatGen;

namespace {

std::vector<int> idx(const ReactionNetwork& net, std::initializer_list<const char*> names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(net.species_index(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::vector<int>> siphon_set(const std::vector<std::vector<int>>& v) {
    return std::set<std::vector<int>>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("minimal siphons match the documented sets per fixture") {
    auto expect = [](const std::string& name,
                     std::vector<std::vector<const char*>> sets) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        std::set<std::vector<int>> want;
        for (const auto& s : sets) {
            std::vector<int> w;
            for (const char* n : s) w.push_back(net.species_index(n));
            std::sort(w.begin(), w.end());
            want.insert(w);
        }
        CHECK(siphon_set(minimal_siphons(net)) == want);
    };

    expect("sirs", {{"I"}});
    expect("ex3", {{"I1", "I3"}, {"I2", "I3"}});
    expect("ex4", {{"I1"}, {"I2"}, {"D", "E"}});
    expect("si2v", {{"I1"}, {"I2"}});
    expect("gavish", {{"I1", "I21"}, {"I2", "I12"}});
    expect("gk", {{"I1", "I3"}, {"I2", "I3"}});
    expect("gk-antisym", {{"I1"}, {"I2"}, {"I3"}});
    expect("fivecycles", {{"I1", "I2"}, {"I1", "I12"}, {"I2", "I12"}});
    expect("threetier", {{"I1"}, {"I2"}, {"I3"}});
    expect("mayleonard", {{"X1"}, {"X2"}, {"X3"}});
    expect("sdas-ex9", {{"I1"}, {"I2"}});
    expect("sdas-ex10", {{"I1"}, {"I2"}});
    expect("sdas-ex11", {{"I1"}, {"I2"}, {"I3"}});
    expect("sdas-ex12", {{"I1"}, {"I2"}});
}

TEST_CASE("branch-and-bound agrees with brute force on every fixture") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        CHECK(minimal_siphons(net) == minimal_siphons_bruteforce(net));
    }
}

TEST_CASE("basic siphon membership checks") {
    ReactionNetwork net = load_fixture("sirs");
    CHECK(is_siphon(net, idx(net, {"I"})));
    CHECK_FALSE(is_siphon(net, idx(net, {"S"})));
    CHECK_FALSE(is_siphon(net, idx(net, {"R"})));
    CHECK(is_siphon(net, {}));
    CHECK(is_siphon(net, idx(net, {"S", "I", "R"})));
}

TEST_CASE("input species never appear in any siphon") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        std::vector<bool> input = input_species(net, stoichiometry(net));
        std::size_t n = net.species.size();
        REQUIRE(n <= 12);
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> w;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) w.push_back(static_cast<int>(i));
            if (!is_siphon(net, w)) continue;
            for (int i : w) CHECK_FALSE(input[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("criticality verdicts and conservation certificates") {
    ReactionNetwork net = load_fixture("ex4");
    StoichStructure st = stoichiometry(net);

    CriticalResult de = is_critical(net, st, idx(net, {"D", "E"}));
    CHECK_FALSE(de.critical);
    REQUIRE(de.conservation.has_value());
    CHECK(de.conservation->verify(net, st));
    // The conserved quantity is supported on {D, E} with positive weights.
    for (std::size_t i = 0; i < net.species.size(); ++i) {
        bool in_set = net.species[i] == "D" || net.species[i] == "E";
        CHECK((de.conservation->vec[i] != 0) == in_set);
    }

    CHECK(is_critical(net, st, idx(net, {"I1"})).critical);
    CHECK(is_critical(net, st, idx(net, {"I2"})).critical);

    ReactionNetwork sirs = load_fixture("sirs");
    StoichStructure sst = stoichiometry(sirs);
    CHECK(is_critical(sirs, sst, idx(sirs, {"I"})).critical);
}

TEST_CASE("total siphon is the union of minimal critical siphons") {
    auto total = [](const std::string& name) {
        ReactionNetwork net = load_fixture(name);
        std::vector<int> t = total_siphon(net, stoichiometry(net));
        std::vector<std::string> out;
        for (int i : t) out.push_back(net.species[static_cast<std::size_t>(i)]);
        return out;
    };
    CHECK(total("gavish") == std::vector<std::string>{"I1", "I2", "I21", "I12"});
    CHECK(total("ex4") == std::vector<std::string>{"I1", "I2"});
    CHECK(total("sirs") == std::vector<std::string>{"I"});
    CHECK(total("sdas-ex12") == std::vector<std::string>{"I1", "I2"});
    CHECK(total("mayleonard") == std::vector<std::string>{"X1", "X2", "X3"});
}

TEST_CASE("siphons inside a universe, with cap refusal") {
    ReactionNetwork net = load_fixture("si2v");
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    std::vector<std::vector<int>> inside = siphons_within(net, ts);
    CHECK(inside.size() == 4);  // {}, {I1}, {I2}, {I1,I2}
    CHECK(std::find(inside.begin(), inside.end(), std::vector<int>{}) != inside.end());
    CHECK(std::find(inside.begin(), inside.end(), ts) != inside.end());
    CHECK_THROWS_AS(siphons_within(net, ts, 2), CrnError);
}

TEST_CASE("every certificate re-verifies exactly and verdicts are consistent") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        StoichStructure st = stoichiometry(net);
        SiphonAnalysis an = analyze_siphons(net);
        CHECK(an.dichotomy_holds);
        for (const SiphonReport& rep : an.siphons) {
            CHECK(rep.is_minimal);
            CHECK((rep.is_critical != rep.conservation.has_value()));
            CHECK(rep.is_drainable == rep.drain.has_value());
            CHECK(rep.is_self_replicable_restricted == rep.replicate.has_value());
            CHECK(rep.is_self_replicable_strict == rep.replicate_strict.has_value());
            CHECK(rep.is_autocatalytic == rep.autocat.has_value());
            for (const auto* cert :
                 {&rep.conservation, &rep.drain, &rep.replicate, &rep.replicate_strict, &rep.autocat})
                if (cert->has_value()) CHECK((*cert)->verify(net, st));
            // Implication chain: exclusive => autocatalytic => strict => restricted.
            if (rep.is_exclusive) CHECK(rep.is_autocatalytic);
            if (rep.is_autocatalytic) CHECK(rep.is_self_replicable_strict);
            if (rep.is_self_replicable_strict) CHECK(rep.is_self_replicable_restricted);
            if (rep.is_critical)
                CHECK((rep.is_drainable || rep.is_self_replicable_restricted));
        }
    }
}

TEST_CASE("siphon faces are forward invariant under exact evaluation") {
    RatGen gen(20260822);
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        ReactionNetwork net = load_fixture(name);
        std::vector<Polynomial> rhs = build_rhs(net);
        for (const std::vector<int>& w : minimal_siphons(net)) {
            for (int trial = 0; trial < 32; ++trial) {
                std::vector<Rational> point(net.nvars());
                for (std::size_t i = 0; i < net.species.size(); ++i)
                    point[i] = gen.next(0, 32, 8);
                for (std::size_t p = 0; p < net.params.size(); ++p)
                    point[net.param_var(p)] = gen.next(1, 64, 16);
                for (int i : w) point[static_cast<std::size_t>(i)] = 0;
                for (int i : w)
                    CHECK(rhs[static_cast<std::size_t>(i)].eval_exact(point) == 0);
            }
        }
    }
}

TEST_CASE("drainability and replicability verdicts on known structures") {
    ReactionNetwork ex4 = load_fixture("ex4");
    StoichStructure st4 = stoichiometry(ex4);
    std::vector<int> de = idx(ex4, {"D", "E"});
    CHECK_FALSE(is_drainable(ex4, st4, de).verdict);
    CHECK_FALSE(is_self_replicable(ex4, st4, de, ReplicableMode::restricted).verdict);

    ReactionNetwork e9 = load_fixture("sdas-ex9");
    StoichStructure st9 = stoichiometry(e9);
    for (const char* s : {"I1", "I2"}) {
        std::vector<int> w = idx(e9, {s});
        CHECK(is_drainable(e9, st9, w).verdict);
        CHECK_FALSE(is_self_replicable(e9, st9, w, ReplicableMode::restricted).verdict);
    }

    ReactionNetwork e10 = load_fixture("sdas-ex10");
    StoichStructure st10 = stoichiometry(e10);
    for (const char* s : {"I1", "I2"}) {
        std::vector<int> w = idx(e10, {s});
        CHECK(is_self_replicable(e10, st10, w, ReplicableMode::restricted).verdict);
        CHECK(is_autocatalytic_set(e10, st10, w).verdict);
    }
}

TEST_CASE("restricted and strict replicability can disagree") {
    ReactionNetwork net = parse_network("reactions:\nA -> B @ k*A\n");
    StoichStructure st = stoichiometry(net);
    std::vector<int> w = {net.species_index("B")};
    FluxResult restricted = is_self_replicable(net, st, w, ReplicableMode::restricted);
    FluxResult strict = is_self_replicable(net, st, w, ReplicableMode::strict);
    CHECK(restricted.verdict);
    CHECK_FALSE(strict.verdict);
    REQUIRE(restricted.flux.has_value());
    CHECK(restricted.flux->verify(net, st));
}

TEST_CASE("exclusivity of explicit reaction subsets") {
    ReactionNetwork e9 = load_fixture("sdas-ex9");
    std::vector<int> m = idx(e9, {"I1", "I2"});
    // Inner reactions: the ones whose reactants or products touch {I1, I2}.
    std::vector<int> inner;
    for (std::size_t r = 0; r < e9.reactions.size(); ++r) {
        bool touches = false;
        for (int i : m) {
            if (e9.reactions[r].reactants.count(i) || e9.reactions[r].products.count(i))
                touches = true;
        }
        if (touches) inner.push_back(static_cast<int>(r));
    }
    CHECK(inner.size() == 4);
    CHECK(is_exclusive(e9, inner, m));

    std::vector<int> with_inflow = inner;
    with_inflow.push_back(0);  // 0 -> S consumes nothing
    std::sort(with_inflow.begin(), with_inflow.end());
    CHECK_FALSE(is_exclusive(e9, with_inflow, m));
}

TEST_CASE("autocatalytic cores on the staged examples") {
    auto cores_of = [](const std::string& name) {
        ReactionNetwork net = load_fixture(name);
        StoichStructure st = stoichiometry(net);
        bool truncated = true;
        std::vector<Core> cores = autocatalytic_cores(net, st, 4, &truncated);
        CHECK_FALSE(truncated);
        for (const Core& c : cores) CHECK(c.flux.verify(net, st));
        return std::make_pair(net, cores);
    };

    auto [e9, cores9] = cores_of("sdas-ex9");
    CHECK(cores9.empty());

    auto [e10, cores10] = cores_of("sdas-ex10");
    CHECK(cores10.size() == 3);
    for (const Core& c : cores10) {
        CHECK(c.species.size() == 1);
        CHECK(c.reactions.size() == 1);
        std::string sp = e10.species[static_cast<std::size_t>(c.species[0])];
        CHECK((sp == "I1" || sp == "I2"));
    }

    auto [e11, cores11] = cores_of("sdas-ex11");
    CHECK(cores11.size() == 3);
    std::set<std::string> tiers;
    for (const Core& c : cores11) {
        REQUIRE(c.species.size() == 1);
        tiers.insert(e11.species[static_cast<std::size_t>(c.species[0])]);
    }
    CHECK(tiers == std::set<std::string>{"I1", "I2", "I3"});

    auto [sirs, cores_sirs] = cores_of("sirs");
    REQUIRE(cores_sirs.size() == 1);
    CHECK(sirs.species[static_cast<std::size_t>(cores_sirs[0].species[0])] == "I");
}

TEST_CASE("core search reports truncation honestly") {
    ReactionNetwork net = parse_network(
        "reactions:\n"
        "A -> 2*B @ k1*A\n"
        "B -> 2*A @ k2*B\n");
    StoichStructure st = stoichiometry(net);

    bool truncated = false;
    std::vector<Core> none = autocatalytic_cores(net, st, 1, &truncated);
    CHECK(none.empty());
    CHECK(truncated);

    std::vector<Core> both = autocatalytic_cores(net, st, 2, &truncated);
    CHECK_FALSE(truncated);
    REQUIRE(both.size() == 1);
    CHECK(both[0].species.size() == 2);
    CHECK(both[0].reactions.size() == 2);
    CHECK(both[0].flux.verify(net, st));
}
