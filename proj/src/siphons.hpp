#pragma once

#include "lp.hpp"
#include "network.hpp"

#include <optional>
#include <vector>

namespace crnkit {

// Exact witness attached to a verdict; re-verifiable without repeating the
// search that produced it.
struct Certificate {
    enum class Kind { conservation, drain_flux, replicate_flux, core_flux };
    Kind kind;
    // Over species (conservation) or reactions (fluxes). Full-length vector;
    // support is confined to the relevant sets.
    std::vector<Rational> vec;
    std::vector<int> species_set;   // the set W (or core U) the verdict refers to
    std::vector<int> reaction_set;  // core_flux only: the reaction subset R_U
    bool strict = false;            // flux certificates: rows off the set must vanish

    bool verify(const ReactionNetwork& net, const StoichStructure& st) const;
};

bool is_siphon(const ReactionNetwork& net, const std::vector<int>& w);

// Branch-and-bound enumeration of minimal siphons; input species (external
// arrivals) can never participate and are pruned up front. Deterministic
// lexicographic order of sorted index sets.
std::vector<std::vector<int>> minimal_siphons(const ReactionNetwork& net);

// Exhaustive reference enumeration, usable for small networks only.
std::vector<std::vector<int>> minimal_siphons_bruteforce(const ReactionNetwork& net);

// All siphons contained in `universe` (the empty set counts; it is trivially
// a siphon). Refuses when more than `cap` exist.
std::vector<std::vector<int>> siphons_within(const ReactionNetwork& net,
                                             const std::vector<int>& universe,
                                             std::size_t cap = 20);

struct CriticalResult {
    bool critical = false;
    std::optional<Certificate> conservation;  // present when not critical
};
// A siphon is critical when it contains the support of no nonnegative,
// nonzero left-null vector of gamma. Decided by exact LP feasibility.
CriticalResult is_critical(const ReactionNetwork& net, const StoichStructure& st,
                           const std::vector<int>& w);

struct FluxResult {
    bool verdict = false;
    std::optional<Certificate> flux;
};

// exists v >= 0 with (gamma v)_i < 0 for all i in W (strictness via LP max t).
FluxResult is_drainable(const ReactionNetwork& net, const StoichStructure& st,
                        const std::vector<int>& w);

enum class ReplicableMode {
    restricted,  // only rows inside W constrained
    strict,      // additionally (gamma v)_i = 0 outside W
};
FluxResult is_self_replicable(const ReactionNetwork& net, const StoichStructure& st,
                              const std::vector<int>& w, ReplicableMode mode);

// Strict self-replication where additionally every species of W is consumed
// by at least one reaction carrying flux.
FluxResult is_autocatalytic_set(const ReactionNetwork& net, const StoichStructure& st,
                                const std::vector<int>& w);

// As above, with the flux support confined to reactions that consume a
// species of W, making the witness subnetwork exclusive in W.
FluxResult is_exclusive_autocatalytic(const ReactionNetwork& net, const StoichStructure& st,
                                      const std::vector<int>& w);

// Plain structural check: every listed reaction consumes at least one species
// of M.
bool is_exclusive(const ReactionNetwork& net, const std::vector<int>& reaction_subset,
                  const std::vector<int>& m);

// Union of minimal critical siphons (the infected variable set).
std::vector<int> total_siphon(const ReactionNetwork& net, const StoichStructure& st);

struct Core {
    std::vector<int> species;    // U
    std::vector<int> reactions;  // R_U, |R_U| == |U|
    Certificate flux;
};
// Minimal square autocatalytic submatrices. Admissible pairs require every
// chosen reaction to consume a species of U; minimality is over square
// sub-pairs. `truncated` reports whether the size bound cut the search short.
std::vector<Core> autocatalytic_cores(const ReactionNetwork& net, const StoichStructure& st,
                                      int max_core_size, bool* truncated = nullptr);

struct SiphonReport {
    std::vector<int> set;
    bool is_minimal = true;
    bool is_critical = false;
    bool is_drainable = false;
    bool is_self_replicable_restricted = false;
    bool is_self_replicable_strict = false;
    bool is_autocatalytic = false;
    bool is_exclusive = false;
    std::optional<Certificate> conservation;
    std::optional<Certificate> drain;
    std::optional<Certificate> replicate;
    std::optional<Certificate> replicate_strict;
    std::optional<Certificate> autocat;
};

struct SiphonAnalysis {
    std::vector<SiphonReport> siphons;
    std::vector<int> total;
    // Per minimal critical siphon: drainable or self-replicable (restricted).
    // Reported, not enforced; the underlying dichotomy needs hypotheses a
    // given model may not satisfy.
    bool dichotomy_holds = true;
};

SiphonAnalysis analyze_siphons(const ReactionNetwork& net);

}  // namespace crnkit
