#pragma once

#include <string>
#include <vector>

#include "network.hpp"
#include "siphons.hpp"

namespace crnkit {

enum class IgmsEdgeRule {
    net_producing,  // a reaction consuming T_i has positive net gain of some T_j species
    touching,       // a reaction consuming T_i has a T_j species among its products
};

struct IgmsEdge {
    int from = 0;
    int to = 0;
    int reaction = 0;  // witness reaction index
};

struct IgmsGraph {
    std::vector<std::vector<int>> nodes;  // minimal siphons, sorted
    std::vector<IgmsEdge> edges;          // one entry per witness; self-loops dropped
    IgmsEdgeRule rule = IgmsEdgeRule::net_producing;

    // Distinct (from, to) pairs, sorted.
    std::vector<std::pair<int, int>> arcs() const;
};

IgmsGraph build_igms(const ReactionNetwork& net,
                     const std::vector<std::vector<int>>& siphons,
                     IgmsEdgeRule rule = IgmsEdgeRule::net_producing);
IgmsGraph build_igms(const ReactionNetwork& net,
                     IgmsEdgeRule rule = IgmsEdgeRule::net_producing);

// Elementary cycles (Johnson's algorithm); each cycle is a node index
// sequence rotated to start at its smallest member, sorted by length then
// lexicographically.
std::vector<std::vector<int>> elementary_cycles(const IgmsGraph& g);

std::vector<std::vector<int>> elementary_cycles_bruteforce(const IgmsGraph& g);

struct AmsdVerdict {
    bool is_partition = false;      // siphons disjoint, union = total siphon
    bool is_acyclic = false;
    std::vector<int> topo_order;    // node indices; filled iff acyclic
    std::vector<int> species_order; // blocks in topological order; filled iff
                                    // partition and acyclic both hold
};

AmsdVerdict amsd_check(const ReactionNetwork& net, const IgmsGraph& g);
AmsdVerdict amsd_check(const ReactionNetwork& net);

std::string igms_dot(const ReactionNetwork& net, const IgmsGraph& g);

}  // namespace crnkit
