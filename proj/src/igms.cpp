#include "igms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crnkit {

std::vector<std::pair<int, int>> IgmsGraph::arcs() const {
    std::set<std::pair<int, int>> uniq;
    for (const auto& e : edges) uniq.emplace(e.from, e.to);
    return {uniq.begin(), uniq.end()};
}

IgmsGraph build_igms(const ReactionNetwork& net,
                     const std::vector<std::vector<int>>& siphons, IgmsEdgeRule rule) {
    IgmsGraph g;
    g.nodes = siphons;
    g.rule = rule;
    StoichStructure st = stoichiometry(net);
    const std::size_t k = g.nodes.size();

    auto touches_reactants = [&](const Reaction& r, const std::vector<int>& w) {
        for (int i : w) {
            auto it = r.reactants.find(i);
            if (it != r.reactants.end() && it->second > 0) return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            for (std::size_t r = 0; r < net.reactions.size(); ++r) {
                if (!touches_reactants(net.reactions[r], g.nodes[i])) continue;
                bool witness = false;
                for (int s : g.nodes[j]) {
                    if (rule == IgmsEdgeRule::net_producing) {
                        if (st.gamma.at(static_cast<std::size_t>(s), r) > 0) witness = true;
                    } else {
                        auto it = net.reactions[r].products.find(s);
                        if (it != net.reactions[r].products.end() && it->second > 0)
                            witness = true;
                    }
                    if (witness) break;
                }
                if (witness)
                    g.edges.push_back({static_cast<int>(i), static_cast<int>(j),
                                       static_cast<int>(r)});
            }
        }
    }
    return g;
}

IgmsGraph build_igms(const ReactionNetwork& net, IgmsEdgeRule rule) {
    return build_igms(net, minimal_siphons(net), rule);
}

namespace {

std::vector<std::vector<int>> adjacency(const IgmsGraph& g) {
    std::vector<std::set<int>> sets(g.nodes.size());
    for (const auto& e : g.edges) sets[static_cast<std::size_t>(e.from)].insert(e.to);
    std::vector<std::vector<int>> adj(g.nodes.size());
    for (std::size_t i = 0; i < sets.size(); ++i) adj[i].assign(sets[i].begin(), sets[i].end());
    return adj;
}

void canonicalize_cycles(std::vector<std::vector<int>>& cycles) {
    for (auto& c : cycles) {
        auto mn = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), mn, c.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
}

}  // namespace

std::vector<std::vector<int>> elementary_cycles(const IgmsGraph& g) {
    // Johnson's algorithm restricted to vertices >= root, rerooted in order.
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<int>> adj = adjacency(g);
    std::vector<std::vector<int>> cycles;
    std::vector<bool> blocked(n, false);
    std::vector<std::set<int>> blist(n);
    std::vector<int> stack;

    for (int root = 0; root < static_cast<int>(n); ++root) {
        std::fill(blocked.begin(), blocked.end(), false);
        for (auto& s : blist) s.clear();

        auto unblock = [&](auto&& self, int v) -> void {
            blocked[static_cast<std::size_t>(v)] = false;
            std::set<int> pending;
            pending.swap(blist[static_cast<std::size_t>(v)]);
            for (int w : pending)
                if (blocked[static_cast<std::size_t>(w)]) self(self, w);
        };

        auto circuit = [&](auto&& self, int v) -> bool {
            bool closed = false;
            stack.push_back(v);
            blocked[static_cast<std::size_t>(v)] = true;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (w < root) continue;
                if (w == root) {
                    cycles.push_back(stack);
                    closed = true;
                } else if (!blocked[static_cast<std::size_t>(w)]) {
                    if (self(self, w)) closed = true;
                }
            }
            if (closed) {
                unblock(unblock, v);
            } else {
                for (int w : adj[static_cast<std::size_t>(v)])
                    if (w >= root) blist[static_cast<std::size_t>(w)].insert(v);
            }
            stack.pop_back();
            return closed;
        };

        circuit(circuit, root);
    }
    canonicalize_cycles(cycles);
    return cycles;
}

std::vector<std::vector<int>> elementary_cycles_bruteforce(const IgmsGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<int>> adj = adjacency(g);
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> used(n, false);

    auto dfs = [&](auto&& self, int root, int v) -> void {
        path.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == root) {
                cycles.push_back(path);
            } else if (!used[static_cast<std::size_t>(w)] && w > root) {
                self(self, root, w);
            }
        }
        used[static_cast<std::size_t>(v)] = false;
        path.pop_back();
    };

    for (int root = 0; root < static_cast<int>(n); ++root) dfs(dfs, root, root);
    canonicalize_cycles(cycles);
    return cycles;
}

AmsdVerdict amsd_check(const ReactionNetwork& net, const IgmsGraph& g) {
    AmsdVerdict out;
    StoichStructure st = stoichiometry(net);
    std::vector<int> total = total_siphon(net, st);

    std::set<int> seen;
    bool disjoint = true;
    for (const auto& w : g.nodes)
        for (int i : w)
            if (!seen.insert(i).second) disjoint = false;
    out.is_partition = disjoint && seen == std::set<int>(total.begin(), total.end());

    out.is_acyclic = elementary_cycles(g).empty();
    if (!out.is_acyclic) return out;

    // Kahn's algorithm, lexicographic tie-break for deterministic output.
    const std::size_t n = g.nodes.size();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj = adjacency(g);
    for (std::size_t v = 0; v < n; ++v)
        for (int w : adj[v]) ++indeg[static_cast<std::size_t>(w)];
    std::set<int> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.insert(static_cast<int>(i));
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        out.topo_order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.insert(w);
    }
    if (out.is_partition) {
        for (int b : out.topo_order)
            for (int s : g.nodes[static_cast<std::size_t>(b)])
                out.species_order.push_back(s);
    }
    return out;
}

AmsdVerdict amsd_check(const ReactionNetwork& net) {
    return amsd_check(net, build_igms(net));
}

std::string igms_dot(const ReactionNetwork& net, const IgmsGraph& g) {
    std::ostringstream os;
    os << "digraph igms {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"{";
        for (std::size_t k = 0; k < g.nodes[i].size(); ++k) {
            if (k) os << ",";
            os << net.species[static_cast<std::size_t>(g.nodes[i][k])];
        }
        os << "}\"];\n";
    }
    for (const auto& [a, b] : g.arcs()) {
        os << "  n" << a << " -> n" << b << " [label=\"";
        bool first = true;
        for (const auto& e : g.edges) {
            if (e.from != a || e.to != b) continue;
            if (!first) os << ",";
            os << "r" << e.reaction;
            first = false;
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace crnkit
