#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ngm.hpp"

namespace crnkit {

struct BoundaryEquilibrium {
    std::vector<int> face;       // species forced to zero (a siphon)
    std::vector<double> values;  // one per species, exact 0 on the face
    double residual = 0.0;       // max-norm of RHS at the point
    std::vector<std::complex<double>> eigenvalues;  // full Jacobian spectrum
    std::string classification;  // stable | unstable | marginal
    std::string source = "newton";
};

struct BoundarySearchStats {
    int starts_converged = 0;
    int negative_discarded = 0;
};

// Solves the non-infected subsystem with all infected variables at zero.
// Damped Newton from 16 deterministic starts; the solution must be unique
// among nonnegative ones.
BoundaryEquilibrium find_dfe(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol = {});

// All nonnegative equilibria with the face coordinates pinned to zero. The
// face must be a siphon; an empty face searches the interior. Solutions with
// a negative coordinate are dropped and counted in stats.
std::vector<BoundaryEquilibrium> find_boundary_equilibria(const ReactionNetwork& net,
                                                          const ParamMap& params,
                                                          const std::vector<int>& face,
                                                          const Tolerances& tol = {},
                                                          BoundarySearchStats* stats = nullptr);

// Spectral abscissa of the sub-Jacobian over W at the equilibrium; positive
// means the equilibrium repels in the W directions (invasion).
double invasion_abscissa(const ReactionNetwork& net, const ParamMap& params,
                         const BoundaryEquilibrium& eq, const std::vector<int>& w,
                         const Tolerances& tol = {});

// Reproduction value of each queried block at the equilibrium's non-infected
// coordinates; > 1 signals that the block invades.
std::vector<std::pair<std::vector<int>, double>> invasion_numbers(
    const ReactionNetwork& net, const ParamMap& params, const BoundaryEquilibrium& eq,
    const std::vector<std::vector<int>>& blocks, const Tolerances& tol = {});

struct InvasionGraphNode {
    std::vector<int> siphon;  // the absent set S
    BoundaryEquilibrium equilibrium;
};

struct InvasionGraphEdge {
    int node = 0;            // index into nodes
    std::vector<int> block;  // invading block species
    double value = 0.0;      // R_j at the node's equilibrium, > 1
};

struct InvasionGraph {
    std::vector<InvasionGraphNode> nodes;
    std::vector<InvasionGraphEdge> edges;
};

// Nodes are siphons inside the total siphon whose face carries an equilibrium
// with every off-face coordinate positive; edges record invading blocks.
InvasionGraph build_invasion_graph(const ReactionNetwork& net, const ParamMap& params,
                                   const Tolerances& tol = {});

std::string invasion_dot(const ReactionNetwork& net, const InvasionGraph& g);

// Four-region classification for two-strain models whose NGM is diagonal with
// one entry per strain: DFE stable / E1 stable / E2 stable / E* stable, with
// near-threshold points labeled "boundary".
std::string lcp_classify(const ReactionNetwork& net, const ParamMap& params,
                         const Tolerances& tol = {});

}  // namespace crnkit
