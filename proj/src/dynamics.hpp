#pragma once

#include <map>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "network.hpp"
#include "ngm.hpp"
#include "tolerances.hpp"

namespace crnkit {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;  // one row per time
    long steps = 0;
    long rejected = 0;
};

struct SimulateOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    int n_out = 200;  // output rows = n_out + 1, evenly spaced over [0, t_end]
};

// Adaptive embedded Runge-Kutta 5(4) with output clamped to an even grid and
// nonnegativity projection for coordinates within the absolute tolerance of
// zero. Stiff step-size collapse raises an explicit error.
Trajectory simulate(const ReactionNetwork& net, const ParamMap& params,
                    const std::vector<double>& x0, double t_end,
                    const SimulateOptions& opts = {});

// Fixed-step variant (no error control) used to exercise integrator order.
Trajectory simulate_fixed_step(const ReactionNetwork& net, const ParamMap& params,
                               const std::vector<double>& x0, double t_end, double h);

struct PersistenceResult {
    std::vector<double> min_trace;  // log10 of the minimum coordinate per output time
    double tail_slope = 0.0;
    double final_min = 0.0;
    double window_min = 0.0;
    std::string verdict;  // persistent-like | nonpersistent-like | inconclusive
};

// Diagnostic thresholds are heuristics; they are arguments so callers can
// tighten or loosen them.
PersistenceResult persistence_diagnostic(const Trajectory& traj, double window_fraction = 0.2,
                                         double slope_eps = 1e-4, double extinct_level = 1e-6,
                                         double persist_level = 1e-3);

struct ScanAxis {
    std::string param;
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

enum class ScanClassifier { lcp, generic };

struct ScanResult {
    ScanAxis axis1;
    ScanAxis axis2;
    std::vector<double> grid1;
    std::vector<double> grid2;
    std::vector<std::vector<std::string>> cells;  // cells[i][j], i over axis1
    std::map<std::string, std::string> legend;
};

ScanResult scan(const ReactionNetwork& net, const ParamMap& base_params, const ScanAxis& axis1,
                const ScanAxis& axis2, ScanClassifier classifier, const Tolerances& tol = {});

// Labels a parameter point by the set of locally stable equilibria found on
// the disease-free face and each minimal-siphon face.
std::string generic_classify(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol = {});

std::string trajectory_csv(const ReactionNetwork& net, const Trajectory& traj);
std::string scan_csv(const ScanResult& res);

}  // namespace crnkit
