#pragma once

namespace crnkit {

// Numeric thresholds used across the analysis pipeline. All defaults are
// pinned here; the CLI exposes overrides for a subset.
struct Tolerances {
    double entry = 1e-12;            // matrix entry comparisons, sign checks
    double eigen_rel = 1e-9;         // relative agreement between spectral radii
    double newton_residual = 1e-11;  // equilibrium solve acceptance
    double residual_verify = 1e-9;   // posterior residual check on equilibria
    double dedup = 1e-6;             // equilibrium deduplication distance
    double marginal = 1e-9;          // band around zero for stability calls
    double boundary_band = 1e-9;     // band around one for threshold calls
    double rtol = 1e-8;              // integrator relative tolerance
    double atol = 1e-10;             // integrator absolute tolerance
};

}  // namespace crnkit
