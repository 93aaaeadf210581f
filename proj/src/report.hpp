#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "igms.hpp"
#include "network.hpp"
#include "ngm.hpp"
#include "tolerances.hpp"

namespace crnkit {

// JSON emitters. Every document carries schema_version and sorted keys; all
// doubles serialize with enough digits to round-trip exactly.
std::string network_json(const ReactionNetwork& net);
std::string siphons_json(const ReactionNetwork& net, bool with_certificates = false,
                         int max_core_size = 0);
std::string igms_json(const ReactionNetwork& net, IgmsEdgeRule rule);
// Evaluation point defaults to the disease-free equilibrium when
// species_point is absent.
std::string ngm_json(const ReactionNetwork& net, const ParamMap& params,
                     const std::optional<std::vector<double>>& species_point, bool use_kd,
                     const Tolerances& tol = {});
// With a face: equilibria on that face. Without: sweep of every siphon face
// inside the total siphon, largest faces first, deduplicated globally.
std::string boundary_json(const ReactionNetwork& net, const ParamMap& params,
                          const std::optional<std::vector<int>>& face,
                          const Tolerances& tol = {});
std::string invade_json(const ReactionNetwork& net, const ParamMap& params,
                        const Tolerances& tol = {});
std::string trajectory_json(const ReactionNetwork& net, const Trajectory& traj);
std::string scan_json(const ScanResult& res);
// Full analysis bundle; failed sections carry an "error" field instead of
// aborting the document.
std::string report_json(const ReactionNetwork& net, const ParamMap& params,
                        const Tolerances& tol = {});

}  // namespace crnkit
