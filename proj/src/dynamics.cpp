#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "siphons.hpp"

namespace crnkit {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = 5179.0 / 57600.0, kE3 = 7571.0 / 16695.0, kE4 = 393.0 / 640.0,
                 kE5 = -92097.0 / 339200.0, kE6 = 187.0 / 2100.0, kE7 = 1.0 / 40.0;

struct OdeSystem {
    std::vector<Polynomial> rhs;
    std::vector<double> point;  // species values followed by parameter values
    std::size_t n = 0;

    OdeSystem(const ReactionNetwork& net, const ParamMap& params)
        : rhs(build_rhs(net)), n(net.species.size()) {
        point = assemble_point(net, std::vector<double>(n, 0.0), params);
    }

    void eval(const std::vector<double>& y, std::vector<double>& dydt) {
        std::copy(y.begin(), y.end(), point.begin());
        dydt.resize(n);
        for (std::size_t i = 0; i < n; ++i) dydt[i] = rhs[i].eval(point);
    }
};

// One 5th-order step plus embedded 4th-order error estimate.
void dp_step(OdeSystem& sys, const std::vector<double>& y, double h,
             std::vector<double>& y5, std::vector<double>& err) {
    const std::size_t n = sys.n;
    std::vector<double> k1, k2, k3, k4, k5, k6, k7, tmp(n);
    sys.eval(y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * kA21 * k1[i];
    sys.eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    sys.eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    sys.eval(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    sys.eval(tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                             kA65 * k5[i]);
    sys.eval(tmp, k6);
    y5.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        y5[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] +
                            kB6 * k6[i]);
    sys.eval(y5, k7);
    err.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double y4 = y[i] + h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                                kE6 * k6[i] + kE7 * k7[i]);
        err[i] = y5[i] - y4;
    }
}

}  // namespace

Trajectory simulate(const ReactionNetwork& net, const ParamMap& params,
                    const std::vector<double>& x0, double t_end, const SimulateOptions& opts) {
    if (x0.size() != net.species.size())
        analysis_fail("initial state has wrong length");
    for (double v : x0)
        if (v < 0) analysis_fail("initial state must be nonnegative");
    if (t_end <= 0) analysis_fail("time horizon must be positive");
    if (opts.n_out < 1) analysis_fail("output grid needs at least one interval");

    OdeSystem sys(net, params);
    Trajectory traj;
    std::vector<double> y = x0;
    traj.times.push_back(0.0);
    traj.states.push_back(y);

    double t = 0.0;
    double h = t_end / 1000.0;
    std::vector<double> y5, err;
    for (int out = 1; out <= opts.n_out; ++out) {
        double t_next = t_end * out / opts.n_out;
        while (t < t_next) {
            bool clipped = h >= t_next - t;
            double hs = clipped ? t_next - t : h;
            dp_step(sys, y, hs, y5, err);
            double norm = 0.0;
            for (std::size_t i = 0; i < sys.n; ++i) {
                double scale = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                norm = std::max(norm, std::abs(err[i]) / scale);
            }
            bool negative = false;
            for (double v : y5)
                if (v < -opts.atol) negative = true;
            if (norm <= 1.0 && !negative) {
                t += hs;
                for (auto& v : y5)
                    if (v < 0.0) v = 0.0;
                y = y5;
                ++traj.steps;
                double grow = 0.9 * std::pow(std::max(norm, 1e-10), -0.2);
                double hn = hs * std::min(5.0, std::max(0.2, grow));
                if (!clipped || hn > h) h = hn;
            } else {
                ++traj.rejected;
                double shrink = negative ? 0.5
                                         : std::min(0.9 * std::pow(norm, -0.2), 0.5);
                h = hs * std::max(0.1, shrink);
            }
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                analysis_fail("step size underflow near t = " + std::to_string(t) +
                              "; the system appears stiff for the explicit integrator - "
                              "tighten rtol/atol or shorten the horizon");
        }
        traj.times.push_back(t_next);
        traj.states.push_back(y);
    }
    return traj;
}

Trajectory simulate_fixed_step(const ReactionNetwork& net, const ParamMap& params,
                               const std::vector<double>& x0, double t_end, double h) {
    if (h <= 0 || t_end <= 0) analysis_fail("fixed-step run needs positive h and horizon");
    OdeSystem sys(net, params);
    Trajectory traj;
    std::vector<double> y = x0;
    traj.times.push_back(0.0);
    traj.states.push_back(y);
    double t = 0.0;
    std::vector<double> y5, err;
    while (t < t_end - 1e-12 * t_end) {
        double hs = std::min(h, t_end - t);
        dp_step(sys, y, hs, y5, err);
        y = y5;
        t += hs;
        ++traj.steps;
        traj.times.push_back(t);
        traj.states.push_back(y);
    }
    return traj;
}

PersistenceResult persistence_diagnostic(const Trajectory& traj, double window_fraction,
                                         double slope_eps, double extinct_level,
                                         double persist_level) {
    if (traj.times.size() < 3) analysis_fail("trajectory too short for a persistence verdict");
    for (double v : traj.states.front())
        if (v <= 0) analysis_fail("persistence diagnostic needs a strictly positive start");

    PersistenceResult out;
    std::vector<double> mins;
    for (const auto& row : traj.states) {
        double m = row.empty() ? 0.0 : *std::min_element(row.begin(), row.end());
        mins.push_back(m);
        out.min_trace.push_back(std::log10(std::max(m, 1e-300)));
    }
    double t0 = traj.times.front(), t1 = traj.times.back();
    double cut = t1 - window_fraction * (t1 - t0);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long count = 0;
    out.window_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        if (traj.times[k] < cut) continue;
        sx += traj.times[k];
        sy += out.min_trace[k];
        sxx += traj.times[k] * traj.times[k];
        sxy += traj.times[k] * out.min_trace[k];
        out.window_min = std::min(out.window_min, mins[k]);
        ++count;
    }
    double denom = count * sxx - sx * sx;
    out.tail_slope = (count >= 2 && std::abs(denom) > 0) ? (count * sxy - sx * sy) / denom : 0.0;
    out.final_min = mins.back();

    if (out.tail_slope < -slope_eps && out.final_min < extinct_level)
        out.verdict = "nonpersistent-like";
    else if (out.window_min > persist_level && std::abs(out.tail_slope) < slope_eps)
        out.verdict = "persistent-like";
    else
        out.verdict = "inconclusive";
    return out;
}

namespace {

std::vector<double> axis_grid(const ScanAxis& axis) {
    if (axis.n < 1) analysis_fail("scan axis needs at least one point");
    std::vector<double> g;
    if (axis.n == 1) {
        g.push_back(axis.lo);
        return g;
    }
    for (int i = 0; i < axis.n; ++i)
        g.push_back(axis.lo + (axis.hi - axis.lo) * i / (axis.n - 1));
    return g;
}

const std::map<std::string, std::string>& label_meanings() {
    static const std::map<std::string, std::string> m = {
        {"DFE stable", "only the disease-free equilibrium is locally stable"},
        {"E1 stable", "the strain-1 boundary equilibrium is locally stable"},
        {"E2 stable", "the strain-2 boundary equilibrium is locally stable"},
        {"E* stable", "the coexistence equilibrium is locally stable"},
        {"boundary", "a decision quantity sits on its threshold"},
        {"unresolved", "no region condition matched"},
        {"error", "classification failed in this cell"},
    };
    return m;
}

}  // namespace

std::string generic_classify(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol) {
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    std::set<std::string> stable;

    try {
        BoundaryEquilibrium dfe = find_dfe(net, params, tol);
        if (dfe.classification == "stable") stable.insert("DFE");
    } catch (const CrnError&) {
    }

    std::set<int> infected(ts.begin(), ts.end());
    for (const auto& face : minimal_siphons(net)) {
        std::vector<BoundaryEquilibrium> eqs = find_boundary_equilibria(net, params, face, tol);
        std::set<int> absent(face.begin(), face.end());
        for (const auto& eq : eqs) {
            if (eq.classification != "stable") continue;
            std::vector<std::string> present;
            bool resident = true;
            for (int i : ts) {
                if (absent.count(i)) continue;
                if (eq.values[static_cast<std::size_t>(i)] > tol.marginal)
                    present.push_back(net.species[static_cast<std::size_t>(i)]);
                else
                    resident = false;
            }
            if (!resident || present.empty()) continue;
            std::string token = "E(";
            for (std::size_t k = 0; k < present.size(); ++k) {
                if (k) token += "+";
                token += present[k];
            }
            stable.insert(token + ")");
        }
    }
    if (stable.empty()) return "stable:none";
    std::string out = "stable:";
    bool first = true;
    for (const auto& s : stable) {
        if (!first) out += "+";
        out += s;
        first = false;
    }
    return out;
}

ScanResult scan(const ReactionNetwork& net, const ParamMap& base_params, const ScanAxis& axis1,
                const ScanAxis& axis2, ScanClassifier classifier, const Tolerances& tol) {
    if (net.param_index(axis1.param) < 0)
        analysis_fail("unknown scan parameter '" + axis1.param + "'");
    if (net.param_index(axis2.param) < 0)
        analysis_fail("unknown scan parameter '" + axis2.param + "'");
    ScanResult res;
    res.axis1 = axis1;
    res.axis2 = axis2;
    res.grid1 = axis_grid(axis1);
    res.grid2 = axis_grid(axis2);
    for (double v1 : res.grid1) {
        std::vector<std::string> row;
        for (double v2 : res.grid2) {
            ParamMap p = base_params;
            p[axis1.param] = v1;
            p[axis2.param] = v2;
            std::string label;
            try {
                label = (classifier == ScanClassifier::lcp) ? lcp_classify(net, p, tol)
                                                            : generic_classify(net, p, tol);
            } catch (const CrnError&) {
                label = "error";
            }
            row.push_back(label);
        }
        res.cells.push_back(std::move(row));
    }
    for (const auto& row : res.cells)
        for (const auto& label : row) {
            auto it = label_meanings().find(label);
            if (it != label_meanings().end()) {
                res.legend[label] = it->second;
            } else if (label.rfind("stable:", 0) == 0) {
                res.legend[label] = "locally stable equilibria: " + label.substr(7);
            }
        }
    return res;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string trajectory_csv(const ReactionNetwork& net, const Trajectory& traj) {
    std::ostringstream os;
    os << "t";
    for (const auto& s : net.species) os << "," << s;
    os << "\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        os << fmt17(traj.times[k]);
        for (double v : traj.states[k]) os << "," << fmt17(v);
        os << "\n";
    }
    return os.str();
}

std::string scan_csv(const ScanResult& res) {
    std::ostringstream os;
    os << res.axis1.param << "," << res.axis2.param << ",label\n";
    for (std::size_t i = 0; i < res.grid1.size(); ++i)
        for (std::size_t j = 0; j < res.grid2.size(); ++j)
            os << fmt17(res.grid1[i]) << "," << fmt17(res.grid2[j]) << ","
               << res.cells[i][j] << "\n";
    return os.str();
}

}  // namespace crnkit
