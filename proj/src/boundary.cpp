#include "boundary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "halton.hpp"
#include "seed.hpp"

namespace crnkit {

namespace {

struct FaceSystem {
    std::vector<int> vars;                          // solved species
    std::vector<Polynomial> f;                      // RHS rows for vars
    std::vector<std::vector<Polynomial>> jac;       // d f_i / d vars_j
    std::vector<double> point;                      // full evaluation vector
};

FaceSystem make_face_system(const ReactionNetwork& net, const ParamMap& params,
                            const std::vector<int>& face) {
    FaceSystem sys;
    std::vector<bool> on_face(net.species.size(), false);
    for (int i : face) on_face[static_cast<std::size_t>(i)] = true;
    for (std::size_t i = 0; i < net.species.size(); ++i)
        if (!on_face[i]) sys.vars.push_back(static_cast<int>(i));

    std::vector<Polynomial> rhs = build_rhs(net);
    for (int i : sys.vars) {
        sys.f.push_back(rhs[static_cast<std::size_t>(i)]);
        std::vector<Polynomial> row;
        for (int j : sys.vars)
            row.push_back(rhs[static_cast<std::size_t>(i)].derivative(
                static_cast<std::size_t>(j)));
        sys.jac.push_back(std::move(row));
    }
    sys.point = assemble_point(net, std::vector<double>(net.species.size(), 0.0), params);
    return sys;
}

void load_vars(FaceSystem& sys, const std::vector<double>& x) {
    for (std::size_t k = 0; k < sys.vars.size(); ++k)
        sys.point[static_cast<std::size_t>(sys.vars[k])] = x[k];
}

double residual_inf(FaceSystem& sys, const std::vector<double>& x) {
    load_vars(sys, x);
    double r = 0.0;
    for (const auto& p : sys.f) r = std::max(r, std::abs(p.eval(sys.point)));
    return r;
}

// Damped Newton with backtracking line search on the max-norm residual.
bool newton_solve(FaceSystem& sys, std::vector<double>& x, int max_iter,
                  double accept_residual) {
    const std::size_t n = sys.vars.size();
    if (n == 0) return true;
    for (int iter = 0; iter < max_iter; ++iter) {
        load_vars(sys, x);
        Eigen::VectorXd fv(static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i) fv[static_cast<long>(i)] = sys.f[i].eval(sys.point);
        double base = fv.cwiseAbs().maxCoeff();
        if (base < accept_residual) return true;
        Eigen::MatrixXd jm(static_cast<long>(n), static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                jm(static_cast<long>(i), static_cast<long>(j)) =
                    sys.jac[i][j].eval(sys.point);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jm);
        if (!lu.isInvertible()) return false;
        Eigen::VectorXd delta = lu.solve(-fv);
        if (!delta.allFinite()) return false;
        bool accepted = false;
        for (double lambda = 1.0; lambda >= 1.0 / 1024.0; lambda /= 2.0) {
            std::vector<double> xn(x);
            for (std::size_t k = 0; k < n; ++k) xn[k] += lambda * delta[static_cast<long>(k)];
            double rn = residual_inf(sys, xn);
            if (rn < (1.0 - 0.5 * lambda) * base || rn < accept_residual) {
                x = std::move(xn);
                accepted = true;
                break;
            }
        }
        if (!accepted) return false;
    }
    load_vars(sys, x);
    double final_res = 0.0;
    for (const auto& p : sys.f) final_res = std::max(final_res, std::abs(p.eval(sys.point)));
    return final_res < accept_residual;
}

std::vector<std::vector<Polynomial>> full_jacobian(const ReactionNetwork& net) {
    std::vector<Polynomial> rhs = build_rhs(net);
    std::vector<std::vector<Polynomial>> jac;
    for (std::size_t i = 0; i < net.species.size(); ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < net.species.size(); ++j)
            row.push_back(rhs[i].derivative(j));
        jac.push_back(std::move(row));
    }
    return jac;
}

Mat eval_full_jacobian(const ReactionNetwork& net, const std::vector<double>& point) {
    std::vector<std::vector<Polynomial>> jac = full_jacobian(net);
    Mat m(net.species.size(), net.species.size());
    for (std::size_t i = 0; i < net.species.size(); ++i)
        for (std::size_t j = 0; j < net.species.size(); ++j)
            m.at(i, j) = jac[i][j].eval(point);
    return m;
}

struct SearchOutcome {
    std::vector<BoundaryEquilibrium> kept;
    BoundarySearchStats stats;
};

SearchOutcome search_face(const ReactionNetwork& net, const ParamMap& params,
                          const std::vector<int>& face, int starts, int max_iter,
                          const Tolerances& tol) {
    FaceSystem sys = make_face_system(net, params, face);
    const std::size_t n = sys.vars.size();
    std::vector<Polynomial> rhs = build_rhs(net);

    std::vector<std::vector<double>> solutions;
    SearchOutcome out;
    unsigned long offset =
        static_cast<unsigned long>(sample_seed() < 0 ? 0 : sample_seed());
    int attempts = (n == 0) ? 1 : starts;
    for (int s = 0; s < attempts; ++s) {
        std::vector<double> x;
        if (n > 0) x = halton_point(static_cast<unsigned long>(s) + 1 + offset, n, 0.01, 10.0);
        if (!newton_solve(sys, x, max_iter, tol.newton_residual)) continue;
        ++out.stats.starts_converged;
        bool dup = false;
        for (const auto& prev : solutions) {
            double d = 0.0;
            for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(prev[k] - x[k]));
            if (d < tol.dedup) dup = true;
        }
        if (dup) continue;
        solutions.push_back(x);
    }

    for (const auto& sol : solutions) {
        double worst = 0.0;
        for (double v : sol) worst = std::min(worst, v);
        if (worst < -tol.marginal) {
            ++out.stats.negative_discarded;
            continue;
        }
        BoundaryEquilibrium eq;
        eq.face = face;
        eq.values.assign(net.species.size(), 0.0);
        for (std::size_t k = 0; k < n; ++k)
            eq.values[static_cast<std::size_t>(sys.vars[k])] = std::max(sol[k], 0.0);
        std::vector<double> point = assemble_point(net, eq.values, params);
        double res = 0.0;
        for (const auto& p : rhs) res = std::max(res, std::abs(p.eval(point)));
        if (res >= tol.residual_verify) continue;
        eq.residual = res;
        Mat jm = eval_full_jacobian(net, point);
        eq.eigenvalues = eigenvalues(jm);
        double abscissa = spectral_abscissa(jm);
        if (abscissa < -tol.marginal) eq.classification = "stable";
        else if (abscissa > tol.marginal) eq.classification = "unstable";
        else eq.classification = "marginal";
        out.kept.push_back(std::move(eq));
    }
    std::sort(out.kept.begin(), out.kept.end(),
              [](const BoundaryEquilibrium& a, const BoundaryEquilibrium& b) {
                  return a.values < b.values;
              });
    return out;
}

}  // namespace

BoundaryEquilibrium find_dfe(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol) {
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    if (ts.empty()) analysis_fail("total siphon is empty; there is no disease-free face");
    SearchOutcome out = search_face(net, params, ts, 16, 200, tol);
    if (out.kept.empty()) {
        if (out.stats.negative_discarded > 0)
            analysis_fail("disease-free solve found only solutions with negative coordinates");
        analysis_fail("no Newton start converged to a disease-free equilibrium");
    }
    if (out.kept.size() > 1)
        analysis_fail("multiple distinct nonnegative disease-free equilibria found");
    return out.kept.front();
}

std::vector<BoundaryEquilibrium> find_boundary_equilibria(const ReactionNetwork& net,
                                                          const ParamMap& params,
                                                          const std::vector<int>& face,
                                                          const Tolerances& tol,
                                                          BoundarySearchStats* stats) {
    for (int i : face)
        if (i < 0 || static_cast<std::size_t>(i) >= net.species.size())
            analysis_fail("face species index out of range");
    if (!face.empty() && !is_siphon(net, face)) {
        std::string names;
        for (int i : face) {
            if (!names.empty()) names += ",";
            names += net.species[static_cast<std::size_t>(i)];
        }
        analysis_fail("face {" + names + "} is not a siphon");
    }
    SearchOutcome out = search_face(net, params, face, 64, 200, tol);
    if (stats) *stats = out.stats;
    return out.kept;
}

double invasion_abscissa(const ReactionNetwork& net, const ParamMap& params,
                         const BoundaryEquilibrium& eq, const std::vector<int>& w,
                         const Tolerances&) {
    std::set<int> face(eq.face.begin(), eq.face.end());
    for (int i : w)
        if (!face.count(i))
            analysis_fail("invasion set must be contained in the equilibrium's face");
    std::vector<double> point = assemble_point(net, eq.values, params);
    Mat jm = eval_full_jacobian(net, point);
    Mat sub(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            sub.at(i, j) = jm.at(static_cast<std::size_t>(w[i]),
                                 static_cast<std::size_t>(w[j]));
    return spectral_abscissa(sub);
}

std::vector<std::pair<std::vector<int>, double>> invasion_numbers(
    const ReactionNetwork& net, const ParamMap& params, const BoundaryEquilibrium& eq,
    const std::vector<std::vector<int>>& blocks, const Tolerances& tol) {
    VariableSplit split = default_split(net);
    std::set<int> face(eq.face.begin(), eq.face.end());
    std::vector<double> y_values;
    for (int y : split.y_vars) y_values.push_back(eq.values[static_cast<std::size_t>(y)]);

    std::vector<std::pair<std::vector<int>, double>> out;
    for (const auto& block : blocks) {
        for (int i : block)
            if (!face.count(i))
                analysis_fail("block species " + net.species[static_cast<std::size_t>(i)] +
                              " is not absent at the equilibrium");
        out.emplace_back(block, reproduction_eval(net, split, block, y_values, params, tol));
    }
    return out;
}

InvasionGraph build_invasion_graph(const ReactionNetwork& net, const ParamMap& params,
                                   const Tolerances& tol) {
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    std::vector<std::vector<int>> siphs = siphons_within(net, ts, 20);
    std::vector<std::vector<int>> blocks = minimal_siphons(net);
    VariableSplit split = default_split(net);

    InvasionGraph g;
    for (const auto& s : siphs) {
        std::vector<BoundaryEquilibrium> eqs = find_boundary_equilibria(net, params, s, tol);
        std::set<int> absent(s.begin(), s.end());
        const BoundaryEquilibrium* resident = nullptr;
        for (const auto& eq : eqs) {
            bool interior = true;
            for (std::size_t i = 0; i < net.species.size(); ++i)
                if (!absent.count(static_cast<int>(i)) && eq.values[i] <= tol.marginal)
                    interior = false;
            if (interior) {
                resident = &eq;
                break;
            }
        }
        if (!resident) continue;
        int node_idx = static_cast<int>(g.nodes.size());
        g.nodes.push_back({s, *resident});
        std::vector<double> y_values;
        for (int y : split.y_vars)
            y_values.push_back(resident->values[static_cast<std::size_t>(y)]);
        for (const auto& block : blocks) {
            bool inside = std::includes(s.begin(), s.end(), block.begin(), block.end());
            if (!inside) continue;
            double val = 0.0;
            try {
                val = reproduction_eval(net, split, block, y_values, params, tol);
            } catch (const CrnError&) {
                continue;
            }
            if (val > 1.0) g.edges.push_back({node_idx, block, val});
        }
    }
    return g;
}

namespace {

std::string set_label(const ReactionNetwork& net, const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += net.species[static_cast<std::size_t>(s[k])];
    }
    return out + "}";
}

}  // namespace

std::string invasion_dot(const ReactionNetwork& net, const InvasionGraph& g) {
    auto node_id = [&](const std::vector<int>& s) {
        std::string id = "s";
        for (int i : s) id += "_" + std::to_string(i);
        return id;
    };
    std::ostringstream os;
    os << "digraph invasion {\n";
    std::set<std::string> declared;
    for (const auto& n : g.nodes) {
        os << "  " << node_id(n.siphon) << " [label=\"absent " << set_label(net, n.siphon)
           << "\"];\n";
        declared.insert(node_id(n.siphon));
    }
    for (const auto& e : g.edges) {
        const auto& from = g.nodes[static_cast<std::size_t>(e.node)].siphon;
        std::vector<int> target;
        std::set_difference(from.begin(), from.end(), e.block.begin(), e.block.end(),
                            std::back_inserter(target));
        std::string tid = node_id(target);
        if (!declared.count(tid)) {
            os << "  " << tid << " [label=\"absent " << set_label(net, target)
               << "\", style=dashed];\n";
            declared.insert(tid);
        }
        std::ostringstream val;
        val.precision(17);
        val << e.value;
        os << "  " << node_id(from) << " -> " << tid << " [label=\""
           << set_label(net, e.block) << " R=" << val.str() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string lcp_classify(const ReactionNetwork& net, const ParamMap& params,
                         const Tolerances& tol) {
    std::vector<std::vector<int>> blocks = minimal_siphons(net);
    if (blocks.size() != 2 || blocks[0].size() != 1 || blocks[1].size() != 1)
        analysis_fail("classification needs a two-strain model with singleton blocks");
    VariableSplit split = default_split(net);
    if (split.x_vars.size() != 2)
        analysis_fail("classification needs exactly two infected variables");

    BoundaryEquilibrium dfe = find_dfe(net, params, tol);
    NgmResult ngm = ngm_at(net, split, assemble_point(net, dfe.values, params), tol);
    if (std::abs(ngm.K.at(0, 1)) >= tol.entry || std::abs(ngm.K.at(1, 0)) >= tol.entry)
        analysis_fail("classification needs a diagonal NGM");

    auto block_pos = [&](const std::vector<int>& block) {
        auto it = std::find(split.x_vars.begin(), split.x_vars.end(), block[0]);
        return static_cast<std::size_t>(it - split.x_vars.begin());
    };
    double r1 = ngm.K.at(block_pos(blocks[0]), block_pos(blocks[0]));
    double r2 = ngm.K.at(block_pos(blocks[1]), block_pos(blocks[1]));
    if (std::abs(r1 - 1.0) <= tol.boundary_band || std::abs(r2 - 1.0) <= tol.boundary_band)
        return "boundary";
    if (r1 <= 1.0 && r2 <= 1.0) return "DFE stable";

    // Invasion of one strain against the other's single-strain equilibrium.
    auto invasion_against = [&](std::size_t resident, std::size_t invader, bool* defined) {
        *defined = false;
        std::vector<BoundaryEquilibrium> eqs =
            find_boundary_equilibria(net, params, blocks[invader], tol);
        for (const auto& eq : eqs) {
            bool resident_present = true;
            for (int i : blocks[resident])
                if (eq.values[static_cast<std::size_t>(i)] <= tol.marginal)
                    resident_present = false;
            if (!resident_present) continue;
            std::vector<double> y_values;
            for (int y : split.y_vars)
                y_values.push_back(eq.values[static_cast<std::size_t>(y)]);
            try {
                double v = reproduction_eval(net, split, blocks[invader], y_values, params, tol);
                *defined = true;
                return v;
            } catch (const CrnError&) {
                return 0.0;
            }
        }
        return 0.0;
    };

    bool has21 = false, has12 = false;
    double rt21 = 0.0, rt12 = 0.0;
    if (r1 > 1.0) rt21 = invasion_against(0, 1, &has21);
    if (r2 > 1.0) rt12 = invasion_against(1, 0, &has12);
    if ((has21 && std::abs(rt21 - 1.0) <= tol.boundary_band) ||
        (has12 && std::abs(rt12 - 1.0) <= tol.boundary_band))
        return "boundary";
    if (r1 > 1.0 && has21 && rt21 <= 1.0) return "E1 stable";
    if (r2 > 1.0 && has12 && rt12 <= 1.0) return "E2 stable";
    if (r1 > 1.0 && r2 > 1.0 && has21 && rt21 > 1.0 && has12 && rt12 > 1.0)
        return "E* stable";
    return "unresolved";
}

MeModelReport me_model_check(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol) {
    MeModelReport rep;
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    rep.total_siphon_nonempty = !ts.empty();
    rep.no_hidden_inflow = hidden_inflow_reactions(net, st).empty();
    if (!rep.no_hidden_inflow) rep.notes.push_back("network has hidden inflow reactions");
    if (!rep.total_siphon_nonempty) {
        rep.notes.push_back("total siphon is empty");
        return rep;
    }
    VariableSplit split = default_split(net);
    BoundaryEquilibrium dfe;
    try {
        dfe = find_dfe(net, params, tol);
        rep.dfe_exists = true;
    } catch (const CrnError& e) {
        rep.notes.push_back(std::string("disease-free equilibrium: ") + e.what());
        return rep;
    }
    std::vector<double> point = assemble_point(net, dfe.values, params);
    JacobianBlocks jb = jacobian_blocks(net, split);
    if (split.y_vars.empty()) {
        rep.jy_hurwitz = true;
    } else {
        Mat jy = eval_poly_matrix(jb.jy, point);
        rep.jy_hurwitz = spectral_abscissa(jy) < -tol.marginal;
    }
    if (!rep.jy_hurwitz) rep.notes.push_back("Jy at the disease-free equilibrium is not Hurwitz");
    Mat jx = eval_poly_matrix(jb.jx, point);
    rep.jx_metzler = metzler_check(jx, tol);
    if (!rep.jx_metzler) rep.notes.push_back("Jx at the disease-free equilibrium is not Metzler");
    Splitting s = algorithmic_FV(net, split);
    RegularSplittingCheck rsc = regular_splitting_check(s, point, tol);
    rep.splitting_regular = rsc.regular;
    for (const auto& v : rsc.violations) rep.notes.push_back(v);
    return rep;
}

}  // namespace crnkit
