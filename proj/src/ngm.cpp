#include "ngm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace crnkit {

namespace {

Eigen::MatrixXd to_eigen(const Mat& x) {
    Eigen::MatrixXd m(x.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            m(static_cast<long>(i), static_cast<long>(j)) = x.at(i, j);
    return m;
}

Mat from_eigen(const Eigen::MatrixXd& m) {
    Mat x(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            x.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return x;
}

}  // namespace

std::vector<double> assemble_point(const ReactionNetwork& net,
                                   const std::vector<double>& species_values,
                                   const ParamMap& params) {
    if (species_values.size() != net.species.size())
        analysis_fail("species value vector has wrong length");
    std::vector<double> point(net.nvars(), 0.0);
    std::copy(species_values.begin(), species_values.end(), point.begin());
    for (std::size_t p = 0; p < net.params.size(); ++p) {
        auto it = params.find(net.params[p]);
        if (it == params.end())
            analysis_fail("parameter not assigned: " + net.params[p]);
        point[net.param_var(p)] = it->second;
    }
    return point;
}

VariableSplit default_split(const ReactionNetwork& net) {
    StoichStructure st = stoichiometry(net);
    VariableSplit split;
    AmsdVerdict amsd = amsd_check(net);
    if (amsd.is_partition && amsd.is_acyclic && !amsd.species_order.empty()) {
        split.x_vars = amsd.species_order;
    } else {
        split.x_vars = total_siphon(net, st);
    }
    std::vector<bool> in_x(net.species.size(), false);
    for (int i : split.x_vars) in_x[static_cast<std::size_t>(i)] = true;
    for (std::size_t i = 0; i < net.species.size(); ++i)
        if (!in_x[i]) split.y_vars.push_back(static_cast<int>(i));
    return split;
}

Mat eval_poly_matrix(const PolyMatrix& pm, const std::vector<double>& point) {
    Mat out(pm.rows(), pm.cols());
    for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j)
            out.at(i, j) = pm.at(i, j).eval(point);
    return out;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) analysis_fail("matrix shape mismatch");
    return from_eigen(to_eigen(x) * to_eigen(y));
}

Mat mat_inverse(const Mat& x, bool* invertible) {
    if (x.rows != x.cols) analysis_fail("matrix not square");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(x));
    if (!lu.isInvertible()) {
        if (invertible) *invertible = false;
        return Mat(x.rows, x.cols);
    }
    if (invertible) *invertible = true;
    return from_eigen(lu.inverse());
}

std::vector<std::complex<double>> eigenvalues(const Mat& x) {
    if (x.rows != x.cols) analysis_fail("matrix not square");
    if (x.rows == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(x), false);
    std::vector<std::complex<double>> out;
    for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double spectral_radius(const Mat& x) {
    double rho = 0.0;
    for (const auto& ev : eigenvalues(x)) rho = std::max(rho, std::abs(ev));
    return rho;
}

double spectral_abscissa(const Mat& x) {
    double a = -std::numeric_limits<double>::infinity();
    for (const auto& ev : eigenvalues(x)) a = std::max(a, ev.real());
    return a;
}

namespace {

PolyMatrix jac_block(const ReactionNetwork& net, const std::vector<Polynomial>& rhs,
                     const std::vector<int>& row_vars, const std::vector<int>& col_vars) {
    PolyMatrix pm;
    for (int i : row_vars) pm.row_labels.push_back(net.species[static_cast<std::size_t>(i)]);
    for (int j : col_vars) pm.col_labels.push_back(net.species[static_cast<std::size_t>(j)]);
    for (int i : row_vars)
        for (int j : col_vars)
            pm.entries.push_back(
                rhs[static_cast<std::size_t>(i)].derivative(static_cast<std::size_t>(j)));
    return pm;
}

}  // namespace

JacobianBlocks jacobian_blocks(const ReactionNetwork& net, const VariableSplit& split) {
    std::vector<Polynomial> rhs = build_rhs(net);
    JacobianBlocks jb;
    jb.jx = jac_block(net, rhs, split.x_vars, split.x_vars);
    jb.jy = jac_block(net, rhs, split.y_vars, split.y_vars);
    jb.jxy = jac_block(net, rhs, split.x_vars, split.y_vars);
    jb.jyx = jac_block(net, rhs, split.y_vars, split.x_vars);
    return jb;
}

Splitting algorithmic_FV(const ReactionNetwork& net, const VariableSplit& split) {
    if (split.x_vars.empty()) analysis_fail("no infected variables to split");
    StoichStructure st = stoichiometry(net);
    std::vector<bool> in_x(net.species.size(), false);
    for (int i : split.x_vars) in_x[static_cast<std::size_t>(i)] = true;

    // A reaction feeds F when its reactant complex reaches outside the
    // infected set: it consumes a non-infected species, or consumes nothing
    // infected at all. Gains of infected species through such reactions are
    // new infections; everything else is a transition and lands in V.
    std::vector<bool> eligible(net.reactions.size(), false);
    for (std::size_t r = 0; r < net.reactions.size(); ++r) {
        bool touches_y = false, touches_x = false;
        for (const auto& [i, mult] : net.reactions[r].reactants) {
            if (mult <= 0) continue;
            if (in_x[static_cast<std::size_t>(i)]) touches_x = true;
            else touches_y = true;
        }
        eligible[r] = touches_y || !touches_x;
    }

    Splitting s;
    for (int i : split.x_vars) {
        s.F.row_labels.push_back(net.species[static_cast<std::size_t>(i)]);
        s.F.col_labels.push_back(net.species[static_cast<std::size_t>(i)]);
    }
    s.V.row_labels = s.F.row_labels;
    s.V.col_labels = s.F.col_labels;

    JacobianBlocks jb = jacobian_blocks(net, split);
    for (std::size_t bi = 0; bi < split.x_vars.size(); ++bi) {
        int xi = split.x_vars[bi];
        Polynomial gains(net.nvars());
        for (std::size_t r = 0; r < net.reactions.size(); ++r) {
            if (!eligible[r]) continue;
            long g = st.gamma.at(static_cast<std::size_t>(xi), r);
            if (g == 0) continue;
            gains = gains + net.reactions[r].rate.scaled(Rational(g));
        }
        Polynomial pos = gains.positive_part();
        for (std::size_t bj = 0; bj < split.x_vars.size(); ++bj)
            s.F.entries.push_back(pos.derivative(static_cast<std::size_t>(split.x_vars[bj])));
    }
    for (std::size_t i = 0; i < split.x_vars.size(); ++i)
        for (std::size_t j = 0; j < split.x_vars.size(); ++j)
            s.V.entries.push_back(s.F.at(i, j) - jb.jx.at(i, j));
    return s;
}

RegularSplittingCheck regular_splitting_check(const Splitting& s,
                                              const std::vector<double>& point,
                                              const Tolerances& tol) {
    RegularSplittingCheck out;
    Mat f = eval_poly_matrix(s.F, point);
    Mat v = eval_poly_matrix(s.V, point);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j)
            if (f.at(i, j) < -tol.entry) {
                std::ostringstream os;
                os << "F(" << s.F.row_labels[i] << "," << s.F.col_labels[j]
                   << ") = " << f.at(i, j) << " < 0";
                out.violations.push_back(os.str());
            }
    Mat vinv = mat_inverse(v, &out.v_invertible);
    if (!out.v_invertible) {
        out.violations.push_back("V is singular at the evaluation point");
    } else {
        for (std::size_t i = 0; i < vinv.rows; ++i)
            for (std::size_t j = 0; j < vinv.cols; ++j)
                if (vinv.at(i, j) < -tol.entry) {
                    std::ostringstream os;
                    os << "V^-1(" << s.V.row_labels[i] << "," << s.V.col_labels[j]
                       << ") = " << vinv.at(i, j) << " < 0";
                    out.violations.push_back(os.str());
                }
    }
    out.regular = out.violations.empty();
    return out;
}

namespace {

std::vector<std::vector<int>> block_positions(const ReactionNetwork& net,
                                              const VariableSplit& split) {
    std::vector<std::vector<int>> blocks;
    AmsdVerdict amsd = amsd_check(net);
    if (amsd.is_partition && amsd.is_acyclic) {
        IgmsGraph g = build_igms(net);
        std::size_t covered = 0;
        for (int b : amsd.topo_order) {
            std::vector<int> pos;
            for (std::size_t p = 0; p < split.x_vars.size(); ++p) {
                const auto& node = g.nodes[static_cast<std::size_t>(b)];
                if (std::find(node.begin(), node.end(), split.x_vars[p]) != node.end())
                    pos.push_back(static_cast<int>(p));
            }
            covered += pos.size();
            if (!pos.empty()) blocks.push_back(std::move(pos));
        }
        if (covered == split.x_vars.size() && !blocks.empty()) return blocks;
    }
    std::vector<int> all(split.x_vars.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = static_cast<int>(p);
    return {all};
}

Mat submatrix(const Mat& m, const std::vector<int>& pos) {
    Mat out(pos.size(), pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < pos.size(); ++j)
            out.at(i, j) = m.at(static_cast<std::size_t>(pos[i]),
                                static_cast<std::size_t>(pos[j]));
    return out;
}

bool radius_is_simple(const Mat& block, double rho, const Tolerances& tol) {
    int at_radius = 0;
    for (const auto& ev : eigenvalues(block))
        if (rho - std::abs(ev) <= tol.eigen_rel * std::max(1.0, rho)) ++at_radius;
    return at_radius <= 1;
}

}  // namespace

NgmResult ngm_at(const ReactionNetwork& net, const VariableSplit& split,
                 const std::vector<double>& point, const Tolerances& tol, bool use_kd) {
    Splitting s = algorithmic_FV(net, split);
    RegularSplittingCheck rsc = regular_splitting_check(s, point, tol);
    if (!rsc.regular) {
        std::string msg = "splitting not regular at evaluation point";
        for (const auto& v : rsc.violations) msg += "; " + v;
        analysis_fail(msg);
    }
    Mat f = eval_poly_matrix(s.F, point);
    Mat v = eval_poly_matrix(s.V, point);
    bool inv = false;
    Mat vinv = mat_inverse(v, &inv);

    NgmResult out;
    out.point = point;
    out.splitting_regular = true;
    out.K = use_kd ? mat_mul(vinv, f) : mat_mul(f, vinv);
    Mat other = use_kd ? mat_mul(f, vinv) : mat_mul(vinv, f);
    double rho_k = spectral_radius(out.K);
    double rho_o = spectral_radius(other);
    if (std::abs(rho_k - rho_o) >
        std::max(tol.eigen_rel * std::max(rho_k, rho_o), tol.entry))
        analysis_fail("spectral radii of F V^-1 and V^-1 F disagree");
    out.R0 = rho_k;

    out.blocks = block_positions(net, split);
    std::vector<int> pos_block(split.x_vars.size(), 0);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int p : out.blocks[b]) pos_block[static_cast<std::size_t>(p)] = static_cast<int>(b);
    for (const auto& blk : out.blocks) {
        Mat kb = submatrix(out.K, blk);
        double rho = spectral_radius(kb);
        out.rho_per_block.push_back(rho);
        out.rho_unique_per_block.push_back(radius_is_simple(kb, rho, tol));
    }
    out.is_block_lower_triangular = true;
    for (std::size_t p = 0; p < split.x_vars.size(); ++p)
        for (std::size_t q = 0; q < split.x_vars.size(); ++q)
            if (pos_block[p] < pos_block[q] && std::abs(out.K.at(p, q)) >= tol.entry)
                out.is_block_lower_triangular = false;
    return out;
}

double reproduction_eval(const ReactionNetwork& net, const VariableSplit& split,
                         const std::vector<int>& block_species,
                         const std::vector<double>& y_values, const ParamMap& params,
                         const Tolerances& tol) {
    if (y_values.size() != split.y_vars.size())
        analysis_fail("non-infected value vector has wrong length");
    std::vector<double> species_values(net.species.size(), 0.0);
    for (std::size_t k = 0; k < split.y_vars.size(); ++k)
        species_values[static_cast<std::size_t>(split.y_vars[k])] = y_values[k];
    std::vector<double> point = assemble_point(net, species_values, params);

    Splitting s = algorithmic_FV(net, split);
    RegularSplittingCheck rsc = regular_splitting_check(s, point, tol);
    if (!rsc.regular) {
        std::string msg = "splitting not regular at evaluation point";
        for (const auto& v : rsc.violations) msg += "; " + v;
        analysis_fail(msg);
    }
    Mat f = eval_poly_matrix(s.F, point);
    Mat v = eval_poly_matrix(s.V, point);
    bool inv = false;
    Mat k = mat_mul(f, mat_inverse(v, &inv));

    std::vector<int> pos;
    for (int sp : block_species) {
        auto it = std::find(split.x_vars.begin(), split.x_vars.end(), sp);
        if (it == split.x_vars.end())
            analysis_fail("block species " + net.species[static_cast<std::size_t>(sp)] +
                          " is not an infected variable");
        pos.push_back(static_cast<int>(it - split.x_vars.begin()));
    }
    std::sort(pos.begin(), pos.end());
    return spectral_radius(submatrix(k, pos));
}

bool metzler_check(const Mat& x, const Tolerances& tol) {
    if (x.rows != x.cols) analysis_fail("matrix not square");
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (i != j && x.at(i, j) < -tol.entry) return false;
    return true;
}

}  // namespace crnkit
