#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "igms.hpp"
#include "network.hpp"
#include "poly.hpp"
#include "tolerances.hpp"

namespace crnkit {

using ParamMap = std::map<std::string, double>;

// Full evaluation vector (species values followed by parameter values, in the
// network's variable order). Errors on parameters missing from the map.
std::vector<double> assemble_point(const ReactionNetwork& net,
                                   const std::vector<double>& species_values,
                                   const ParamMap& params);

struct VariableSplit {
    std::vector<int> x_vars;  // infected species; AMSD species order when it applies
    std::vector<int> y_vars;  // complement, original order
};

VariableSplit default_split(const ReactionNetwork& net);

struct PolyMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<Polynomial> entries;  // row-major

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    Polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols() + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
};

// Dense real matrix, row-major.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat eval_poly_matrix(const PolyMatrix& pm, const std::vector<double>& point);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_inverse(const Mat& x, bool* invertible);
std::vector<std::complex<double>> eigenvalues(const Mat& x);
double spectral_radius(const Mat& x);
double spectral_abscissa(const Mat& x);

struct JacobianBlocks {
    PolyMatrix jx;   // d RHS_x / d x
    PolyMatrix jy;   // d RHS_y / d y
    PolyMatrix jxy;  // d RHS_x / d y
    PolyMatrix jyx;  // d RHS_y / d x
};

JacobianBlocks jacobian_blocks(const ReactionNetwork& net, const VariableSplit& split);

struct Splitting {
    PolyMatrix F;  // gains routed through the non-infected variables
    PolyMatrix V;  // F - Jx, so that Jx = F - V identically
};

Splitting algorithmic_FV(const ReactionNetwork& net, const VariableSplit& split);

struct RegularSplittingCheck {
    bool regular = false;
    bool v_invertible = false;
    std::vector<std::string> violations;
};

RegularSplittingCheck regular_splitting_check(const Splitting& s,
                                              const std::vector<double>& point,
                                              const Tolerances& tol = {});

struct NgmResult {
    std::vector<double> point;
    Mat K;
    std::vector<std::vector<int>> blocks;  // positions into the x ordering
    std::vector<double> rho_per_block;
    std::vector<bool> rho_unique_per_block;  // false when several eigenvalues share the radius
    double R0 = 0.0;
    bool is_block_lower_triangular = false;
    bool splitting_regular = false;
};

// K = F(point) V(point)^-1 by default; use_kd switches to V^-1 F. Refuses when
// the splitting is not regular at the point.
NgmResult ngm_at(const ReactionNetwork& net, const VariableSplit& split,
                 const std::vector<double>& point, const Tolerances& tol = {},
                 bool use_kd = false);

// Spectral radius of the K diagonal block for the given block species, at
// x = 0 and the supplied non-infected values.
double reproduction_eval(const ReactionNetwork& net, const VariableSplit& split,
                         const std::vector<int>& block_species,
                         const std::vector<double>& y_values, const ParamMap& params,
                         const Tolerances& tol = {});

bool metzler_check(const Mat& x, const Tolerances& tol = {});

struct MeModelReport {
    bool total_siphon_nonempty = false;
    bool dfe_exists = false;
    bool jy_hurwitz = false;
    bool jx_metzler = false;
    bool splitting_regular = false;
    bool no_hidden_inflow = false;
    std::vector<std::string> notes;

    bool all_ok() const {
        return total_siphon_nonempty && dfe_exists && jy_hurwitz && jx_metzler &&
               splitting_regular && no_hidden_inflow;
    }
};

MeModelReport me_model_check(const ReactionNetwork& net, const ParamMap& params,
                             const Tolerances& tol = {});

}  // namespace crnkit
