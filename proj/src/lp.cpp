#include "lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace crnkit {

namespace {

// Full-tableau simplex. The objective row stores z_j - c_j; an entering
// column has a negative entry there. Bland's rule: smallest eligible column,
// ties on the ratio test broken by smallest basic variable.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols) {
        a_.assign(m_ + 1, std::vector<Rational>(n_ + 1, Rational(0)));
        basis_.assign(m_, 0);
    }

    std::vector<Rational>& row(std::size_t i) { return a_[i]; }
    std::vector<Rational>& obj() { return a_[m_]; }
    std::size_t& basis(std::size_t i) { return basis_[i]; }

    // Returns false when unbounded.
    bool run(std::size_t limit_cols) {
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < limit_cols; ++j) {
                if (a_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_) return true;
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = a_[i][n_] / a_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t l, std::size_t e) {
        Rational p = a_[l][e];
        for (auto& v : a_[l]) v /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == l) continue;
            Rational f = a_[i][e];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j) a_[i][j] -= f * a_[l][j];
        }
        basis_[l] = e;
    }

    std::size_t m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const std::size_t n = lp.nvars;
    const std::size_t m = lp.rows.size();
    for (const auto& r : lp.rows)
        if (r.a.size() != n) throw std::invalid_argument("constraint width mismatch");
    if (!lp.objective.empty() && lp.objective.size() != n)
        throw std::invalid_argument("objective width mismatch");

    // Columns: n structural, then one slack/surplus per inequality, then one
    // artificial per row.
    std::size_t nslack = 0;
    for (const auto& r : lp.rows)
        if (r.rel != Rel::eq) ++nslack;
    std::size_t cols = n + nslack + m;
    Tableau t(m, cols);

    std::size_t slack_at = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.rows[i];
        bool flip = c.b < 0;
        for (std::size_t j = 0; j < n; ++j) t.row(i)[j] = flip ? -c.a[j] : c.a[j];
        t.row(i)[cols] = flip ? -c.b : c.b;
        if (c.rel != Rel::eq) {
            Rational s = (c.rel == Rel::le) ? Rational(1) : Rational(-1);
            t.row(i)[slack_at++] = flip ? -s : s;
        }
        t.row(i)[n + nslack + i] = 1;
        t.basis(i) = n + nslack + i;
    }

    // Phase 1: maximize -sum(artificials); obj row z_j - c_j with c = -1 on
    // artificials, eliminated over the artificial basis.
    for (std::size_t j = 0; j < cols; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < m; ++i) acc -= t.row(i)[j];
        t.obj()[j] = (j >= n + nslack) ? acc + 1 : acc;
    }
    {
        Rational acc(0);
        for (std::size_t i = 0; i < m; ++i) acc -= t.row(i)[cols];
        t.obj()[cols] = acc;
    }
    if (!t.run(cols)) throw std::logic_error("phase-1 simplex unbounded");
    LpResult res;
    if (t.obj()[cols] != 0) {
        res.status = LpResult::Status::infeasible;
        return res;
    }
    // Drive leftover artificials out of the basis; a row with no structural
    // pivot available is redundant and can be zeroed.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis(i) < n + nslack) continue;
        std::size_t piv = cols;
        for (std::size_t j = 0; j < n + nslack; ++j) {
            if (t.row(i)[j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv != cols) t.pivot(i, piv);
    }

    // Phase 2 objective over structural variables only.
    for (std::size_t j = 0; j <= cols; ++j) t.obj()[j] = 0;
    if (!lp.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) t.obj()[j] = -lp.objective[j];
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t b = t.basis(i);
            if (b < n && lp.objective[b] != 0) {
                Rational f = lp.objective[b];
                for (std::size_t j = 0; j <= cols; ++j) t.obj()[j] += f * t.row(i)[j];
            }
        }
    }
    if (!t.run(n + nslack)) {
        res.status = LpResult::Status::unbounded;
        return res;
    }

    res.status = LpResult::Status::optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis(i) < n) res.x[t.basis(i)] = t.row(i)[cols];
    res.objective = t.obj()[cols];
    return res;
}

}  // namespace crnkit
