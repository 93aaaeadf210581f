#pragma once

#include "rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace crnkit {

// A monomial over a fixed variable universe: exact rational coefficient and a
// dense exponent vector (one entry per variable, nonnegative).
struct Monomial {
    Rational coeff;
    std::vector<unsigned> exps;
};

// Sparse polynomial kept permanently in canonical form: monomials sorted by
// exponent vector (lexicographic), no duplicates, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t var);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant value; throws unless is_constant().
    Rational constant_value() const;

    void add_term(const Rational& coeff, const std::vector<unsigned>& exps);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& k) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;

    Polynomial derivative(std::size_t var) const;
    // Replaces one variable by an exact constant.
    Polynomial substitute(std::size_t var, const Rational& value) const;

    Rational eval_exact(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    // Keeps only monomials with coeff > 0 (used by the infection/transition
    // splitting construction).
    Polynomial positive_part() const;

    unsigned degree_in(std::size_t var) const;

    // Rendering with caller-supplied variable names, deterministic term order.
    std::string to_string(const std::function<std::string(std::size_t)>& name) const;

private:
    void normalize();
    std::size_t nvars_ = 0;
    std::vector<Monomial> terms_;
};

}  // namespace crnkit
