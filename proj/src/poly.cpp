#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace crnkit {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({c, std::vector<unsigned>(nvars, 0)});
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[var] = 1;
    p.terms_.push_back({Rational(1), std::move(e)});
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_[0].exps)
        if (e != 0) return false;
    return true;
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

void Polynomial::add_term(const Rational& coeff, const std::vector<unsigned>& exps) {
    if (exps.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    terms_.push_back({coeff, exps});
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Monomial& m) { return m.coeff == 0; }),
              out.end());
    terms_ = std::move(out);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable universe mismatch");
    Polynomial r(nvars_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable universe mismatch");
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m;
            m.coeff = a.coeff * b.coeff;
            m.exps.resize(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m.exps[i] = a.exps[i] + b.exps[i];
            r.terms_.push_back(std::move(m));
        }
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::scaled(const Rational& k) const {
    Polynomial r(*this);
    if (k == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& t : r.terms_) t.coeff *= k;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(nvars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].exps != o.terms_[i].exps)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& t : terms_) {
        if (t.exps[var] == 0) continue;
        Monomial m;
        m.coeff = t.coeff * static_cast<long>(t.exps[var]);
        m.exps = t.exps;
        m.exps[var] -= 1;
        r.terms_.push_back(std::move(m));
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
    if (var >= nvars_) throw std::out_of_range("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& t : terms_) {
        Monomial m;
        m.coeff = t.coeff;
        for (unsigned k = 0; k < t.exps[var]; ++k) m.coeff *= value;
        if (m.coeff == 0) continue;
        m.exps = t.exps;
        m.exps[var] = 0;
        r.terms_.push_back(std::move(m));
    }
    r.normalize();
    return r;
}

Rational Polynomial::eval_exact(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < t.exps[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

double Polynomial::eval(const std::vector<double>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
    double acc = 0.0;
    for (const auto& t : terms_) {
        double v = to_double(t.coeff);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 1)
                v *= point[i];
            else if (t.exps[i] > 1)
                v *= std::pow(point[i], static_cast<int>(t.exps[i]));
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::positive_part() const {
    Polynomial r(nvars_);
    for (const auto& t : terms_)
        if (t.coeff > 0) r.terms_.push_back(t);
    return r;
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[var]);
    return d;
}

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Render highest-order terms last is arbitrary; canonical order is the
    // internal lexicographic one, which keeps output deterministic.
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = false;
        for (unsigned e : t.exps)
            if (e > 0) has_var = true;
        if (c != 1 || !has_var) os << rational_to_string(c);
        bool star = (c != 1 || !has_var);
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < 1 && t.exps[i] > 0; ++k) {
                if (star) os << "*";
                os << name(i);
                if (t.exps[i] > 1) os << "^" << t.exps[i];
                star = true;
            }
        }
    }
    return os.str();
}

}  // namespace crnkit
