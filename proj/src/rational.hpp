#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crnkit {

using Rational = mpq_class;

// Parses an exact rational literal: "7", "-3/4", "0.25", "1e3", "2.5e-2".
// Decimal and exponent forms are converted exactly (0.1 -> 1/10), never via
// binary floating point.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    bool saw_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
        saw_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_digits;
            saw_digit = true;
        }
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp_neg = (s[pos] == '-');
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("malformed exponent in numeric literal: " + text);
        long e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            e = e * 10 + (s[pos++] - '0');
        exponent = exp_neg ? -e : e;
    }
    if (pos < s.size() && s[pos] == '/') {
        // Plain fraction p/q; only valid when no decimal point or exponent was used.
        if (frac_digits != 0 || exponent != 0)
            throw std::invalid_argument("mixed decimal and fraction syntax: " + text);
        std::string den = s.substr(pos + 1);
        if (den.empty()) throw std::invalid_argument("missing denominator: " + text);
        for (char c : den)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed denominator: " + text);
        // Base 10 always; the default base 0 reads a leading zero as octal.
        mpz_class num(digits.empty() ? "0" : digits, 10), d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        Rational r(num, d);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }
    if (pos != s.size() || !saw_digit)
        throw std::invalid_argument("malformed numeric literal: " + text);
    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    Rational r(mantissa);
    long net = exponent - frac_digits;
    if (net > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(net));
        r *= Rational(p);
    } else if (net < 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-net));
        r /= Rational(p);
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

// Renders "p" or "p/q" (canonical lowest terms).
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace crnkit
