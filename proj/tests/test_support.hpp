#pragma once

// Shared helpers for the test suites: fixture loading, deterministic rational
// draws, and the closed-form equilibrium formulas used as oracles.

#include "fixtures.hpp"
#include "network.hpp"
#include "ngm.hpp"
#include "rational.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

using crnkit::ParamMap;
using crnkit::Rational;
using crnkit::ReactionNetwork;

inline ReactionNetwork load(const std::string& name) {
    return crnkit::load_fixture(name);
}

// Deterministic positive rationals with power-of-two denominators, so that
// to_double round-trips exactly and double evaluation sees the same point as
// rational evaluation.
class RatGen {
public:
    explicit RatGen(std::uint64_t seed) : s_(seed ? seed : 1) {}

    Rational next(long lo_num = 1, long hi_num = 64, long denom = 16) {
        std::uint64_t x = step();
        long span = hi_num - lo_num + 1;
        long num = lo_num + static_cast<long>(x % static_cast<std::uint64_t>(span));
        Rational r(num, denom);
        r.canonicalize();
        return r;
    }

    double next_double(double lo, double hi) {
        std::uint64_t x = step();
        double u = static_cast<double>(x >> 11) / 9007199254740992.0;
        return lo + u * (hi - lo);
    }

private:
    std::uint64_t step() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    std::uint64_t s_;
};

inline double rel_err(double got, double expect) {
    double scale = std::max(1.0, std::abs(expect));
    return std::abs(got - expect) / scale;
}

using RMap = std::map<std::string, Rational>;

inline ParamMap to_params(const RMap& r) {
    ParamMap out;
    for (const auto& [k, v] : r) out[k] = crnkit::to_double(v);
    return out;
}

inline Rational at(const RMap& m, const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) throw std::runtime_error("missing key " + k);
    return it->second;
}

// ---------------------------------------------------------------------------
// SI2V closed forms. Species: S I1 I2 V.

struct Si2vForms {
    Rational s0, v0, r1, r2;          // disease-free values and reproduction numbers
    Rational s1, i11, v1, rt21;       // strain-1 equilibrium and invasion of strain 2
    Rational sstar, vstar, i1star, i2star;  // coexistence point
    bool estar_positive = false;
};

inline Si2vForms si2v_forms(const RMap& p) {
    Rational La = at(p, "La"), mu = at(p, "mu"), ro = at(p, "ro");
    Rational be1 = at(p, "be1"), be2 = at(p, "be2"), bev = at(p, "bev");
    Rational mu1 = at(p, "mu1"), mu2 = at(p, "mu2"), muv = at(p, "muv");

    Si2vForms f;
    f.s0 = La / (mu + ro);
    f.v0 = ro * f.s0 / muv;
    f.r1 = be1 * f.s0 / mu1;
    f.r2 = (be2 * f.s0 + bev * f.v0) / mu2;

    f.s1 = mu1 / be1;
    f.i11 = (be1 * La - mu1 * ro - mu * mu1) / (be1 * mu1);
    f.v1 = ro * f.s1 / muv;
    f.rt21 = (be2 * f.s1 + bev * f.v1) / mu2;

    Rational cr1 = be1 / mu1, cr2 = be2 / mu2;
    f.sstar = mu1 / be1;
    if (cr1 > cr2) {
        f.vstar = mu1 * mu2 * (cr1 - cr2) / (be1 * bev);
        f.i2star = ro * f.sstar / (f.vstar * bev) - muv / bev;
        f.i1star = (La / f.sstar - be2 * f.i2star - mu - ro) / be1;
        f.estar_positive = f.vstar > 0 && f.i1star > 0 && f.i2star > 0;
    }
    return f;
}

// Strain-2 single equilibrium needs the positive root of a quadratic; only
// the susceptible value is needed (for the invasion number of strain 1).
inline double si2v_s2(const RMap& p) {
    double La = crnkit::to_double(at(p, "La")), mu = crnkit::to_double(at(p, "mu"));
    double ro = crnkit::to_double(at(p, "ro")), be2 = crnkit::to_double(at(p, "be2"));
    double bev = crnkit::to_double(at(p, "bev")), mu2 = crnkit::to_double(at(p, "mu2"));
    double muv = crnkit::to_double(at(p, "muv"));
    double A = mu2 * be2 * bev;
    double B = mu2 * (mu + ro) * bev + be2 * (mu2 * muv - La * bev);
    double C = mu2 * (mu + ro) * muv - La * (be2 * muv + ro * bev);
    double disc = B * B - 4 * A * C;
    double i2 = (-B + std::sqrt(disc)) / (2 * A);
    return La / (mu + ro + be2 * i2);
}

// ---------------------------------------------------------------------------
// Gavish single-strain equilibrium and the strain-2 invasion number.
// Species: S I1 I2 I21 I12 R1 R2 R12.

struct GavishE1 {
    Rational s1, i1, r1, rinv2;
};

inline GavishE1 gavish_e1(const RMap& p) {
    Rational La = at(p, "La"), mu = at(p, "mu");
    Rational be1 = at(p, "be1"), be2 = at(p, "be2");
    Rational ga1 = at(p, "ga1"), ga2 = at(p, "ga2");
    Rational th1 = at(p, "th1"), si2 = at(p, "si2"), et2 = at(p, "et2");

    Rational s0 = La / mu;
    Rational gt1 = ga1 / (ga1 + th1 + mu);
    GavishE1 e;
    e.s1 = (ga1 + mu) / be1;
    e.r1 = gt1 * (s0 - e.s1);
    e.i1 = (1 - gt1) * (s0 - e.s1);
    Rational cr2 = be2 / (ga2 + mu);
    e.rinv2 = cr2 * (si2 * et2 * e.r1 + e.s1);
    return e;
}

// ---------------------------------------------------------------------------
// Antisymmetric coinfection model: the six rational fixed points.
// Species: S I1 I2 I3.

struct GkAntisymPoints {
    // Each point maps species name to value; absent entries are zero.
    RMap dfe, e1, e2, e3, e13, e23;
    bool all_positive = false;  // every point exists with positive off-face coords
};

inline GkAntisymPoints gk_antisym_points(const RMap& p) {
    Rational b = at(p, "b"), mu0 = at(p, "mu0");
    Rational mu1 = at(p, "mu1"), mu2 = at(p, "mu2"), mu3 = at(p, "mu3");
    Rational al1 = at(p, "al1"), al2 = at(p, "al2"), al3 = at(p, "al3");
    Rational eta1 = at(p, "eta1"), eta2 = at(p, "eta2");

    Rational s0 = b / mu0;
    Rational cr1 = al1 / mu1, cr2 = al2 / mu2, cr3 = al3 / mu3;

    GkAntisymPoints g;
    g.dfe = {{"S", s0}, {"I1", 0}, {"I2", 0}, {"I3", 0}};

    Rational s1 = 1 / cr1, s2 = 1 / cr2, s3 = 1 / cr3;
    g.e1 = {{"S", s1}, {"I1", (mu0 / mu1) * (s0 - s1)}, {"I2", 0}, {"I3", 0}};
    g.e2 = {{"S", s2}, {"I1", 0}, {"I2", (mu0 / mu2) * (s0 - s2)}, {"I3", 0}};
    g.e3 = {{"S", s3}, {"I1", 0}, {"I2", 0}, {"I3", (mu0 / mu3) * (s0 - s3)}};

    Rational d13 = mu1 * mu3 * (cr1 - cr3) + eta1 * mu0;
    Rational s13 = s0 * mu0 * eta1 / d13;
    g.e13 = {{"S", s13},
             {"I1", (mu3 / eta1) * (1 - cr3 * s13)},
             {"I2", 0},
             {"I3", (mu1 / eta1) * (cr1 * s13 - 1)}};

    Rational d23 = mu2 * mu3 * (cr2 - cr3) + eta2 * mu0;
    Rational s23 = s0 * mu0 * eta2 / d23;
    g.e23 = {{"S", s23},
             {"I1", 0},
             {"I2", (mu3 / eta2) * (1 - cr3 * s23)},
             {"I3", (mu2 / eta2) * (cr2 * s23 - 1)}};

    auto positive = [](const RMap& m, std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (at(m, k) <= 0) return false;
        return true;
    };
    g.all_positive = positive(g.dfe, {"S"}) && positive(g.e1, {"S", "I1"}) &&
                     positive(g.e2, {"S", "I2"}) && positive(g.e3, {"S", "I3"}) &&
                     d13 > 0 && positive(g.e13, {"S", "I1", "I3"}) && d23 > 0 &&
                     positive(g.e23, {"S", "I2", "I3"});
    return g;
}

// ---------------------------------------------------------------------------
// Expected-point comparison against a solver equilibrium.

inline double point_distance(const ReactionNetwork& net, const std::vector<double>& values,
                             const RMap& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < net.species.size(); ++i) {
        double e = crnkit::to_double(at(expected, net.species[i]));
        double scale = std::max(1.0, std::abs(e));
        worst = std::max(worst, std::abs(values[i] - e) / scale);
    }
    return worst;
}

}  // namespace testsupport
