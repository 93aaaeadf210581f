#include "siphons.hpp"

#include <algorithm>
#include <set>

namespace crnkit {

namespace {

using Mask = unsigned long long;

Mask to_mask(const std::vector<int>& w) {
    Mask m = 0;
    for (int i : w) m |= (Mask{1} << i);
    return m;
}

std::vector<int> from_mask(Mask m, std::size_t n) {
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i)
        if (m & (Mask{1} << i)) w.push_back(static_cast<int>(i));
    return w;
}

struct ReactionMasks {
    std::vector<Mask> reactants;
    std::vector<Mask> products;
};

ReactionMasks reaction_masks(const ReactionNetwork& net) {
    if (net.species.size() > 64)
        analysis_fail("siphon analysis supports at most 64 species");
    ReactionMasks rm;
    for (const auto& r : net.reactions) {
        Mask a = 0, b = 0;
        for (const auto& [i, mult] : r.reactants)
            if (mult > 0) a |= (Mask{1} << i);
        for (const auto& [i, mult] : r.products)
            if (mult > 0) b |= (Mask{1} << i);
        rm.reactants.push_back(a);
        rm.products.push_back(b);
    }
    return rm;
}

bool is_siphon_mask(const ReactionMasks& rm, Mask w) {
    for (std::size_t r = 0; r < rm.reactants.size(); ++r)
        if ((rm.products[r] & w) && !(rm.reactants[r] & w)) return false;
    return true;
}

}  // namespace

bool is_siphon(const ReactionNetwork& net, const std::vector<int>& w) {
    return is_siphon_mask(reaction_masks(net), to_mask(w));
}

std::vector<std::vector<int>> minimal_siphons(const ReactionNetwork& net) {
    const std::size_t n = net.species.size();
    ReactionMasks rm = reaction_masks(net);
    StoichStructure st = stoichiometry(net);
    std::vector<bool> input = input_species(net, st);
    Mask allowed = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!input[i]) allowed |= (Mask{1} << i);

    std::vector<Mask> found;  // siphons collected so far (not yet minimized)
    std::set<Mask> visited;

    // Depth-first completion: pick a violated reaction (produces into w,
    // consumes nothing of w) and branch on each allowed reactant species.
    // Supersets of an already-found siphon cannot yield new minimal ones.
    auto search = [&](auto&& self, Mask w) -> void {
        if (!visited.insert(w).second) return;
        for (Mask f : found)
            if ((f & w) == f && f != w) return;
        std::size_t violated = rm.reactants.size();
        for (std::size_t r = 0; r < rm.reactants.size(); ++r) {
            if ((rm.products[r] & w) && !(rm.reactants[r] & w)) {
                violated = r;
                break;
            }
        }
        if (violated == rm.reactants.size()) {
            found.push_back(w);
            return;
        }
        Mask candidates = rm.reactants[violated] & allowed & ~w;
        if (!candidates) return;  // unresolvable branch
        for (std::size_t i = 0; i < n; ++i)
            if (candidates & (Mask{1} << i)) self(self, w | (Mask{1} << i));
    };

    for (std::size_t s = 0; s < n; ++s)
        if (allowed & (Mask{1} << s)) search(search, Mask{1} << s);

    // Keep inclusion-minimal sets only.
    std::vector<Mask> minimal;
    for (Mask w : found) {
        bool keep = true;
        for (Mask o : found)
            if (o != w && (o & w) == o) keep = false;
        if (keep && std::find(minimal.begin(), minimal.end(), w) == minimal.end())
            minimal.push_back(w);
    }
    std::vector<std::vector<int>> out;
    for (Mask w : minimal) out.push_back(from_mask(w, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> minimal_siphons_bruteforce(const ReactionNetwork& net) {
    const std::size_t n = net.species.size();
    if (n > 20) analysis_fail("brute-force siphon enumeration supports at most 20 species");
    ReactionMasks rm = reaction_masks(net);
    std::vector<Mask> siphons;
    for (Mask w = 1; w < (Mask{1} << n); ++w)
        if (is_siphon_mask(rm, w)) siphons.push_back(w);
    std::vector<std::vector<int>> out;
    for (Mask w : siphons) {
        bool minimal = true;
        for (Mask o : siphons)
            if (o != w && (o & w) == o) minimal = false;
        if (minimal) out.push_back(from_mask(w, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> siphons_within(const ReactionNetwork& net,
                                             const std::vector<int>& universe,
                                             std::size_t cap) {
    ReactionMasks rm = reaction_masks(net);
    Mask u = to_mask(universe);
    std::vector<int> members = from_mask(u, net.species.size());
    if (members.size() > 20) analysis_fail("siphon enumeration universe too large");
    std::vector<std::vector<int>> out;
    for (Mask bits = 0; bits < (Mask{1} << members.size()); ++bits) {
        Mask w = 0;
        for (std::size_t k = 0; k < members.size(); ++k)
            if (bits & (Mask{1} << k)) w |= (Mask{1} << members[k]);
        if (is_siphon_mask(rm, w)) {
            out.push_back(from_mask(w, net.species.size()));
            if (out.size() > cap)
                analysis_fail("network has more than " + std::to_string(cap) +
                              " siphons inside the requested universe");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return out;
}

CriticalResult is_critical(const ReactionNetwork& net, const StoichStructure& st,
                           const std::vector<int>& w) {
    // Feasibility of: c >= 0 supported on W, sum_W c = 1, c^T gamma = 0.
    LinearProgram lp;
    lp.nvars = w.size();
    const std::size_t m = net.reactions.size();
    for (std::size_t r = 0; r < m; ++r) {
        LpConstraint c;
        c.a.assign(w.size(), Rational(0));
        for (std::size_t k = 0; k < w.size(); ++k)
            c.a[k] = Rational(st.gamma.at(static_cast<std::size_t>(w[k]), r));
        c.rel = Rel::eq;
        c.b = 0;
        lp.rows.push_back(std::move(c));
    }
    LpConstraint norm;
    norm.a.assign(w.size(), Rational(1));
    norm.rel = Rel::eq;
    norm.b = 1;
    lp.rows.push_back(std::move(norm));

    LpResult res = solve_lp(lp);
    CriticalResult out;
    if (res.status == LpResult::Status::optimal) {
        out.critical = false;
        Certificate cert;
        cert.kind = Certificate::Kind::conservation;
        cert.vec.assign(net.species.size(), Rational(0));
        for (std::size_t k = 0; k < w.size(); ++k)
            cert.vec[static_cast<std::size_t>(w[k])] = res.x[k];
        cert.species_set = w;
        out.conservation = std::move(cert);
    } else {
        out.critical = true;
    }
    return out;
}

namespace {

// Shared builder: maximize t subject to sum v = 1, v >= 0, t >= 0 and the
// requested row conditions; verdict requires t > 0 at the optimum.
struct FluxLp {
    LinearProgram lp;
    std::size_t m;  // reaction count; t is variable index m

    explicit FluxLp(std::size_t reactions) : m(reactions) {
        lp.nvars = m + 1;
        lp.objective.assign(m + 1, Rational(0));
        lp.objective[m] = 1;
        LpConstraint norm;
        norm.a.assign(m + 1, Rational(0));
        for (std::size_t r = 0; r < m; ++r) norm.a[r] = 1;
        norm.rel = Rel::eq;
        norm.b = 1;
        lp.rows.push_back(std::move(norm));
    }

    void add_row(const std::vector<Rational>& gamma_row, Rational t_coeff, Rel rel) {
        LpConstraint c;
        c.a = gamma_row;
        c.a.push_back(t_coeff);
        c.rel = rel;
        c.b = 0;
        lp.rows.push_back(std::move(c));
    }

    void forbid(std::size_t r) {
        LpConstraint c;
        c.a.assign(m + 1, Rational(0));
        c.a[r] = 1;
        c.rel = Rel::eq;
        c.b = 0;
        lp.rows.push_back(std::move(c));
    }
};

std::vector<Rational> gamma_row(const StoichStructure& st, int i, std::size_t m) {
    std::vector<Rational> row(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        row[r] = Rational(st.gamma.at(static_cast<std::size_t>(i), r));
    return row;
}

FluxResult finish_flux(const LpResult& res, Certificate::Kind kind, const std::vector<int>& w,
                       std::size_t m, bool strict) {
    FluxResult out;
    if (res.status != LpResult::Status::optimal || res.objective <= 0) return out;
    out.verdict = true;
    Certificate cert;
    cert.kind = kind;
    cert.vec.assign(res.x.begin(), res.x.begin() + static_cast<long>(m));
    cert.species_set = w;
    cert.strict = strict;
    out.flux = std::move(cert);
    return out;
}

}  // namespace

FluxResult is_drainable(const ReactionNetwork& net, const StoichStructure& st,
                        const std::vector<int>& w) {
    const std::size_t m = net.reactions.size();
    FluxLp f(m);
    for (int i : w) f.add_row(gamma_row(st, i, m), Rational(1), Rel::le);
    return finish_flux(solve_lp(f.lp), Certificate::Kind::drain_flux, w, m, false);
}

FluxResult is_self_replicable(const ReactionNetwork& net, const StoichStructure& st,
                              const std::vector<int>& w, ReplicableMode mode) {
    const std::size_t m = net.reactions.size();
    FluxLp f(m);
    for (int i : w) f.add_row(gamma_row(st, i, m), Rational(-1), Rel::ge);
    if (mode == ReplicableMode::strict) {
        std::vector<bool> in_w(net.species.size(), false);
        for (int i : w) in_w[static_cast<std::size_t>(i)] = true;
        for (std::size_t i = 0; i < net.species.size(); ++i)
            if (!in_w[i])
                f.add_row(gamma_row(st, static_cast<int>(i), m), Rational(0), Rel::eq);
    }
    return finish_flux(solve_lp(f.lp), Certificate::Kind::replicate_flux, w, m,
                       mode == ReplicableMode::strict);
}

namespace {

FluxResult autocatalytic_lp(const ReactionNetwork& net, const StoichStructure& st,
                            const std::vector<int>& w, bool exclusive_support) {
    const std::size_t m = net.reactions.size();
    FluxLp f(m);
    std::vector<bool> in_w(net.species.size(), false);
    for (int i : w) in_w[static_cast<std::size_t>(i)] = true;
    for (int i : w) f.add_row(gamma_row(st, i, m), Rational(-1), Rel::ge);
    for (std::size_t i = 0; i < net.species.size(); ++i)
        if (!in_w[i]) f.add_row(gamma_row(st, static_cast<int>(i), m), Rational(0), Rel::eq);
    // Participation: each member of W must be consumed by flux-carrying
    // reactions with total weight at least t.
    for (int i : w) {
        std::vector<Rational> row(m, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            auto it = net.reactions[r].reactants.find(i);
            if (it != net.reactions[r].reactants.end() && it->second > 0) row[r] = 1;
        }
        f.add_row(row, Rational(-1), Rel::ge);
    }
    if (exclusive_support) {
        for (std::size_t r = 0; r < m; ++r) {
            bool consumes = false;
            for (int i : w)
                if (net.reactions[r].reactants.count(i)) consumes = true;
            if (!consumes) f.forbid(r);
        }
    }
    return finish_flux(solve_lp(f.lp), Certificate::Kind::replicate_flux, w, m, true);
}

}  // namespace

FluxResult is_autocatalytic_set(const ReactionNetwork& net, const StoichStructure& st,
                                const std::vector<int>& w) {
    return autocatalytic_lp(net, st, w, false);
}

FluxResult is_exclusive_autocatalytic(const ReactionNetwork& net, const StoichStructure& st,
                                      const std::vector<int>& w) {
    return autocatalytic_lp(net, st, w, true);
}

bool is_exclusive(const ReactionNetwork& net, const std::vector<int>& reaction_subset,
                  const std::vector<int>& m) {
    for (int r : reaction_subset) {
        if (r < 0 || static_cast<std::size_t>(r) >= net.reactions.size())
            analysis_fail("reaction index out of range");
        bool consumes = false;
        for (int i : m)
            if (net.reactions[static_cast<std::size_t>(r)].reactants.count(i)) consumes = true;
        if (!consumes) return false;
    }
    return true;
}

std::vector<int> total_siphon(const ReactionNetwork& net, const StoichStructure& st) {
    std::set<int> acc;
    for (const auto& w : minimal_siphons(net))
        if (is_critical(net, st, w).critical) acc.insert(w.begin(), w.end());
    return {acc.begin(), acc.end()};
}

std::vector<Core> autocatalytic_cores(const ReactionNetwork& net, const StoichStructure& st,
                                      int max_core_size, bool* truncated) {
    const std::size_t n = net.species.size();
    const std::size_t m = net.reactions.size();
    if (max_core_size < 1 || max_core_size > 12)
        analysis_fail("core size bound must be between 1 and 12");
    std::size_t bound = std::min({static_cast<std::size_t>(max_core_size), n, m});
    if (truncated) *truncated = bound < std::min(n, m);

    std::vector<Core> cores;
    auto contains_found = [&](const std::vector<int>& u, const std::vector<int>& rs) {
        for (const auto& c : cores) {
            if (std::includes(u.begin(), u.end(), c.species.begin(), c.species.end()) &&
                std::includes(rs.begin(), rs.end(), c.reactions.begin(), c.reactions.end()))
                return true;
        }
        return false;
    };

    // Combinations in lexicographic order for deterministic output.
    auto next_comb = [](std::vector<int>& idx, int limit) {
        int k = static_cast<int>(idx.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx[static_cast<std::size_t>(i)] < limit - (k - i)) {
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };

    for (std::size_t k = 1; k <= bound; ++k) {
        std::vector<int> u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = static_cast<int>(i);
        do {
            // Admissible reactions must consume a species of U.
            std::vector<int> adm;
            for (std::size_t r = 0; r < m; ++r) {
                bool consumes = false;
                for (int i : u)
                    if (net.reactions[r].reactants.count(i)) consumes = true;
                if (consumes) adm.push_back(static_cast<int>(r));
            }
            if (adm.size() < k) continue;
            std::vector<int> pick(k);
            for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<int>(i);
            do {
                std::vector<int> rs(k);
                for (std::size_t i = 0; i < k; ++i)
                    rs[i] = adm[static_cast<std::size_t>(pick[i])];
                if (contains_found(u, rs)) continue;
                // max t: Gamma[U, R] v >= t per row, sum v = 1.
                LinearProgram lp;
                lp.nvars = k + 1;
                lp.objective.assign(k + 1, Rational(0));
                lp.objective[k] = 1;
                LpConstraint norm;
                norm.a.assign(k + 1, Rational(0));
                for (std::size_t i = 0; i < k; ++i) norm.a[i] = 1;
                norm.rel = Rel::eq;
                norm.b = 1;
                lp.rows.push_back(std::move(norm));
                for (int i : u) {
                    LpConstraint c;
                    c.a.assign(k + 1, Rational(0));
                    for (std::size_t j = 0; j < k; ++j)
                        c.a[j] = Rational(st.gamma.at(static_cast<std::size_t>(i),
                                                      static_cast<std::size_t>(rs[j])));
                    c.a[k] = -1;
                    c.rel = Rel::ge;
                    c.b = 0;
                    lp.rows.push_back(std::move(c));
                }
                LpResult res = solve_lp(lp);
                if (res.status == LpResult::Status::optimal && res.objective > 0) {
                    Core core;
                    core.species = u;
                    core.reactions = rs;
                    core.flux.kind = Certificate::Kind::core_flux;
                    core.flux.vec.assign(m, Rational(0));
                    for (std::size_t j = 0; j < k; ++j)
                        core.flux.vec[static_cast<std::size_t>(rs[j])] = res.x[j];
                    core.flux.species_set = u;
                    core.flux.reaction_set = rs;
                    cores.push_back(std::move(core));
                }
            } while (next_comb(pick, static_cast<int>(adm.size())));
        } while (next_comb(u, static_cast<int>(n)));
    }
    return cores;
}

bool Certificate::verify(const ReactionNetwork& net, const StoichStructure& st) const {
    const std::size_t n = net.species.size();
    const std::size_t m = net.reactions.size();
    bool nonzero = false;
    for (const auto& v : vec) {
        if (v < 0) return false;
        if (v != 0) nonzero = true;
    }
    if (!nonzero) return false;

    std::vector<bool> in_set(n, false);
    for (int i : species_set) in_set[static_cast<std::size_t>(i)] = true;

    if (kind == Kind::conservation) {
        if (vec.size() != n) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (vec[i] != 0 && !in_set[i]) return false;
        for (std::size_t r = 0; r < m; ++r) {
            Rational acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += vec[i] * Rational(st.gamma.at(i, r));
            if (acc != 0) return false;
        }
        return true;
    }

    if (vec.size() != m) return false;
    std::vector<Rational> gv(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < m; ++r) gv[i] += Rational(st.gamma.at(i, r)) * vec[r];

    switch (kind) {
        case Kind::drain_flux:
            for (int i : species_set)
                if (gv[static_cast<std::size_t>(i)] >= 0) return false;
            return true;
        case Kind::replicate_flux:
            for (int i : species_set)
                if (gv[static_cast<std::size_t>(i)] <= 0) return false;
            if (strict) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!in_set[i] && gv[i] != 0) return false;
            }
            return true;
        case Kind::core_flux: {
            std::vector<bool> in_rs(m, false);
            for (int r : reaction_set) in_rs[static_cast<std::size_t>(r)] = true;
            for (std::size_t r = 0; r < m; ++r)
                if (vec[r] != 0 && !in_rs[r]) return false;
            for (int r : reaction_set) {
                bool consumes = false;
                for (int i : species_set)
                    if (net.reactions[static_cast<std::size_t>(r)].reactants.count(i))
                        consumes = true;
                if (!consumes) return false;
            }
            for (int i : species_set) {
                Rational acc(0);
                for (int r : reaction_set)
                    acc += Rational(st.gamma.at(static_cast<std::size_t>(i),
                                                static_cast<std::size_t>(r))) *
                           vec[static_cast<std::size_t>(r)];
                if (acc <= 0) return false;
            }
            return true;
        }
        case Kind::conservation:
            break;
    }
    return false;
}

SiphonAnalysis analyze_siphons(const ReactionNetwork& net) {
    StoichStructure st = stoichiometry(net);
    SiphonAnalysis out;
    std::set<int> total_acc;
    for (const auto& w : minimal_siphons(net)) {
        SiphonReport v;
        v.set = w;
        CriticalResult cr = is_critical(net, st, w);
        v.is_critical = cr.critical;
        v.conservation = cr.conservation;
        FluxResult dr = is_drainable(net, st, w);
        v.is_drainable = dr.verdict;
        v.drain = dr.flux;
        FluxResult rr = is_self_replicable(net, st, w, ReplicableMode::restricted);
        v.is_self_replicable_restricted = rr.verdict;
        v.replicate = rr.flux;
        FluxResult rs = is_self_replicable(net, st, w, ReplicableMode::strict);
        v.is_self_replicable_strict = rs.verdict;
        v.replicate_strict = rs.flux;
        FluxResult ac = is_autocatalytic_set(net, st, w);
        v.is_autocatalytic = ac.verdict;
        v.autocat = ac.flux;
        v.is_exclusive = is_exclusive_autocatalytic(net, st, w).verdict;
        if (v.is_critical) {
            total_acc.insert(w.begin(), w.end());
            if (!v.is_drainable && !v.is_self_replicable_restricted) out.dichotomy_holds = false;
        }
        out.siphons.push_back(std::move(v));
    }
    out.total.assign(total_acc.begin(), total_acc.end());
    return out;
}

}  // namespace crnkit
