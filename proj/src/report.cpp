#include "report.hpp"

#include <algorithm>
#include <set>

#include "boundary.hpp"
#include "json.hpp"
#include "siphons.hpp"

namespace crnkit {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json names_of(const ReactionNetwork& net, const std::vector<int>& idxs) {
    json out = json::array();
    for (int i : idxs) out.push_back(net.species[static_cast<std::size_t>(i)]);
    return out;
}

json int_matrix_json(const IntMatrix& m, const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        entries.push_back(row);
    }
    return {{"row_labels", row_labels}, {"col_labels", col_labels}, {"entries", entries}};
}

json mat_json(const Mat& m, const std::vector<std::string>& row_labels,
              const std::vector<std::string>& col_labels) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        entries.push_back(row);
    }
    return {{"row_labels", row_labels}, {"col_labels", col_labels}, {"entries", entries}};
}

std::vector<std::string> reaction_labels(const ReactionNetwork& net) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < net.reactions.size(); ++j) out.push_back("r" + std::to_string(j));
    return out;
}

std::vector<std::string> pick_names(const ReactionNetwork& net, const std::vector<int>& idxs) {
    std::vector<std::string> out;
    for (int i : idxs) out.push_back(net.species[static_cast<std::size_t>(i)]);
    return out;
}

json poly_string(const ReactionNetwork& net, const Polynomial& p) {
    return p.to_string([&](std::size_t v) { return net.var_name(v); });
}

json certificate_json(const ReactionNetwork& net, const Certificate& cert) {
    json j;
    switch (cert.kind) {
        case Certificate::Kind::conservation: j["kind"] = "conservation"; break;
        case Certificate::Kind::drain_flux: j["kind"] = "drain_flux"; break;
        case Certificate::Kind::replicate_flux: j["kind"] = "replicate_flux"; break;
        case Certificate::Kind::core_flux: j["kind"] = "core_flux"; break;
    }
    j["over"] = cert.kind == Certificate::Kind::conservation ? "species" : "reactions";
    json vec = json::array();
    for (const auto& r : cert.vec) vec.push_back(rational_to_string(r));
    j["vec"] = vec;
    j["species_set"] = names_of(net, cert.species_set);
    if (!cert.reaction_set.empty()) j["reaction_set"] = cert.reaction_set;
    j["strict"] = cert.strict;
    j["verified"] = cert.verify(net, stoichiometry(net));
    return j;
}

json equilibrium_json(const ReactionNetwork& net, const BoundaryEquilibrium& eq) {
    json values;
    for (std::size_t i = 0; i < net.species.size(); ++i) values[net.species[i]] = eq.values[i];
    json eigs = json::array();
    for (const auto& z : eq.eigenvalues) eigs.push_back({{"re", z.real()}, {"im", z.imag()}});
    return {{"face", names_of(net, eq.face)},
            {"values", values},
            {"residual", eq.residual},
            {"eigenvalues", eigs},
            {"classification", eq.classification},
            {"source", eq.source}};
}

json ngm_result_json(const ReactionNetwork& net, const VariableSplit& split,
                     const NgmResult& res, bool use_kd) {
    std::vector<std::string> x_names = pick_names(net, split.x_vars);
    json point;
    for (std::size_t v = 0; v < net.nvars(); ++v) point[net.var_name(v)] = res.point[v];
    json blocks = json::array();
    for (const auto& b : res.blocks) {
        json names = json::array();
        for (int pos : b) names.push_back(x_names[static_cast<std::size_t>(pos)]);
        blocks.push_back(names);
    }
    json uniq = json::array();
    for (bool u : res.rho_unique_per_block) uniq.push_back(u);
    return {{"kind", use_kd ? "V^-1 F" : "F V^-1"},
            {"point", point},
            {"x_vars", x_names},
            {"K", mat_json(res.K, x_names, x_names)},
            {"blocks", blocks},
            {"rho_per_block", res.rho_per_block},
            {"rho_unique_per_block", uniq},
            {"R0", res.R0},
            {"is_block_lower_triangular", res.is_block_lower_triangular},
            {"splitting_regular", res.splitting_regular}};
}

// Faces inside the total siphon, largest first so embedded duplicates attach
// to the most constrained face that produced them.
std::vector<BoundaryEquilibrium> boundary_sweep(const ReactionNetwork& net,
                                                const ParamMap& params, const Tolerances& tol) {
    StoichStructure st = stoichiometry(net);
    std::vector<int> ts = total_siphon(net, st);
    std::vector<std::vector<int>> faces = siphons_within(net, ts, 64);
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<BoundaryEquilibrium> found;
    for (const auto& face : faces) {
        for (auto& eq : find_boundary_equilibria(net, params, face, tol)) {
            bool dup = false;
            for (const auto& prev : found) {
                double d = 0.0;
                for (std::size_t i = 0; i < eq.values.size(); ++i)
                    d = std::max(d, std::abs(eq.values[i] - prev.values[i]));
                if (d < tol.dedup) dup = true;
            }
            if (!dup) found.push_back(std::move(eq));
        }
    }
    return found;
}

}  // namespace

std::string network_json(const ReactionNetwork& net) {
    StoichStructure st = stoichiometry(net);
    MassActionReport ma = validate_mass_action(net);
    std::vector<Polynomial> rhs = build_rhs(net);
    std::vector<std::string> rlabels = reaction_labels(net);

    json reactions = json::array();
    for (std::size_t j = 0; j < net.reactions.size(); ++j) {
        const Reaction& r = net.reactions[j];
        json reac, prod;
        for (const auto& [sp, k] : r.reactants) reac[net.species[static_cast<std::size_t>(sp)]] = k;
        for (const auto& [sp, k] : r.products) prod[net.species[static_cast<std::size_t>(sp)]] = k;
        reactions.push_back({{"reactants", reac},
                             {"products", prod},
                             {"rate", poly_string(net, r.rate)},
                             {"text", reaction_to_string(net, r)},
                             {"mass_action", static_cast<bool>(ma.reaction_ok[j])}});
    }
    json rhs_json;
    for (std::size_t i = 0; i < net.species.size(); ++i)
        rhs_json[net.species[i]] = poly_string(net, rhs[i]);

    std::vector<bool> inputs = input_species(net, st);
    json input_names = json::array();
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (inputs[i]) input_names.push_back(net.species[i]);

    json j = {{"schema_version", kSchemaVersion},
              {"species", net.species},
              {"params", net.params},
              {"reactions", reactions},
              {"alpha", int_matrix_json(st.alpha, net.species, rlabels)},
              {"beta", int_matrix_json(st.beta, net.species, rlabels)},
              {"gamma", int_matrix_json(st.gamma, net.species, rlabels)},
              {"rhs", rhs_json},
              {"input_species", input_names},
              {"hidden_inflow_reactions", hidden_inflow_reactions(net, st)},
              {"mass_action", ma.all_ok}};
    return dump(j);
}

std::string siphons_json(const ReactionNetwork& net, bool with_certificates,
                         int max_core_size) {
    SiphonAnalysis an = analyze_siphons(net);
    json siphons = json::array();
    for (const auto& rep : an.siphons) {
        json j = {{"set", names_of(net, rep.set)},
                  {"is_minimal", rep.is_minimal},
                  {"is_critical", rep.is_critical},
                  {"is_drainable", rep.is_drainable},
                  {"is_self_replicable_restricted", rep.is_self_replicable_restricted},
                  {"is_self_replicable_strict", rep.is_self_replicable_strict},
                  {"is_autocatalytic", rep.is_autocatalytic},
                  {"is_exclusive", rep.is_exclusive}};
        if (with_certificates) {
            json certs;
            if (rep.conservation) certs["conservation"] = certificate_json(net, *rep.conservation);
            if (rep.drain) certs["drain"] = certificate_json(net, *rep.drain);
            if (rep.replicate) certs["replicate"] = certificate_json(net, *rep.replicate);
            if (rep.replicate_strict)
                certs["replicate_strict"] = certificate_json(net, *rep.replicate_strict);
            if (rep.autocat) certs["autocat"] = certificate_json(net, *rep.autocat);
            j["certificates"] = certs;
        }
        siphons.push_back(j);
    }
    json out = {{"schema_version", kSchemaVersion},
                {"siphons", siphons},
                {"total_siphon", names_of(net, an.total)},
                {"dichotomy_holds", an.dichotomy_holds}};
    if (max_core_size > 0) {
        StoichStructure st = stoichiometry(net);
        bool truncated = false;
        json cores = json::array();
        for (const auto& core : autocatalytic_cores(net, st, max_core_size, &truncated)) {
            json c = {{"species", names_of(net, core.species)}, {"reactions", core.reactions}};
            if (with_certificates) c["certificate"] = certificate_json(net, core.flux);
            cores.push_back(c);
        }
        out["cores"] = cores;
        out["cores_truncated"] = truncated;
    }
    return dump(out);
}

std::string igms_json(const ReactionNetwork& net, IgmsEdgeRule rule) {
    IgmsGraph g = build_igms(net, rule);
    AmsdVerdict v = amsd_check(net, g);
    json nodes = json::array();
    for (const auto& n : g.nodes) nodes.push_back(names_of(net, n));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"reaction", e.reaction}});
    json arcs = json::array();
    for (const auto& [a, b] : g.arcs()) arcs.push_back({a, b});
    json cycles = json::array();
    for (const auto& c : elementary_cycles(g)) cycles.push_back(c);
    json amsd = {{"is_partition", v.is_partition}, {"is_acyclic", v.is_acyclic}};
    if (v.is_acyclic) amsd["topo_order"] = v.topo_order;
    if (v.is_partition && v.is_acyclic) amsd["species_order"] = names_of(net, v.species_order);
    json j = {{"schema_version", kSchemaVersion},
              {"rule", rule == IgmsEdgeRule::net_producing ? "net_producing" : "touching"},
              {"nodes", nodes},
              {"edges", edges},
              {"arcs", arcs},
              {"cycles", cycles},
              {"amsd", amsd}};
    return dump(j);
}

std::string ngm_json(const ReactionNetwork& net, const ParamMap& params,
                     const std::optional<std::vector<double>>& species_point, bool use_kd,
                     const Tolerances& tol) {
    VariableSplit split = default_split(net);
    std::vector<double> species_values;
    std::string point_source;
    if (species_point) {
        if (species_point->size() != net.species.size())
            analysis_fail("evaluation point has wrong length");
        species_values = *species_point;
        point_source = "given";
    } else {
        species_values = find_dfe(net, params, tol).values;
        point_source = "dfe";
    }
    std::vector<double> point = assemble_point(net, species_values, params);
    NgmResult res = ngm_at(net, split, point, tol, use_kd);
    json j = ngm_result_json(net, split, res, use_kd);
    j["schema_version"] = kSchemaVersion;
    j["point_source"] = point_source;
    Splitting s = algorithmic_FV(net, split);
    std::vector<std::string> x_names = pick_names(net, split.x_vars);
    j["F"] = mat_json(eval_poly_matrix(s.F, point), x_names, x_names);
    j["V"] = mat_json(eval_poly_matrix(s.V, point), x_names, x_names);
    return dump(j);
}

std::string boundary_json(const ReactionNetwork& net, const ParamMap& params,
                          const std::optional<std::vector<int>>& face, const Tolerances& tol) {
    std::vector<BoundaryEquilibrium> eqs;
    if (face)
        eqs = find_boundary_equilibria(net, params, *face, tol);
    else
        eqs = boundary_sweep(net, params, tol);
    json list = json::array();
    for (const auto& eq : eqs) list.push_back(equilibrium_json(net, eq));
    json j = {{"schema_version", kSchemaVersion}, {"equilibria", list}};
    if (face) j["face"] = names_of(net, *face);
    return dump(j);
}

std::string invade_json(const ReactionNetwork& net, const ParamMap& params,
                        const Tolerances& tol) {
    InvasionGraph g = build_invasion_graph(net, params, tol);
    json nodes = json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"siphon", names_of(net, n.siphon)},
                         {"equilibrium", equilibrium_json(net, n.equilibrium)}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(
            {{"node", e.node}, {"block", names_of(net, e.block)}, {"value", e.value}});
    json j = {{"schema_version", kSchemaVersion}, {"nodes", nodes}, {"edges", edges}};
    return dump(j);
}

std::string trajectory_json(const ReactionNetwork& net, const Trajectory& traj) {
    json states = json::array();
    for (const auto& row : traj.states) states.push_back(row);
    json j = {{"schema_version", kSchemaVersion},
              {"species", net.species},
              {"times", traj.times},
              {"states", states},
              {"steps", traj.steps},
              {"rejected", traj.rejected}};
    return dump(j);
}

std::string scan_json(const ScanResult& res) {
    json cells = json::array();
    for (const auto& row : res.cells) cells.push_back(row);
    json j = {{"schema_version", kSchemaVersion},
              {"axis1", {{"param", res.axis1.param}, {"lo", res.axis1.lo}, {"hi", res.axis1.hi},
                         {"n", res.axis1.n}}},
              {"axis2", {{"param", res.axis2.param}, {"lo", res.axis2.lo}, {"hi", res.axis2.hi},
                         {"n", res.axis2.n}}},
              {"grid1", res.grid1},
              {"grid2", res.grid2},
              {"cells", cells},
              {"legend", res.legend}};
    return dump(j);
}

std::string report_json(const ReactionNetwork& net, const ParamMap& params,
                        const Tolerances& tol) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["parameters"] = net.params;

    if (net.species.empty()) {
        j["rhs"] = json::object();
        j["variables"] = {{"x", json::array()}, {"y", json::array()}};
        j["minimal_siphons"] = json::array();
        j["igms"] = json::object();
        j["dfe"] = json::object();
        j["jacobian"] = json::object();
        j["ngm"] = json::object();
        j["reproduction_at_dfe"] = json::array();
        j["me_checklist"] = json::object();
        j["boundary"] = json::array();
        return dump(j);
    }

    std::vector<Polynomial> rhs = build_rhs(net);
    json rhs_json;
    for (std::size_t i = 0; i < net.species.size(); ++i)
        rhs_json[net.species[i]] = poly_string(net, rhs[i]);
    j["rhs"] = rhs_json;

    VariableSplit split = default_split(net);
    j["variables"] = {{"x", pick_names(net, split.x_vars)}, {"y", pick_names(net, split.y_vars)}};

    try {
        json msi = json::array();
        for (const auto& w : minimal_siphons(net)) msi.push_back(names_of(net, w));
        j["minimal_siphons"] = msi;
    } catch (const CrnError& e) {
        j["minimal_siphons"] = {{"error", e.what()}};
    }

    try {
        IgmsGraph g = build_igms(net);
        AmsdVerdict v = amsd_check(net, g);
        json nodes = json::array();
        for (const auto& n : g.nodes) nodes.push_back(names_of(net, n));
        json summary = {{"nodes", nodes},
                        {"n_arcs", g.arcs().size()},
                        {"n_cycles", elementary_cycles(g).size()},
                        {"is_partition", v.is_partition},
                        {"is_acyclic", v.is_acyclic}};
        if (v.is_partition && v.is_acyclic)
            summary["species_order"] = names_of(net, v.species_order);
        j["igms"] = summary;
    } catch (const CrnError& e) {
        j["igms"] = {{"error", e.what()}};
    }

    std::optional<BoundaryEquilibrium> dfe;
    try {
        dfe = find_dfe(net, params, tol);
        j["dfe"] = equilibrium_json(net, *dfe);
    } catch (const CrnError& e) {
        j["dfe"] = {{"error", e.what()}};
    }

    if (dfe) {
        std::vector<double> point = assemble_point(net, dfe->values, params);
        std::vector<std::string> x_names = pick_names(net, split.x_vars);
        std::vector<std::string> y_names = pick_names(net, split.y_vars);
        try {
            JacobianBlocks jb = jacobian_blocks(net, split);
            j["jacobian"] = {{"jx", mat_json(eval_poly_matrix(jb.jx, point), x_names, x_names)},
                             {"jy", mat_json(eval_poly_matrix(jb.jy, point), y_names, y_names)}};
        } catch (const CrnError& e) {
            j["jacobian"] = {{"error", e.what()}};
        }
        try {
            NgmResult res = ngm_at(net, split, point, tol);
            json ngm = ngm_result_json(net, split, res, false);
            ngm.erase("point");
            j["ngm"] = ngm;
            json repro = json::array();
            std::vector<double> y_values;
            for (int yi : split.y_vars) y_values.push_back(dfe->values[static_cast<std::size_t>(yi)]);
            for (const auto& b : res.blocks) {
                std::vector<int> block_species;
                for (int pos : b) block_species.push_back(split.x_vars[static_cast<std::size_t>(pos)]);
                double val = reproduction_eval(net, split, block_species, y_values, params, tol);
                repro.push_back({{"block", names_of(net, block_species)}, {"value", val}});
            }
            j["reproduction_at_dfe"] = repro;
        } catch (const CrnError& e) {
            j["ngm"] = {{"error", e.what()}};
            j["reproduction_at_dfe"] = {{"error", e.what()}};
        }
    } else {
        json unavailable = {{"error", "disease-free equilibrium unavailable"}};
        j["jacobian"] = unavailable;
        j["ngm"] = unavailable;
        j["reproduction_at_dfe"] = unavailable;
    }

    try {
        MeModelReport me = me_model_check(net, params, tol);
        j["me_checklist"] = {{"total_siphon_nonempty", me.total_siphon_nonempty},
                             {"dfe_exists", me.dfe_exists},
                             {"jy_hurwitz", me.jy_hurwitz},
                             {"jx_metzler", me.jx_metzler},
                             {"splitting_regular", me.splitting_regular},
                             {"no_hidden_inflow", me.no_hidden_inflow},
                             {"all_ok", me.all_ok()},
                             {"notes", me.notes}};
    } catch (const CrnError& e) {
        j["me_checklist"] = {{"error", e.what()}};
    }

    try {
        json list = json::array();
        for (const auto& eq : boundary_sweep(net, params, tol))
            list.push_back(equilibrium_json(net, eq));
        j["boundary"] = list;
    } catch (const CrnError& e) {
        j["boundary"] = {{"error", e.what()}};
    }

    return dump(j);
}

}  // namespace crnkit
