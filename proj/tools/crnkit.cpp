#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "crnkit.h"

namespace {

struct OwnedStr {
    char* p = nullptr;
    ~OwnedStr() { crn_string_free(p); }
};

struct OwnedNet {
    crn_network* p = nullptr;
    ~OwnedNet() { crn_network_free(p); }
};

int exit_code(crn_status st) {
    switch (st) {
        case CRN_OK: return 0;
        case CRN_ERR_ANALYSIS: return 1;
        default: return 2;
    }
}

int fail(crn_status st, const char* errmsg) {
    std::fprintf(stderr, "error: %s\n", errmsg ? errmsg : "unknown failure");
    return exit_code(st);
}

int emit(const std::string& out_file, const char* text) {
    if (out_file.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::ofstream out(out_file);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", out_file.c_str());
        return 2;
    }
    out << text;
    return 0;
}

// Model argument: an existing file wins, then an embedded fixture name.
int load_model(const std::string& model, OwnedNet& net) {
    std::ifstream probe(model);
    OwnedStr err;
    if (probe.good()) {
        crn_status st = crn_parse_file(model.c_str(), &net.p, &err.p);
        return st == CRN_OK ? 0 : fail(st, err.p);
    }
    OwnedStr text, ferr;
    if (crn_fixture(model.c_str(), &text.p, &ferr.p) == CRN_OK) {
        crn_status st = crn_parse(text.p, &net.p, &err.p);
        return st == CRN_OK ? 0 : fail(st, err.p);
    }
    std::fprintf(stderr, "error: no model file or embedded fixture named '%s'\n",
                 model.c_str());
    return 2;
}

// --params/--x0/--at accept a filename or inline JSON (starts with { or [).
bool load_json_arg(const std::string& arg, std::string& out) {
    if (arg.empty()) return true;
    if (arg[0] == '{' || arg[0] == '[') {
        out = arg;
        return true;
    }
    std::ifstream in(arg);
    if (!in) {
        std::fprintf(stderr, "error: cannot read %s\n", arg.c_str());
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct TolFlags {
    std::map<std::string, double> values;

    void add_options(CLI::App* app) {
        static const char* names[] = {"entry",      "eigen-rel",       "newton-residual",
                                      "residual-verify", "dedup",      "marginal",
                                      "boundary-band",   "rtol",       "atol"};
        for (const char* n : names) {
            std::string key(n);
            std::string flag = "--tol-" + key;
            std::string stored = key;
            for (auto& c : stored)
                if (c == '-') c = '_';
            app->add_option_function<double>(
                   flag, [this, stored](double v) { values[stored] = v; },
                   "Override the " + stored + " tolerance")
                ->expected(1);
        }
    }

    // NULL when no override was given, so library defaults stay in force.
    std::optional<std::string> json() const {
        if (values.empty()) return std::nullopt;
        std::string out = "{";
        bool first = true;
        for (const auto& [k, v] : values) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            if (!first) out += ",";
            out += "\"" + k + "\":" + buf;
            first = false;
        }
        return out + "}";
    }
};

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural and dynamical analysis of polynomial reaction networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", [] { return std::string(crn_version()); });

    bool json_out = false;
    long seed = 0;
    bool seed_given = false;
    TolFlags tol;
    app.add_flag("--json", json_out, "Emit JSON where a terser default exists");
    app.add_option("--seed", seed, "Shift deterministic sampling sequences")
        ->each([&](const std::string&) { seed_given = true; });
    tol.add_options(&app);

    std::string model, params_arg, at_arg, x0_arg, face_arg, out_file, dot_file;
    std::string rule = "net", classifier, axis1, axis2, fixture_name;
    bool certificates = false, matrices = false, use_kd = false;
    int cores = 0, n_out = 0;
    double t_end = 0, rtol = 0, atol = 0;

    auto add_model = [&](CLI::App* sub) {
        sub->add_option("model", model, "Model file or embedded fixture name")->required();
    };

    CLI::App* parse = app.add_subcommand("parse", "Parse a model; emit text or JSON");
    add_model(parse);
    parse->add_flag("--matrices", matrices, "Include labeled stoichiometric matrices (JSON)");

    CLI::App* siphons = app.add_subcommand("siphons", "Minimal siphons and their verdicts");
    add_model(siphons);
    siphons->add_flag("--certificates", certificates, "Attach exact certificates");
    siphons->add_option("--cores", cores, "Search autocatalytic cores up to this size");

    CLI::App* igms = app.add_subcommand("igms", "Interaction graph of minimal siphons");
    add_model(igms);
    igms->add_option("--rule", rule, "Edge rule: net or touch")
        ->check(CLI::IsMember({"net", "touch"}));
    igms->add_option("--dot", dot_file, "Write the graph in DOT format to this file");

    CLI::App* ngm = app.add_subcommand("ngm", "Next-generation matrix and R0");
    add_model(ngm);
    ngm->add_option("--params", params_arg, "Parameter JSON (file or inline)")->required();
    ngm->add_option("--at", at_arg, "Species evaluation point (file or inline JSON)");
    ngm->add_flag("--kd", use_kd, "Use V^-1 F instead of F V^-1");

    CLI::App* boundary = app.add_subcommand("boundary", "Boundary equilibria");
    add_model(boundary);
    boundary->add_option("--params", params_arg, "Parameter JSON (file or inline)")->required();
    boundary->add_option("--face", face_arg, "Comma-separated species held at zero");

    CLI::App* invade = app.add_subcommand("invade", "Invasion numbers and graph");
    add_model(invade);
    invade->add_option("--params", params_arg, "Parameter JSON (file or inline)")->required();
    invade->add_option("--dot", dot_file, "Write the invasion graph in DOT format to this file");

    CLI::App* simulate = app.add_subcommand("simulate", "Integrate the mass-action dynamics");
    add_model(simulate);
    simulate->add_option("--params", params_arg, "Parameter JSON (file or inline)")->required();
    simulate->add_option("--x0", x0_arg, "Initial state (file or inline JSON)")->required();
    simulate->add_option("--t", t_end, "Time horizon")->required();
    simulate->add_option("--rtol", rtol, "Relative step tolerance");
    simulate->add_option("--atol", atol, "Absolute step tolerance");
    simulate->add_option("--n-out", n_out, "Number of output intervals");
    simulate->add_option("--out", out_file, "Write CSV (or JSON with --json) here");

    CLI::App* scan = app.add_subcommand("scan", "Classify a 2-D parameter grid");
    add_model(scan);
    scan->add_option("--params", params_arg, "Parameter JSON (file or inline)")->required();
    scan->add_option("--axis1", axis1, "First axis as name:lo:hi:n")->required();
    scan->add_option("--axis2", axis2, "Second axis as name:lo:hi:n")->required();
    scan->add_option("--classifier", classifier, "lcp or generic")
        ->check(CLI::IsMember({"lcp", "generic"}));
    scan->add_option("--out", out_file, "Write CSV (or JSON with --json) here");

    CLI::App* report = app.add_subcommand("report", "Full analysis bundle as one JSON document");
    add_model(report);
    report->add_option("--params", params_arg, "Parameter JSON (file or inline)");

    CLI::App* fixtures = app.add_subcommand("fixtures", "List or print embedded models");
    fixtures->add_option("name", fixture_name, "Print this fixture's model text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (seed_given) crn_set_seed(seed);

    std::string params_json, at_json, x0_json;
    if (!load_json_arg(params_arg, params_json)) return 2;
    if (!load_json_arg(at_arg, at_json)) return 2;
    if (!load_json_arg(x0_arg, x0_json)) return 2;
    std::optional<std::string> tol_json = tol.json();

    if (fixtures->parsed()) {
        OwnedStr out, err;
        if (fixture_name.empty()) {
            crn_status st = crn_fixture_list_json(&out.p, &err.p);
            return st == CRN_OK ? emit("", out.p) : fail(st, err.p);
        }
        crn_status st = crn_fixture(fixture_name.c_str(), &out.p, &err.p);
        return st == CRN_OK ? emit("", out.p) : fail(st, err.p);
    }

    OwnedNet net;
    if (int rc = load_model(model, net)) return rc;

    OwnedStr out, err;
    crn_status st = CRN_OK;
    if (parse->parsed()) {
        st = (json_out || matrices) ? crn_network_json(net.p, &out.p, &err.p)
                                    : crn_network_serialize(net.p, &out.p, &err.p);
    } else if (siphons->parsed()) {
        st = crn_siphons_json(net.p, certificates ? 1 : 0, cores, &out.p, &err.p);
    } else if (igms->parsed()) {
        if (!dot_file.empty()) {
            OwnedStr dot, derr;
            crn_status ds = crn_igms_dot(net.p, rule.c_str(), &dot.p, &derr.p);
            if (ds != CRN_OK) return fail(ds, derr.p);
            if (int rc = emit(dot_file, dot.p)) return rc;
        }
        st = crn_igms_json(net.p, rule.c_str(), &out.p, &err.p);
    } else if (ngm->parsed()) {
        st = crn_ngm_json(net.p, params_json.c_str(), at_arg.empty() ? nullptr : at_json.c_str(),
                          use_kd ? 1 : 0, opt(tol_json), &out.p, &err.p);
    } else if (boundary->parsed()) {
        st = crn_boundary_json(net.p, params_json.c_str(),
                               face_arg.empty() ? nullptr : face_arg.c_str(), opt(tol_json),
                               &out.p, &err.p);
    } else if (invade->parsed()) {
        if (!dot_file.empty()) {
            OwnedStr dot, derr;
            crn_status ds = crn_invade_dot(net.p, params_json.c_str(), opt(tol_json), &dot.p,
                                           &derr.p);
            if (ds != CRN_OK) return fail(ds, derr.p);
            if (int rc = emit(dot_file, dot.p)) return rc;
        }
        st = crn_invade_json(net.p, params_json.c_str(), opt(tol_json), &out.p, &err.p);
    } else if (simulate->parsed()) {
        st = crn_simulate(net.p, params_json.c_str(), x0_json.c_str(), t_end, rtol, atol, n_out,
                          json_out ? 1 : 0, &out.p, &err.p);
        if (st == CRN_OK) return emit(out_file, out.p);
    } else if (scan->parsed()) {
        st = crn_scan(net.p, params_json.c_str(), axis1.c_str(), axis2.c_str(),
                      classifier.empty() ? nullptr : classifier.c_str(), opt(tol_json),
                      json_out ? 1 : 0, &out.p, &err.p);
        if (st == CRN_OK) return emit(out_file, out.p);
    } else if (report->parsed()) {
        st = crn_report_json(net.p, params_arg.empty() ? nullptr : params_json.c_str(),
                             opt(tol_json), &out.p, &err.p);
    }
    if (st != CRN_OK) return fail(st, err.p);
    return emit("", out.p);
}
