#include "crnkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "boundary.hpp"
#include "dynamics.hpp"
#include "fixtures.hpp"
#include "igms.hpp"
#include "json.hpp"
#include "network.hpp"
#include "ngm.hpp"
#include "report.hpp"
#include "seed.hpp"
#include "tolerances.hpp"

using namespace crnkit;
using nlohmann::json;

struct crn_network {
    ReactionNetwork net;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** errmsg, const std::string& msg) {
    if (errmsg) *errmsg = dup_string(msg);
}

// Runs fn, routing its string result and any exception into the C contract.
template <typename Fn>
crn_status guarded(char** out, char** errmsg, Fn&& fn) {
    try {
        std::string s = fn();
        if (out) *out = dup_string(s);
        return CRN_OK;
    } catch (const CrnError& e) {
        set_err(errmsg, e.what());
        return e.kind == CrnError::Kind::parse ? CRN_ERR_PARSE : CRN_ERR_ANALYSIS;
    } catch (const json::exception& e) {
        set_err(errmsg, std::string("malformed JSON input: ") + e.what());
        return CRN_ERR_INVALID;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return CRN_ERR_INVALID;
    }
}

crn_status require(const void* p, const char* what, char** errmsg) {
    if (p) return CRN_OK;
    set_err(errmsg, std::string("null ") + what);
    return CRN_ERR_INVALID;
}

ParamMap parse_params(const char* params_json) {
    if (!params_json) analysis_fail("parameter assignment required");
    json j = json::parse(params_json);
    if (!j.is_object()) parse_fail("parameters must be a JSON object of name: value");
    ParamMap out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number()) parse_fail("parameter '" + k + "' must be a number");
        out[k] = v.get<double>();
    }
    return out;
}

std::vector<double> parse_species_values(const ReactionNetwork& net, const char* text,
                                         const char* what) {
    if (!text) parse_fail(std::string(what) + " required");
    json j = json::parse(text);
    std::vector<double> out(net.species.size(), 0.0);
    if (j.is_array()) {
        if (j.size() != net.species.size())
            parse_fail(std::string(what) + " must list one value per species");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = j[i].get<double>();
        return out;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            int idx = net.species_index(k);
            if (idx < 0) parse_fail("unknown species '" + k + "' in " + what);
            out[static_cast<std::size_t>(idx)] = v.get<double>();
        }
        return out;
    }
    parse_fail(std::string(what) + " must be a JSON array or object");
}

Tolerances parse_tol(const char* tol_json) {
    Tolerances tol;
    if (!tol_json) return tol;
    json j = json::parse(tol_json);
    if (!j.is_object()) parse_fail("tolerances must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        double d = v.get<double>();
        if (k == "entry") tol.entry = d;
        else if (k == "eigen_rel") tol.eigen_rel = d;
        else if (k == "newton_residual") tol.newton_residual = d;
        else if (k == "residual_verify") tol.residual_verify = d;
        else if (k == "dedup") tol.dedup = d;
        else if (k == "marginal") tol.marginal = d;
        else if (k == "boundary_band") tol.boundary_band = d;
        else if (k == "rtol") tol.rtol = d;
        else if (k == "atol") tol.atol = d;
        else parse_fail("unknown tolerance '" + k + "'");
    }
    return tol;
}

IgmsEdgeRule parse_rule(const char* rule) {
    std::string r = rule ? rule : "net";
    if (r == "net" || r == "net_producing") return IgmsEdgeRule::net_producing;
    if (r == "touch" || r == "touching") return IgmsEdgeRule::touching;
    parse_fail("unknown edge rule '" + r + "' (expected net or touch)");
}

std::vector<int> parse_face_csv(const ReactionNetwork& net, const char* face_csv) {
    std::vector<int> face;
    std::stringstream ss(face_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = item.find_last_not_of(" \t");
        std::string name = item.substr(a, b - a + 1);
        int idx = net.species_index(name);
        if (idx < 0) parse_fail("unknown species '" + name + "' in face");
        face.push_back(idx);
    }
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

ScanAxis parse_axis(const char* spec) {
    if (!spec) parse_fail("axis spec required");
    std::string s(spec);
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) parse_fail("axis spec must be name:lo:hi:n, got '" + s + "'");
    ScanAxis axis;
    axis.param = parts[0];
    try {
        axis.lo = std::stod(parts[1]);
        axis.hi = std::stod(parts[2]);
        axis.n = std::stoi(parts[3]);
    } catch (const std::exception&) {
        parse_fail("malformed axis spec '" + s + "'");
    }
    return axis;
}

}  // namespace

extern "C" {

const char* crn_version(void) { return "1.0.0"; }

void crn_string_free(char* s) { std::free(s); }

void crn_set_seed(long seed) { set_sample_seed(seed); }

crn_status crn_parse(const char* text, crn_network** out, char** errmsg) {
    if (crn_status st = require(text, "model text", errmsg)) return st;
    if (crn_status st = require(out, "output handle", errmsg)) return st;
    try {
        auto* handle = new crn_network{parse_network(text)};
        *out = handle;
        return CRN_OK;
    } catch (const CrnError& e) {
        set_err(errmsg, e.what());
        return e.kind == CrnError::Kind::parse ? CRN_ERR_PARSE : CRN_ERR_ANALYSIS;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return CRN_ERR_INVALID;
    }
}

crn_status crn_parse_file(const char* path, crn_network** out, char** errmsg) {
    if (crn_status st = require(path, "path", errmsg)) return st;
    std::ifstream in(path);
    if (!in) {
        set_err(errmsg, std::string("cannot read file: ") + path);
        return CRN_ERR_PARSE;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return crn_parse(buf.str().c_str(), out, errmsg);
}

void crn_network_free(crn_network* net) { delete net; }

crn_status crn_network_serialize(const crn_network* net, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] { return serialize_network(net->net); });
}

crn_status crn_fixture(const char* name, char** out_text, char** errmsg) {
    if (crn_status st = require(name, "fixture name", errmsg)) return st;
    const std::string* text = fixture_text(name);
    if (!text) {
        set_err(errmsg, std::string("unknown fixture: ") + name);
        return CRN_ERR_PARSE;
    }
    if (out_text) *out_text = dup_string(*text);
    return CRN_OK;
}

crn_status crn_fixture_list_json(char** out, char** errmsg) {
    return guarded(out, errmsg, [&] {
        json j = {{"schema_version", 1}, {"fixtures", fixture_names()}};
        return j.dump(2) + "\n";
    });
}

crn_status crn_network_json(const crn_network* net, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] { return network_json(net->net); });
}

crn_status crn_siphons_json(const crn_network* net, int with_certificates, int max_core_size,
                            char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        return siphons_json(net->net, with_certificates != 0, max_core_size);
    });
}

crn_status crn_igms_json(const crn_network* net, const char* rule, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] { return igms_json(net->net, parse_rule(rule)); });
}

crn_status crn_igms_dot(const crn_network* net, const char* rule, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        return igms_dot(net->net, build_igms(net->net, parse_rule(rule)));
    });
}

crn_status crn_ngm_json(const crn_network* net, const char* params_json, const char* point_json,
                        int use_kd, const char* tol_json, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        std::optional<std::vector<double>> point;
        if (point_json)
            point = parse_species_values(net->net, point_json, "evaluation point");
        return ngm_json(net->net, parse_params(params_json), point, use_kd != 0,
                        parse_tol(tol_json));
    });
}

crn_status crn_boundary_json(const crn_network* net, const char* params_json,
                             const char* face_csv, const char* tol_json, char** out,
                             char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        std::optional<std::vector<int>> face;
        if (face_csv) face = parse_face_csv(net->net, face_csv);
        return boundary_json(net->net, parse_params(params_json), face, parse_tol(tol_json));
    });
}

crn_status crn_invade_json(const crn_network* net, const char* params_json,
                           const char* tol_json, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        return invade_json(net->net, parse_params(params_json), parse_tol(tol_json));
    });
}

crn_status crn_invade_dot(const crn_network* net, const char* params_json,
                          const char* tol_json, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        InvasionGraph g =
            build_invasion_graph(net->net, parse_params(params_json), parse_tol(tol_json));
        return invasion_dot(net->net, g);
    });
}

crn_status crn_simulate(const crn_network* net, const char* params_json, const char* x0_json,
                        double t_end, double rtol, double atol, int n_out, int as_json,
                        char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        SimulateOptions opts;
        if (rtol > 0) opts.rtol = rtol;
        if (atol > 0) opts.atol = atol;
        if (n_out > 0) opts.n_out = n_out;
        std::vector<double> x0 = parse_species_values(net->net, x0_json, "initial state");
        Trajectory traj = simulate(net->net, parse_params(params_json), x0, t_end, opts);
        return as_json ? trajectory_json(net->net, traj) : trajectory_csv(net->net, traj);
    });
}

crn_status crn_scan(const crn_network* net, const char* params_json, const char* axis1,
                    const char* axis2, const char* classifier, const char* tol_json,
                    int as_json, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        std::string c = classifier ? classifier : "generic";
        ScanClassifier sc;
        if (c == "lcp") sc = ScanClassifier::lcp;
        else if (c == "generic") sc = ScanClassifier::generic;
        else parse_fail("unknown classifier '" + c + "' (expected lcp or generic)");
        ScanResult res = scan(net->net, parse_params(params_json), parse_axis(axis1),
                              parse_axis(axis2), sc, parse_tol(tol_json));
        return as_json ? scan_json(res) : scan_csv(res);
    });
}

crn_status crn_report_json(const crn_network* net, const char* params_json,
                           const char* tol_json, char** out, char** errmsg) {
    if (crn_status st = require(net, "network", errmsg)) return st;
    return guarded(out, errmsg, [&] {
        ParamMap params = params_json ? parse_params(params_json) : ParamMap{};
        return report_json(net->net, params, parse_tol(tol_json));
    });
}

}  // extern "C"
