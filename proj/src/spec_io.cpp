#include "charode/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace charode::io {

using nlohmann::json;

namespace {

void fail(const std::string& msg) { throw ValidationError(msg); }

const json& need(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(std::string("missing required key '") + key + "' in " + where);
    return *it;
}

void reject_unknown(const json& obj, const char* where, std::initializer_list<const char*> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || (it.key() == k);
        if (!known) fail(std::string("unknown key '") + it.key() + "' in " + where);
    }
}

Expr expr_field(const json& obj, const char* key, const char* where) {
    const json& v = need(obj, key, where);
    if (!v.is_string()) fail(std::string("key '") + key + "' must be an expression string");
    try {
        return parse_expr(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(std::string("field '") + key + "': " + e.what());
    }
    return {};
}

Expr opt_expr_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_string()) fail(std::string("key '") + key + "' must be an expression string");
    return parse_expr(it->get<std::string>());
}

double num_field(const json& obj, const char* key, const char* where) {
    const json& v = need(obj, key, where);
    if (!v.is_number()) fail(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

ProblemSpec load_spec(const json& doc) {
    if (!doc.is_object()) fail("spec document must be a JSON object");
    reject_unknown(doc, "spec", {"family", "coefficients", "data", "domain", "grid", "solver"});

    const json& fam_j = need(doc, "family", "spec");
    if (!fam_j.is_string()) fail("key 'family' must be a string");
    auto fam = family_from_name(fam_j.get<std::string>());
    if (!fam) fail("unknown value for field 'family': '" + fam_j.get<std::string>() + "'");

    ProblemSpec spec;
    spec.family = *fam;

    const json& co = need(doc, "coefficients", "spec");
    const json& da = need(doc, "data", "spec");

    switch (spec.family) {
        case Family::Linear: {
            reject_unknown(co, "coefficients", {"a", "alpha", "b_xt"});
            reject_unknown(da, "data", {"phi"});
            LinearCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.alpha = expr_field(co, "alpha", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.phi = expr_field(da, "phi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::Separable: {
            reject_unknown(co, "coefficients", {"a", "f", "b_xt"});
            reject_unknown(da, "data", {"phi"});
            SeparableCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.f = expr_field(co, "f", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.phi = expr_field(da, "phi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::Bernoulli: {
            reject_unknown(co, "coefficients", {"a", "b_xt", "alpha", "n"});
            reject_unknown(da, "data", {"phi"});
            BernoulliCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.alpha = expr_field(co, "alpha", "coefficients");
            c.n = num_field(co, "n", "coefficients");
            c.phi = expr_field(da, "phi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::Riccati: {
            reject_unknown(co, "coefficients", {"a", "b_xt", "alpha", "beta", "u1"});
            reject_unknown(da, "data", {"phi"});
            RiccatiCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.alpha = expr_field(co, "alpha", "coefficients");
            c.beta = expr_field(co, "beta", "coefficients");
            c.u1 = expr_field(co, "u1", "coefficients");
            c.phi = expr_field(da, "phi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::MixedTT: {
            reject_unknown(co, "coefficients", {"a", "b_xt", "f", "H0"});
            reject_unknown(da, "data", {"phi", "psi"});
            MixedTTCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.f = expr_field(co, "f", "coefficients");
            c.h0 = opt_expr_field(co, "H0");
            c.phi = expr_field(da, "phi", "data");
            c.psi = expr_field(da, "psi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::MixedXT: {
            reject_unknown(co, "coefficients", {"a", "b_xt", "f", "H0"});
            reject_unknown(da, "data", {"g", "h"});
            MixedXTCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.b_xt = expr_field(co, "b_xt", "coefficients");
            c.f = expr_field(co, "f", "coefficients");
            c.h0 = opt_expr_field(co, "H0");
            c.g = expr_field(da, "g", "data");
            c.h = expr_field(da, "h", "data");
            spec.coeffs = c;
            break;
        }
        case Family::FType: {
            reject_unknown(co, "coefficients", {"a", "B_xt", "A_u", "f", "f_domain", "H0"});
            reject_unknown(da, "data", {"phi", "psi"});
            FTypeCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.big_b_xt = expr_field(co, "B_xt", "coefficients");
            c.a_u = expr_field(co, "A_u", "coefficients");
            c.f = expr_field(co, "f", "coefficients");
            c.h0 = opt_expr_field(co, "H0");
            const json& fd = need(co, "f_domain", "coefficients");
            if (!fd.is_array() || fd.size() != 2 || !fd[0].is_number() || !fd[1].is_number())
                fail("key 'f_domain' must be a 2-element numeric array [p_lo, p_hi]");
            c.f_lo = fd[0].get<double>();
            c.f_hi = fd[1].get<double>();
            c.phi = expr_field(da, "phi", "data");
            c.psi = expr_field(da, "psi", "data");
            spec.coeffs = c;
            break;
        }
        case Family::GeneralBU: {
            reject_unknown(co, "coefficients", {"a", "alpha_xt", "G", "bigB", "H0"});
            reject_unknown(da, "data", {"phi", "psi"});
            GeneralBUCoeffs c;
            c.a = expr_field(co, "a", "coefficients");
            c.alpha_xt = expr_field(co, "alpha_xt", "coefficients");
            c.g_u = expr_field(co, "G", "coefficients");
            c.big_b_u = expr_field(co, "bigB", "coefficients");
            c.h0 = opt_expr_field(co, "H0");
            c.phi = expr_field(da, "phi", "data");
            c.psi = expr_field(da, "psi", "data");
            spec.coeffs = c;
            break;
        }
    }

    const json& dom = need(doc, "domain", "spec");
    reject_unknown(dom, "domain", {"x_min", "x_max", "t_max"});
    spec.domain.x_min = num_field(dom, "x_min", "domain");
    spec.domain.x_max = num_field(dom, "x_max", "domain");
    spec.domain.t_max = num_field(dom, "t_max", "domain");

    const json& gr = need(doc, "grid", "spec");
    reject_unknown(gr, "grid", {"nx", "nt"});
    spec.grid.nx = static_cast<int>(num_field(gr, "nx", "grid"));
    spec.grid.nt = static_cast<int>(num_field(gr, "nt", "grid"));

    if (auto it = doc.find("solver"); it != doc.end()) {
        const json& so = *it;
        reject_unknown(so, "solver",
                       {"tol", "blow_up_cap", "consistency_tol", "u_ref",
                        "max_failure_fraction", "bounds_margin_factor"});
        if (so.contains("tol")) spec.solver.tol = so["tol"].get<double>();
        if (so.contains("blow_up_cap")) spec.solver.blow_up_cap = so["blow_up_cap"].get<double>();
        if (so.contains("consistency_tol"))
            spec.solver.consistency_tol = so["consistency_tol"].get<double>();
        if (so.contains("u_ref")) spec.solver.u_ref = so["u_ref"].get<double>();
        if (so.contains("max_failure_fraction"))
            spec.solver.max_failure_fraction = so["max_failure_fraction"].get<double>();
        if (so.contains("bounds_margin_factor"))
            spec.solver.bounds_margin_factor = so["bounds_margin_factor"].get<double>();
    }

    validate(spec);
    return spec;
}

ProblemSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open spec file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    return load_spec(doc);
}

void write_csv(const SolutionGrid& grid, std::ostream& out) {
    out << "x,t,u,status\n";
    char buf[128];
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        for (std::size_t j = 0; j < grid.ts.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%s\n", grid.xs[i], grid.ts[j],
                          grid.at(i, j), node_status_name(grid.status_at(i, j)));
            out << buf;
        }
    }
}

std::string csv_string(const SolutionGrid& grid) {
    std::ostringstream ss;
    write_csv(grid, ss);
    return ss.str();
}

json make_report(const ProblemSpec& spec, const SolutionGrid& grid,
                 const ReducedODE* reduction, const verify::ResidualReport* residual) {
    json rep;
    rep["family"] = family_name(spec.family);
    rep["grid"] = {{"nx", spec.grid.nx}, {"nt", spec.grid.nt}};
    rep["domain"] = {{"x_min", spec.domain.x_min},
                     {"x_max", spec.domain.x_max},
                     {"t_max", spec.domain.t_max}};
    rep["solver"] = {{"tol", spec.solver.tol},
                     {"blow_up_cap", spec.solver.blow_up_cap},
                     {"consistency_tol", spec.solver.consistency_tol},
                     {"u_ref", spec.solver.u_ref}};
    rep["nodes"] = {{"ok", grid.count(NodeStatus::Ok)},
                    {"blow_up", grid.count(NodeStatus::BlowUp)},
                    {"trace_failed", grid.count(NodeStatus::TraceFailed)}};
    // deterministic effort counters; wall time stays out of the artifact
    rep["timing"] = {{"total_steps", grid.total_steps}};

    if (reduction) {
        json red;
        red["C"] = reduction->c;
        red["delta_C"] = reduction->delta_c;
        red["consistent"] = reduction->consistent;
        red["threshold"] = reduction->consistency_threshold;
        red["direction"] = reduction->direction == ReduceDirection::InT ? "t" : "x";
        json ks = json::array();
        const double u_lo = -2.0, u_hi = 2.0;
        for (int i = 0; i <= 8; ++i) {
            const double u = u_lo + (u_hi - u_lo) * i / 8.0;
            try {
                ks.push_back({u, reduction->k_of_u(u)});
            } catch (const std::runtime_error&) {
                // K may be undefined off its domain (e.g. log-type bigB)
            }
        }
        red["K_samples"] = ks;
        json hs = json::array();
        for (int i = 0; i <= 4; ++i) {
            const double x =
                spec.domain.x_min + (spec.domain.x_max - spec.domain.x_min) * i / 4.0;
            for (int j = 0; j <= 2; ++j) {
                const double t = spec.domain.t_max * j / 2.0;
                try {
                    hs.push_back({x, t, reduction->h_hat(x, t)});
                } catch (const std::runtime_error&) {
                }
            }
        }
        red["H_samples"] = hs;
        rep["reduction"] = red;
    }
    if (residual) {
        rep["residual"] = {{"max", residual->max_abs},
                           {"mean", residual->mean_abs},
                           {"n_interior", residual->n_interior},
                           {"worst", {residual->worst_x, residual->worst_t}},
                           {"h_x", residual->h_x},
                           {"h_t", residual->h_t}};
    }
    return rep;
}

}  // namespace charode::io
