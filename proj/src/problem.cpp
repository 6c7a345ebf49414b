#include "charode/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace charode {

const char* family_name(Family f) {
    switch (f) {
        case Family::Linear: return "linear";
        case Family::Separable: return "separable";
        case Family::Bernoulli: return "bernoulli";
        case Family::Riccati: return "riccati";
        case Family::MixedTT: return "mixed_tt";
        case Family::MixedXT: return "mixed_xt";
        case Family::FType: return "ftype";
        case Family::GeneralBU: return "general_bu";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Linear, Family::Separable, Family::Bernoulli, Family::Riccati,
                     Family::MixedTT, Family::MixedXT, Family::FType, Family::GeneralBU})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

bool is_second_order(Family f) {
    return f == Family::MixedTT || f == Family::MixedXT || f == Family::FType ||
           f == Family::GeneralBU;
}

const char* node_status_name(NodeStatus s) {
    switch (s) {
        case NodeStatus::Ok: return "ok";
        case NodeStatus::BlowUp: return "blow_up";
        case NodeStatus::TraceFailed: return "trace_failed";
    }
    return "?";
}

long SolutionGrid::count(NodeStatus s) const {
    return std::count(status.begin(), status.end(), s);
}

std::vector<double> grid_x(const ProblemSpec& spec) {
    std::vector<double> xs(spec.grid.nx);
    const double dx = (spec.domain.x_max - spec.domain.x_min) / (spec.grid.nx - 1);
    for (int i = 0; i < spec.grid.nx; ++i) xs[i] = spec.domain.x_min + dx * i;
    xs.back() = spec.domain.x_max;
    return xs;
}

std::vector<double> grid_t(const ProblemSpec& spec) {
    std::vector<double> ts(spec.grid.nt);
    const double dt = spec.domain.t_max / (spec.grid.nt - 1);
    for (int j = 0; j < spec.grid.nt; ++j) ts[j] = dt * j;
    ts.back() = spec.domain.t_max;
    return ts;
}

SolutionGrid make_grid(const ProblemSpec& spec) {
    SolutionGrid g;
    g.xs = grid_x(spec);
    g.ts = grid_t(spec);
    g.u.assign(g.xs.size() * g.ts.size(), std::numeric_limits<double>::quiet_NaN());
    g.status.assign(g.u.size(), NodeStatus::TraceFailed);
    return g;
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

void check_vars(const Expr& e, const char* field, std::initializer_list<Var> allowed) {
    require(!e.empty(), std::string("missing expression for field '") + field + "'");
    for (Var v : e.free_vars()) {
        bool ok = false;
        for (Var w : allowed) ok = ok || (v == w);
        require(ok, std::string("field '") + field + "' must not reference variable '" +
                        var_name(v) + "'");
    }
}

void check_xt(const Expr& e, const char* field) { check_vars(e, field, {Var::X, Var::T}); }
void check_x(const Expr& e, const char* field) { check_vars(e, field, {Var::X}); }
void check_t(const Expr& e, const char* field) { check_vars(e, field, {Var::T}); }
void check_u(const Expr& e, const char* field) { check_vars(e, field, {Var::U}); }

// the H0 anchor is optional; empty means zero
void check_x_opt(const Expr& e, const char* field) {
    if (!e.empty()) check_vars(e, field, {Var::X});
}

void check_monotone(const Expr& f, double lo, double hi) {
    require(lo < hi, "f_domain must satisfy p_lo < p_hi");
    const int n = 64;
    double prev = 0.0;
    int sign = 0;
    for (int i = 0; i < n; ++i) {
        const double p = lo + (hi - lo) * i / (n - 1);
        const double v = f.eval(Env::u(p));
        if (i > 0) {
            const double d = v - prev;
            require(d != 0.0, "f is not strictly monotone on f_domain (flat segment)");
            const int s = d > 0.0 ? 1 : -1;
            if (sign == 0) sign = s;
            require(s == sign, "f is not strictly monotone on f_domain");
        }
        prev = v;
    }
}

}  // namespace

void validate(const ProblemSpec& spec) {
    require(spec.grid.nx >= 2 && spec.grid.nt >= 2, "grid sizes must be at least 2");
    require(spec.domain.t_max > 0.0, "t_max must be positive");
    require(spec.domain.x_max > spec.domain.x_min, "x_max must exceed x_min");
    require(spec.solver.tol > 0.0, "tol must be positive");
    require(spec.solver.blow_up_cap > 0.0, "blow_up_cap must be positive");

    switch (spec.family) {
        case Family::Linear: {
            const auto& c = std::get<LinearCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.alpha, "alpha");
            check_xt(c.b_xt, "b_xt");
            check_x(c.phi, "phi");
            break;
        }
        case Family::Separable: {
            const auto& c = std::get<SeparableCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_u(c.f, "f");
            check_xt(c.b_xt, "b_xt");
            check_x(c.phi, "phi");
            break;
        }
        case Family::Bernoulli: {
            const auto& c = std::get<BernoulliCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.b_xt, "b_xt");
            check_xt(c.alpha, "alpha");
            check_x(c.phi, "phi");
            require(c.n != 1.0, "bernoulli exponent n must not equal 1");
            break;
        }
        case Family::Riccati: {
            const auto& c = std::get<RiccatiCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.b_xt, "b_xt");
            check_xt(c.alpha, "alpha");
            check_xt(c.beta, "beta");
            check_xt(c.u1, "u1");
            check_x(c.phi, "phi");
            break;
        }
        case Family::MixedTT: {
            const auto& c = std::get<MixedTTCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.b_xt, "b_xt");
            check_u(c.f, "f");
            check_x(c.phi, "phi");
            check_x(c.psi, "psi");
            check_x_opt(c.h0, "H0");
            break;
        }
        case Family::MixedXT: {
            const auto& c = std::get<MixedXTCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.b_xt, "b_xt");
            check_u(c.f, "f");
            check_t(c.g, "g");
            check_t(c.h, "h");
            check_x_opt(c.h0, "H0");
            break;
        }
        case Family::FType: {
            const auto& c = std::get<FTypeCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.big_b_xt, "B_xt");
            check_u(c.a_u, "A_u");
            check_u(c.f, "f");
            check_x(c.phi, "phi");
            check_x(c.psi, "psi");
            check_x_opt(c.h0, "H0");
            check_monotone(c.f, c.f_lo, c.f_hi);
            break;
        }
        case Family::GeneralBU: {
            const auto& c = std::get<GeneralBUCoeffs>(spec.coeffs);
            check_xt(c.a, "a");
            check_xt(c.alpha_xt, "alpha_xt");
            check_u(c.g_u, "G");
            check_u(c.big_b_u, "bigB");
            check_x(c.phi, "phi");
            check_x(c.psi, "psi");
            check_x_opt(c.h0, "H0");
            break;
        }
    }
}

}  // namespace charode
