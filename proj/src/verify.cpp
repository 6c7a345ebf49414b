#include "charode/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "charode/ode.hpp"
#include "charode/reducers.hpp"

namespace charode::verify {

namespace {

constexpr double kQuadTol = 1e-12;  // quadrature-backed oracle constants

double q_exp_s_s2(double t) {  // int_0^t e^{s + s^2/2} ds
    if (t == 0.0) return 0.0;
    return ode::quadrature([](double s) { return std::exp(s + 0.5 * s * s); }, 0.0, t, kQuadTol);
}

double q_exp_s2(double t) {  // int_0^t e^{s^2/2} ds
    if (t == 0.0) return 0.0;
    return ode::quadrature([](double s) { return std::exp(0.5 * s * s); }, 0.0, t, kQuadTol);
}

Expr e(const std::string& s) { return parse_expr(s); }

SolverSettings tight_solver() {
    SolverSettings s;
    s.tol = 1e-10;
    return s;
}

ProblemSpec eq4_spec() {
    ProblemSpec p;
    p.family = Family::Linear;
    p.coeffs = LinearCoeffs{e("x"), e("1"), e("x+t"), e("x^2")};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq7_spec() {
    ProblemSpec p;
    p.family = Family::Separable;
    p.coeffs = SeparableCoeffs{e("x"), e("u^2"), e("1"), e("x")};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq8_spec() {
    ProblemSpec p;
    p.family = Family::Separable;
    p.coeffs = SeparableCoeffs{e("x"), e("u^2+1"), e("x+t^2"), e("x")};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq10_spec() {
    ProblemSpec p;
    p.family = Family::Bernoulli;
    p.coeffs = BernoulliCoeffs{e("x"), e("t"), e("x+t"), e("x"), 2.0};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq11_spec() {
    ProblemSpec p;
    p.family = Family::Bernoulli;
    p.coeffs = BernoulliCoeffs{e("x"), e("1"), e("t"), e("x^2"), 2.0};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq12_spec() {
    ProblemSpec p;
    p.family = Family::Bernoulli;
    p.coeffs = BernoulliCoeffs{e("1"), e("t"), e("x"), e("x^2"), 2.0};
    p.domain = {0.5, 2.0, 1.0};
    p.grid = {41, 41};
    p.solver = tight_solver();
    return p;
}

ProblemSpec eq20_spec() {
    ProblemSpec p;
    p.family = Family::GeneralBU;
    GeneralBUCoeffs c;
    c.a = e("x");
    c.alpha_xt = e("x+t");
    c.g_u = e("2*u^2");
    c.big_b_u = e("-log(u)");
    c.phi = e("x");
    c.psi = e("x^2+x^3");
    c.h0 = e("x");  // the example's antiderivative convention H(0) = x0
    p.coeffs = c;
    p.domain = {0.5, 1.5, 0.4};
    p.grid = {101, 41};
    p.solver = tight_solver();
    p.solver.u_ref = 1.0;     // bigB is singular at u = 0
    p.solver.blow_up_cap = 1.15;  // keep the residual region clear of the singularity
    return p;
}

ProblemSpec prop92_spec() {
    ProblemSpec p;
    p.family = Family::GeneralBU;
    GeneralBUCoeffs c;
    c.a = e("0");
    c.alpha_xt = e("x*exp(t)+t");
    c.g_u = e("u^2");
    c.big_b_u = e("-log(u)");
    c.phi = e("x");
    c.psi = e("(x+x^2/2)*x");  // consistent with C = 1/2
    c.h0 = e("x");
    p.coeffs = c;
    p.domain = {0.6, 1.4, 0.12};
    p.grid = {41, 13};
    p.solver = tight_solver();
    p.solver.u_ref = 1.0;
    return p;
}

double eq4_eval(double x, double t) {
    const double x0 = x * std::exp(-t);
    return std::exp(t) * x0 * x0 + x * t - t - 1.0 + std::exp(t);
}

double eq7_eval(double x, double t) {
    const double x0 = x * std::exp(-t);
    return x0 / (1.0 - t * x0);
}

double eq8_arg(double x, double t) {
    const double x0 = x * std::exp(-t);
    return std::atan(x0) + x * (1.0 - std::exp(-t)) + t * t * t / 3.0;
}

double eq8_eval(double x, double t) { return std::tan(eq8_arg(x, t)); }

// Bernoulli closed forms; w carries the phi-independent part of v = 1/u and
// the pole at v = 0 is the true solution singularity.
double eq10_w(double x, double t) {
    const double g = std::exp(-0.5 * t * t);
    return -g * std::exp(-t) * x * q_exp_s_s2(t) + g - 1.0;
}

double eq10_eval(double x, double t) {
    const double phi0 = x * std::exp(-t);  // phi = x at the foot point
    const double g = std::exp(-0.5 * t * t);
    return phi0 / (phi0 * eq10_w(x, t) + g);
}

double eq11_w(double, double t) { return -t + 1.0 - std::exp(-t); }

double eq11_eval(double x, double t) {
    const double x0 = x * std::exp(-t);
    const double phi0 = x0 * x0;
    return phi0 / (phi0 * eq11_w(x, t) + std::exp(-t));
}

double eq12_w(double x, double t) {
    const double g = std::exp(-0.5 * t * t);
    return -1.0 + g - (x - t) * g * q_exp_s2(t);
}

double eq12_eval(double x, double t) {
    const double x0 = x - t;
    const double phi0 = x0 * x0;
    const double g = std::exp(-0.5 * t * t);
    return phi0 / (phi0 * eq12_w(x, t) + g);
}

// pole guard: |1/u| = |v| must stay away from zero
bool pole_free(double phi0, double w, double g) {
    if (phi0 == 0.0) return true;  // u = 0 exactly, regular point
    const double v = w + g / phi0;
    return std::fabs(v) >= 0.05;
}

double eq20_reduced_eval(double x, double t) {
    // u_t = (x + t^2/2 + u^2) u integrated per x from u(x,0) = x
    ode::OdeSystem sys;
    sys.dim = 1;
    sys.rhs = [x](double s, std::span<const double> y, std::span<double> dy) {
        dy[0] = (x + 0.5 * s * s + y[0] * y[0]) * y[0];
    };
    const double y0[1] = {x};
    ode::IntegrateOptions opts;
    opts.blow_up_cap = 1e10;
    auto res = ode::integrate(sys, y0, 0.0, t, 1e-12, {}, opts);
    if (res.outcome != ode::Outcome::Ok)
        throw OracleDomainError("eq20 reduced solution blows up before the requested time");
    return res.final_state[0];
}

bool eq20_valid(double x, double t) {
    // conservative blow-up bound from v' = -2xv - 2 with v = u^{-2}
    if (t == 0.0) return true;
    const double v0 = 1.0 / (x * x);
    const double c = x;
    const double vinf = 1.0 / c;
    const double tstar = std::log((v0 + vinf) / vinf) / (2.0 * c);
    return t <= 0.85 * tstar;
}

double prop92_eval(double x, double t) {
    const int n = 2;
    auto h = [x](double s) { return x * std::exp(s) + 0.5 * s * s; };
    const double v0 = 1.0 / (x * x);  // u(x,0) = x
    return closed_form_power_law(h, n, v0, t, 1e-12);
}

Oracle make_oracle(OracleId id) {
    Oracle o;
    o.id = id;
    o.name = oracle_name(id);
    switch (id) {
        case OracleId::Eq4:
            o.spec = eq4_spec();
            o.eval = eq4_eval;
            o.valid = [](double, double) { return true; };
            o.study = {0.6, 1.8, 1.0};
            break;
        case OracleId::Eq7:
            o.spec = eq7_spec();
            o.eval = eq7_eval;
            o.valid = [](double x, double t) { return t * x * std::exp(-t) < 1.0 - 0.05; };
            o.study = {0.6, 1.8, 1.0};
            break;
        case OracleId::Eq8:
            o.spec = eq8_spec();
            o.eval = eq8_eval;
            o.valid = [](double x, double t) {
                return eq8_arg(x, t) < std::numbers::pi / 2.0 - 0.05;
            };
            o.study = {0.5, 1.3, 0.6};
            break;
        case OracleId::Eq10:
            o.spec = eq10_spec();
            o.eval = eq10_eval;
            o.valid = [](double x, double t) {
                return pole_free(x * std::exp(-t), eq10_w(x, t), std::exp(-0.5 * t * t));
            };
            o.study = {0.6, 1.4, 0.6};
            break;
        case OracleId::Eq11:
            o.spec = eq11_spec();
            o.eval = eq11_eval;
            o.valid = [](double x, double t) {
                const double x0 = x * std::exp(-t);
                return pole_free(x0 * x0, eq11_w(x, t), std::exp(-t));
            };
            o.study = {0.6, 1.8, 1.0};
            break;
        case OracleId::Eq12:
            o.spec = eq12_spec();
            o.eval = eq12_eval;
            o.valid = [](double x, double t) {
                const double x0 = x - t;
                return pole_free(x0 * x0, eq12_w(x, t), std::exp(-0.5 * t * t));
            };
            o.study = {1.4, 1.8, 0.8};
            break;
        case OracleId::Eq20Reduced:
            o.spec = eq20_spec();
            o.eval = eq20_reduced_eval;
            o.valid = eq20_valid;
            o.study = {0.5, 0.82, 0.32};
            break;
        case OracleId::Prop92:
            o.spec = prop92_spec();
            o.eval = prop92_eval;
            o.valid = [](double, double) { return true; };
            o.study = {0.6, 1.4, 0.12};
            break;
    }
    return o;
}

}  // namespace

const char* oracle_name(OracleId id) {
    switch (id) {
        case OracleId::Eq4: return "eq4";
        case OracleId::Eq7: return "eq7";
        case OracleId::Eq8: return "eq8";
        case OracleId::Eq10: return "eq10";
        case OracleId::Eq11: return "eq11";
        case OracleId::Eq12: return "eq12";
        case OracleId::Eq20Reduced: return "eq20_reduced";
        case OracleId::Prop92: return "prop92";
    }
    return "?";
}

std::optional<OracleId> oracle_from_name(const std::string& name) {
    for (OracleId id : all_oracles())
        if (name == oracle_name(id)) return id;
    return std::nullopt;
}

std::vector<OracleId> all_oracles() {
    return {OracleId::Eq4,  OracleId::Eq7,  OracleId::Eq8,         OracleId::Eq10,
            OracleId::Eq11, OracleId::Eq12, OracleId::Eq20Reduced, OracleId::Prop92};
}

const Oracle& oracle(OracleId id) {
    static const std::array<Oracle, 8> registry = {
        make_oracle(OracleId::Eq4),  make_oracle(OracleId::Eq7),
        make_oracle(OracleId::Eq8),  make_oracle(OracleId::Eq10),
        make_oracle(OracleId::Eq11), make_oracle(OracleId::Eq12),
        make_oracle(OracleId::Eq20Reduced), make_oracle(OracleId::Prop92)};
    return registry[static_cast<std::size_t>(id)];
}

double oracle_eval(OracleId id, double x, double t) {
    const Oracle& o = oracle(id);
    if (!o.valid(x, t))
        throw OracleDomainError(std::string(o.name) + ": point outside the validity region");
    return o.eval(x, t);
}

namespace {

std::optional<std::string> compare_exprs(const Expr& a, const Expr& b, const char* field) {
    if (a.equals(b)) return std::nullopt;
    return std::string(field);
}

std::optional<std::string> spec_mismatch(const ProblemSpec& ours, const ProblemSpec& theirs) {
    if (ours.family != theirs.family) return std::string("family");
    switch (ours.family) {
        case Family::Linear: {
            const auto &a = std::get<LinearCoeffs>(ours.coeffs),
                       &b = std::get<LinearCoeffs>(theirs.coeffs);
            for (auto m : {compare_exprs(a.a, b.a, "a"), compare_exprs(a.alpha, b.alpha, "alpha"),
                           compare_exprs(a.b_xt, b.b_xt, "b_xt"),
                           compare_exprs(a.phi, b.phi, "phi")})
                if (m) return m;
            break;
        }
        case Family::Separable: {
            const auto &a = std::get<SeparableCoeffs>(ours.coeffs),
                       &b = std::get<SeparableCoeffs>(theirs.coeffs);
            for (auto m : {compare_exprs(a.a, b.a, "a"), compare_exprs(a.f, b.f, "f"),
                           compare_exprs(a.b_xt, b.b_xt, "b_xt"),
                           compare_exprs(a.phi, b.phi, "phi")})
                if (m) return m;
            break;
        }
        case Family::Bernoulli: {
            const auto &a = std::get<BernoulliCoeffs>(ours.coeffs),
                       &b = std::get<BernoulliCoeffs>(theirs.coeffs);
            if (a.n != b.n) return std::string("n");
            for (auto m : {compare_exprs(a.a, b.a, "a"), compare_exprs(a.b_xt, b.b_xt, "b_xt"),
                           compare_exprs(a.alpha, b.alpha, "alpha"),
                           compare_exprs(a.phi, b.phi, "phi")})
                if (m) return m;
            break;
        }
        case Family::GeneralBU: {
            const auto &a = std::get<GeneralBUCoeffs>(ours.coeffs),
                       &b = std::get<GeneralBUCoeffs>(theirs.coeffs);
            for (auto m :
                 {compare_exprs(a.a, b.a, "a"), compare_exprs(a.alpha_xt, b.alpha_xt, "alpha_xt"),
                  compare_exprs(a.g_u, b.g_u, "G"), compare_exprs(a.big_b_u, b.big_b_u, "bigB"),
                  compare_exprs(a.phi, b.phi, "phi"), compare_exprs(a.psi, b.psi, "psi")})
                if (m) return m;
            break;
        }
        default: return std::string("family");
    }
    return std::nullopt;
}

}  // namespace

bool oracle_matches(OracleId id, const ProblemSpec& spec, std::string* why) {
    auto mism = spec_mismatch(oracle(id).spec, spec);
    if (mism && why) *why = *mism;
    return !mism;
}

std::optional<OracleId> match_oracle(const ProblemSpec& spec) {
    for (OracleId id : all_oracles())
        if (oracle_matches(id, spec, nullptr)) return id;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// finite-difference residuals

namespace {

void check_uniform(const std::vector<double>& v, const char* axis) {
    if (v.size() < 3) throw ValidationError(std::string(axis) + " axis too short for residuals");
    const double h = v[1] - v[0];
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (std::fabs((v[i + 1] - v[i]) - h) > 1e-9 * std::max(1.0, std::fabs(h)))
            throw ValidationError(std::string(axis) + " axis is not uniform");
}

struct Stencil {
    double u, ut, ux, utt, uxx, uxt;
    double x, t;
};

template <class F>
ResidualReport scan_interior(const SolutionGrid& g, bool need_second, F&& defect) {
    check_uniform(g.xs, "x");
    check_uniform(g.ts, "t");
    ResidualReport rep;
    rep.h_x = g.xs[1] - g.xs[0];
    rep.h_t = g.ts[1] - g.ts[0];
    const std::size_t nx = g.xs.size(), nt = g.ts.size();
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < nx; ++i) {
        for (std::size_t j = 1; j + 1 < nt; ++j) {
            bool have = g.ok(i, j) && g.ok(i - 1, j) && g.ok(i + 1, j) && g.ok(i, j - 1) &&
                        g.ok(i, j + 1);
            if (need_second)
                have = have && g.ok(i - 1, j - 1) && g.ok(i - 1, j + 1) && g.ok(i + 1, j - 1) &&
                       g.ok(i + 1, j + 1);
            if (!have) continue;
            Stencil s;
            s.x = g.xs[i];
            s.t = g.ts[j];
            s.u = g.at(i, j);
            s.ut = (g.at(i, j + 1) - g.at(i, j - 1)) / (2.0 * rep.h_t);
            s.ux = (g.at(i + 1, j) - g.at(i - 1, j)) / (2.0 * rep.h_x);
            s.utt = (g.at(i, j + 1) - 2.0 * s.u + g.at(i, j - 1)) / (rep.h_t * rep.h_t);
            s.uxx = (g.at(i + 1, j) - 2.0 * s.u + g.at(i - 1, j)) / (rep.h_x * rep.h_x);
            s.uxt = (g.at(i + 1, j + 1) - g.at(i + 1, j - 1) - g.at(i - 1, j + 1) +
                     g.at(i - 1, j - 1)) /
                    (4.0 * rep.h_x * rep.h_t);
            double r;
            try {
                r = std::fabs(defect(s));
            } catch (const std::runtime_error&) {
                continue;  // domain error in a coefficient; node not assessable
            }
            if (!std::isfinite(r)) continue;
            ++rep.n_interior;
            sum += r;
            if (r > rep.max_abs) {
                rep.max_abs = r;
                rep.worst_x = s.x;
                rep.worst_t = s.t;
            }
        }
    }
    rep.mean_abs = rep.n_interior > 0 ? sum / static_cast<double>(rep.n_interior) : 0.0;
    return rep;
}

double fd_derivative(const Expr& f, double p) {
    const double d = 1e-6 * (1.0 + std::fabs(p));
    return (f.eval(Env::u(p + d)) - f.eval(Env::u(p - d))) / (2.0 * d);
}

}  // namespace

ResidualReport residual_first_order(const SolutionGrid& grid, const ProblemSpec& spec) {
    switch (spec.family) {
        case Family::Linear: {
            const auto& c = std::get<LinearCoeffs>(spec.coeffs);
            return scan_interior(grid, false, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                return s.ut + c.a.eval(env) * s.ux - c.alpha.eval(env) * s.u - c.b_xt.eval(env);
            });
        }
        case Family::Separable: {
            const auto& c = std::get<SeparableCoeffs>(spec.coeffs);
            return scan_interior(grid, false, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                return s.ut + c.a.eval(env) * s.ux - c.f.eval(Env::u(s.u)) * c.b_xt.eval(env);
            });
        }
        case Family::Bernoulli: {
            const auto& c = std::get<BernoulliCoeffs>(spec.coeffs);
            return scan_interior(grid, false, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                return s.ut + c.a.eval(env) * s.ux - c.b_xt.eval(env) * s.u -
                       c.alpha.eval(env) * checked_pow(s.u, c.n);
            });
        }
        case Family::Riccati: {
            const auto& c = std::get<RiccatiCoeffs>(spec.coeffs);
            return scan_interior(grid, false, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                return s.ut + c.a.eval(env) * s.ux - c.b_xt.eval(env) * s.u - c.alpha.eval(env) -
                       c.beta.eval(env) * s.u * s.u;
            });
        }
        default:
            throw ValidationError("residual_first_order requires a first-order family");
    }
}

ResidualReport residual_second_order(const SolutionGrid& grid, const ProblemSpec& spec) {
    switch (spec.family) {
        case Family::MixedTT: {
            const auto& c = std::get<MixedTTCoeffs>(spec.coeffs);
            return scan_interior(grid, true, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                const double a = c.a.eval(env);
                return s.utt + a * s.uxt - c.b_xt.eval(env) -
                       (s.ut + a * s.ux) * c.f.eval(Env::u(s.u));
            });
        }
        case Family::MixedXT: {
            const auto& c = std::get<MixedXTCoeffs>(spec.coeffs);
            return scan_interior(grid, true, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                const double a = c.a.eval(env);
                return s.uxt + a * s.uxx - c.b_xt.eval(env) -
                       (a * s.ux + s.ut) * c.f.eval(Env::u(s.u));
            });
        }
        case Family::FType: {
            const auto& c = std::get<FTypeCoeffs>(spec.coeffs);
            return scan_interior(grid, true, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                const double a = c.a.eval(env);
                return fd_derivative(c.f, s.ut) * (s.utt + a * s.uxt) - c.big_b_xt.eval(env) -
                       c.a_u.eval(Env::u(s.u)) * (s.ut + a * s.ux);
            });
        }
        case Family::GeneralBU: {
            const auto& c = std::get<GeneralBUCoeffs>(spec.coeffs);
            return scan_interior(grid, true, [&c](const Stencil& s) {
                const Env env = Env::xt(s.x, s.t);
                const double a = c.a.eval(env);
                const double bu = fd_derivative(c.big_b_u, s.u);  // b(u) = bigB'(u)
                const double mat = s.ut + a * s.ux;
                return s.utt + a * s.uxt + bu * s.ut * mat -
                       c.alpha_xt.eval(env) * std::exp(-c.big_b_u.eval(Env::u(s.u))) -
                       c.g_u.eval(Env::u(s.u)) * mat;
            });
        }
        default:
            throw ValidationError("residual_second_order requires a second-order family");
    }
}

ResidualReport residual(const SolutionGrid& grid, const ProblemSpec& spec) {
    return is_second_order(spec.family) ? residual_second_order(grid, spec)
                                        : residual_first_order(grid, spec);
}

ResidualReport oracle_residual(OracleId id, double h) {
    const Oracle& o = oracle(id);
    ProblemSpec spec = o.spec;
    spec.domain = o.study;
    const double wx = o.study.x_max - o.study.x_min;
    spec.grid.nx = static_cast<int>(std::lround(wx / h)) + 1;
    spec.grid.nt = static_cast<int>(std::lround(o.study.t_max / h)) + 1;

    SolutionGrid g = make_grid(spec);
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
        for (std::size_t j = 0; j < g.ts.size(); ++j) {
            const double x = g.xs[i], t = g.ts[j];
            if (!o.valid(x, t)) continue;  // leave as excluded
            g.u[g.idx(i, j)] = o.eval(x, t);
            g.status[g.idx(i, j)] = NodeStatus::Ok;
        }
    }
    return residual(g, spec);
}

std::vector<ConvergencePoint> convergence_order(OracleId id, std::span<const double> hs) {
    if (hs.size() < 3) throw std::invalid_argument("need at least 3 spacings");
    std::vector<ConvergencePoint> pts;
    pts.reserve(hs.size());
    for (double h : hs) pts.push_back({h, oracle_residual(id, h).max_abs});
    return pts;
}

double fitted_slope(std::span<const ConvergencePoint> pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pts.size());
    for (const auto& p : pts) {
        const double lx = std::log(p.h), ly = std::log(std::max(p.value, 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

OracleComparison compare_with_oracle(const SolutionGrid& grid, OracleId id,
                                     const std::function<bool(double, double)>& extra_region) {
    const Oracle& o = oracle(id);
    OracleComparison cmp;
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        for (std::size_t j = 0; j < grid.ts.size(); ++j) {
            const double x = grid.xs[i], t = grid.ts[j];
            if (!grid.ok(i, j) || !o.valid(x, t) || (extra_region && !extra_region(x, t))) {
                ++cmp.n_skipped;
                continue;
            }
            const double err = std::fabs(grid.at(i, j) - o.eval(x, t));
            ++cmp.n_compared;
            sum += err;
            cmp.max_err = std::max(cmp.max_err, err);
        }
    }
    cmp.mean_err = cmp.n_compared > 0 ? sum / static_cast<double>(cmp.n_compared) : 0.0;
    return cmp;
}

}  // namespace charode::verify
