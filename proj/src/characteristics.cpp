#include "charode/characteristics.hpp"

#include <cmath>
#include <string>

namespace charode::characteristics {

TraceError::TraceError(ode::Outcome outcome, double reached_t)
    : std::runtime_error(std::string("characteristic trace failed: ") +
                         ode::outcome_name(outcome) + " at t=" + std::to_string(reached_t)),
      outcome_(outcome),
      reached_t_(reached_t) {}

TraceOptions trace_options_for_domain(double x_min, double x_max, double tol,
                                      double blow_up_cap, double margin_factor) {
    TraceOptions o;
    o.tol = tol;
    o.blow_up_cap = blow_up_cap;
    const double w = x_max - x_min;
    o.x_lo = x_min - margin_factor * w;
    o.x_hi = x_max + margin_factor * w;
    return o;
}

namespace {

ode::IntegrateOptions make_opts(const TraceOptions& topt) {
    ode::IntegrateOptions o;
    o.blow_up_cap = topt.blow_up_cap;
    o.guard = [lo = topt.x_lo, hi = topt.x_hi](double, std::span<const double> y) {
        return y[0] >= lo && y[0] <= hi;
    };
    return o;
}

}  // namespace

CharacteristicPath trace_forward(const TraceCoeffs& coeffs, double x0, double t_end,
                                 const TraceOptions& opts, std::span<const double> sample_at) {
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");

    // state: (x, Ialpha, J, Ib)
    ode::OdeSystem sys;
    sys.dim = 4;
    sys.rhs = [&coeffs](double s, std::span<const double> y, std::span<double> dy) {
        const Env env = Env::xts(y[0], s);
        const double av = coeffs.a.eval(env);
        const double alv = coeffs.alpha.eval(env);
        const double bv = coeffs.b.eval(env);
        dy[0] = av;
        dy[1] = alv;
        dy[2] = bv * std::exp(-y[1]);
        dy[3] = bv;
    };

    const double y0[4] = {x0, 0.0, 0.0, 0.0};
    auto res = ode::integrate(sys, y0, 0.0, t_end, opts.tol, sample_at, make_opts(opts));
    if (res.outcome != ode::Outcome::Ok) throw TraceError(res.outcome, res.last_t);

    CharacteristicPath path;
    path.x0 = x0;
    path.steps = res.steps;
    path.samples.reserve(res.samples.size());
    for (const auto& s : res.samples)
        path.samples.push_back({s.t, s.y[0], s.y[1], s.y[2], s.y[3]});
    return path;
}

double trace_backward(const Expr& a, double x, double t, const TraceOptions& opts) {
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
    if (t == 0.0) return x;
    ode::OdeSystem sys;
    sys.dim = 1;
    sys.rhs = [&a](double s, std::span<const double> y, std::span<double> dy) {
        dy[0] = a.eval(Env::xts(y[0], s));
    };
    const double y0[1] = {x};
    auto res = ode::integrate(sys, y0, t, 0.0, opts.tol, {}, make_opts(opts));
    if (res.outcome != ode::Outcome::Ok) throw TraceError(res.outcome, res.last_t);
    return res.final_state[0];
}

NodeIntegral path_integral_with_foot(const Expr& g, const Expr& a, double x, double t,
                                     const TraceOptions& opts) {
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
    if (t == 0.0) return {0.0, x};
    // state (x, B) with B(s) = int_t^s g; then int_0^t g = -B(0)
    ode::OdeSystem sys;
    sys.dim = 2;
    sys.rhs = [&g, &a](double s, std::span<const double> y, std::span<double> dy) {
        const Env env = Env::xts(y[0], s);
        dy[0] = a.eval(env);
        dy[1] = g.eval(env);
    };
    const double y0[2] = {x, 0.0};
    auto res = ode::integrate(sys, y0, t, 0.0, opts.tol, {}, make_opts(opts));
    if (res.outcome != ode::Outcome::Ok) throw TraceError(res.outcome, res.last_t);
    return {-res.final_state[1], res.final_state[0]};
}

double path_integral(const Expr& g, const Expr& a, double x, double t,
                     const TraceOptions& opts) {
    return path_integral_with_foot(g, a, x, t, opts).value;
}

}  // namespace charode::characteristics
