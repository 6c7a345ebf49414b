#include "charode/reducers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charode/characteristics.hpp"
#include "charode/ode.hpp"
#include "charode/parallel.hpp"

namespace charode {

namespace chars = characteristics;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

chars::TraceOptions trace_opts(const ProblemSpec& spec) {
    return chars::trace_options_for_domain(spec.domain.x_min, spec.domain.x_max,
                                           spec.solver.tol, spec.solver.blow_up_cap,
                                           spec.solver.bounds_margin_factor);
}

// node integrals and K quadratures run two orders tighter than the solve
double inner_tol(const ProblemSpec& spec) {
    return std::max(spec.solver.tol * 1e-2, 1e-13);
}

NodeStatus status_from_outcome(ode::Outcome o) {
    switch (o) {
        case ode::Outcome::BlowUp:
        case ode::Outcome::StepUnderflow: return NodeStatus::BlowUp;
        default: return NodeStatus::TraceFailed;
    }
}

ode::IntegrateOptions node_ode_opts(const chars::TraceOptions& topt, bool guard_x,
                                    double cap) {
    ode::IntegrateOptions o;
    o.blow_up_cap = cap;
    if (guard_x)
        o.guard = [lo = topt.x_lo, hi = topt.x_hi](double, std::span<const double> y) {
            return y[0] >= lo && y[0] <= hi;
        };
    return o;
}

double eval_phi(const Expr& phi, double x) { return phi.eval(Env{}.bind(Var::X, x)); }

/// Shared per-node driver for the first-order families. node_fn computes the
/// value at (x, t > 0) and may throw; failures are recorded per node.
template <class NodeFn>
SolutionGrid solve_first_order(const ProblemSpec& spec, const RunOptions& run, const Expr& phi,
                               NodeFn&& node_fn) {
    SolutionGrid g = make_grid(spec);
    const std::size_t nx = g.xs.size(), nt = g.ts.size();
    std::vector<long> steps(nx * nt, 0);
    parallel_for(nx * nt, run.threads, [&](std::size_t k) {
        const std::size_t i = k / nt, j = k % nt;
        const double x = g.xs[i], t = g.ts[j];
        try {
            if (j == 0) {
                g.u[k] = eval_phi(phi, x);  // data row copied, not integrated
                g.status[k] = NodeStatus::Ok;
                return;
            }
            long node_steps = 0;
            const double u = node_fn(x, t, node_steps);
            steps[k] = node_steps;
            if (!std::isfinite(u) || std::fabs(u) > spec.solver.blow_up_cap) {
                g.u[k] = kNaN;
                g.status[k] = NodeStatus::BlowUp;
            } else {
                g.u[k] = u;
                g.status[k] = NodeStatus::Ok;
            }
        } catch (const chars::TraceError& e) {
            g.u[k] = kNaN;
            g.status[k] = status_from_outcome(e.outcome());
        } catch (const std::runtime_error&) {
            g.u[k] = kNaN;
            g.status[k] = NodeStatus::TraceFailed;
        }
    });
    for (long s : steps) g.total_steps += s;
    return g;
}

}  // namespace

SolutionGrid solve_linear_first_order(const ProblemSpec& spec, const RunOptions& run) {
    const auto& c = std::get<LinearCoeffs>(spec.coeffs);
    const auto topt = trace_opts(spec);
    return solve_first_order(spec, run, c.phi, [&](double x, double t, long& steps) {
        const double x0 = chars::trace_backward(c.a, x, t, topt);
        const double sample[1] = {t};
        auto path = chars::trace_forward({c.a, c.alpha, c.b_xt}, x0, t, topt, sample);
        steps = path.steps;
        const auto& end = path.samples.back();
        // Prop 2.1: u = e^{Ialpha} (phi(x0) + J)
        return std::exp(end.i_alpha) * (eval_phi(c.phi, x0) + end.j_src);
    });
}

SolutionGrid solve_separable(const ProblemSpec& spec, const RunOptions& run) {
    const auto& c = std::get<SeparableCoeffs>(spec.coeffs);
    const auto topt = trace_opts(spec);
    return solve_first_order(spec, run, c.phi, [&](double x, double t, long& steps) {
        const double x0 = chars::trace_backward(c.a, x, t, topt);
        const double u0 = eval_phi(c.phi, x0);
        // coupled system (x, u)' = (a, f(u) b)
        ode::OdeSystem sys;
        sys.dim = 2;
        sys.rhs = [&c](double s, std::span<const double> y, std::span<double> dy) {
            const Env env = Env::xts(y[0], s);
            dy[0] = c.a.eval(env);
            dy[1] = c.f.eval(Env::u(y[1])) * c.b_xt.eval(env);
        };
        const double y0[2] = {x0, u0};
        auto res = ode::integrate(sys, y0, 0.0, t, spec.solver.tol, {},
                                  node_ode_opts(topt, true, spec.solver.blow_up_cap));
        if (res.outcome != ode::Outcome::Ok) throw chars::TraceError(res.outcome, res.last_t);
        steps = res.steps;
        return res.final_state[1];
    });
}

SolutionGrid solve_bernoulli(const ProblemSpec& spec, const RunOptions& run) {
    const auto& c = std::get<BernoulliCoeffs>(spec.coeffs);
    const auto topt = trace_opts(spec);
    const double p = 1.0 - c.n;
    const double pinv = 1.0 / p;
    return solve_first_order(spec, run, c.phi, [&, p, pinv](double x, double t, long& steps) {
        const double x0 = chars::trace_backward(c.a, x, t, topt);
        const double phi0 = eval_phi(c.phi, x0);
        // v = u^{1-n} turns the equation into dv/dt = (1-n)(b v + alpha);
        // phi0 = 0 with 1-n < 0 is a domain error surfaced by checked_pow
        const double v0 = checked_pow(phi0, p);
        ode::OdeSystem sys;
        sys.dim = 2;
        sys.rhs = [&c, p](double s, std::span<const double> y, std::span<double> dy) {
            const Env env = Env::xts(y[0], s);
            dy[0] = c.a.eval(env);
            dy[1] = p * (c.b_xt.eval(env) * y[1] + c.alpha.eval(env));
        };
        // v solves a linear equation, so large |v| just means u near zero;
        // only overflow is a real failure
        const double y0[2] = {x0, v0};
        auto res = ode::integrate(sys, y0, 0.0, t, spec.solver.tol, {},
                                  node_ode_opts(topt, true, 1e305));
        if (res.outcome != ode::Outcome::Ok) throw chars::TraceError(res.outcome, res.last_t);
        steps = res.steps;
        const double v = res.final_state[1];
        if (v == 0.0) return std::numeric_limits<double>::infinity();  // marked blow_up
        if (v < 0.0 && std::nearbyint(pinv) != pinv)
            throw EvalError("v crossed zero with non-integer 1/(1-n)", 0);
        return checked_pow(v, pinv);
    });
}

ProblemSpec riccati_to_bernoulli(const ProblemSpec& spec) {
    const auto& c = std::get<RiccatiCoeffs>(spec.coeffs);
    ProblemSpec out = spec;
    out.family = Family::Bernoulli;
    BernoulliCoeffs b;
    b.a = c.a;
    // gamma = b + 2 beta u1 via expression composition
    b.b_xt = Expr::add(c.b_xt, Expr::mul(Expr::constant(2.0), Expr::mul(c.beta, c.u1)));
    b.alpha = c.beta;
    b.n = 2.0;
    b.phi = Expr::sub(c.phi, c.u1.substitute(Var::T, Expr::constant(0.0)));
    out.coeffs = b;
    return out;
}

SolutionGrid solve_riccati(const ProblemSpec& spec, const RunOptions& run) {
    const auto& c = std::get<RiccatiCoeffs>(spec.coeffs);
    SolutionGrid w = solve_bernoulli(riccati_to_bernoulli(spec), run);
    SolutionGrid g = std::move(w);  // same layout; shift in place
    const std::size_t nx = g.xs.size(), nt = g.ts.size();
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const std::size_t k = g.idx(i, j);
            if (j == 0) {
                // data row is phi itself, not u1 + (phi - u1)
                try {
                    g.u[k] = eval_phi(c.phi, g.xs[i]);
                    g.status[k] = NodeStatus::Ok;
                } catch (const std::runtime_error&) {
                    g.u[k] = kNaN;
                    g.status[k] = NodeStatus::TraceFailed;
                }
                continue;
            }
            if (g.status[k] != NodeStatus::Ok) continue;
            try {
                const double u1v = c.u1.eval(Env::xt(g.xs[i], g.ts[j]));
                g.u[k] += u1v;
            } catch (const std::runtime_error&) {
                g.u[k] = kNaN;
                g.status[k] = NodeStatus::TraceFailed;
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// second-order reductions

namespace {

struct ReductionSetup {
    Expr a;
    Expr source;  // integrand of Hhat along characteristics
    Expr h0;      // optional anchor, value of Hhat on the data line per foot point
    std::function<double(double)> k_integrand;
};

double eval_h0(const Expr& h0, double x0) {
    return h0.empty() ? 0.0 : h0.eval(Env{}.bind(Var::X, x0));
}

ReducedODE build_reduction(const ProblemSpec& spec, Family fam, const ReductionSetup& setup,
                           ReduceDirection dir) {
    ReducedODE red;
    red.family = fam;
    red.direction = dir;

    auto inner = trace_opts(spec);
    inner.tol = inner_tol(spec);
    const Expr a = setup.a, src = setup.source, h0 = setup.h0;
    red.h_hat = [a, src, h0, inner](double x, double t) {
        if (t == 0.0) return eval_h0(h0, x);
        const auto ni = chars::path_integral_with_foot(src, a, x, t, inner);
        return ni.value + eval_h0(h0, ni.x0);
    };

    const double u_ref = spec.solver.u_ref;
    const double ktol = inner_tol(spec);
    red.k_of_u = [integrand = setup.k_integrand, u_ref, ktol](double u) {
        if (u == u_ref) return 0.0;
        return ode::quadrature(integrand, u_ref, u, ktol);
    };
    return red;
}

// Fits the single constant from the per-node constants C_i over the data line
// and records their spread as the ansatz consistency measure.
void fit_constant(ReducedODE& red, const ProblemSpec& spec, std::span<const double> coords,
                  const std::function<double(double)>& data_const) {
    red.c_table.clear();
    red.c_table.reserve(coords.size());
    double sum = 0.0;
    double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
    for (double coord : coords) {
        const double ci = data_const(coord);
        red.c_table.emplace_back(coord, ci);
        sum += ci;
        cmin = std::min(cmin, ci);
        cmax = std::max(cmax, ci);
    }
    red.c = sum / static_cast<double>(coords.size());
    red.delta_c = cmax - cmin;
    red.consistency_threshold = spec.solver.consistency_tol * (1.0 + std::fabs(red.c));
    red.consistent = red.delta_c <= red.consistency_threshold;
}

}  // namespace

ReducedODE reduce_mixed_tt(const ProblemSpec& spec) {
    const auto& c = std::get<MixedTTCoeffs>(spec.coeffs);
    ReductionSetup s;
    s.a = c.a;
    s.source = c.b_xt;
    s.h0 = c.h0;
    s.k_integrand = [f = c.f](double w) { return f.eval(Env::u(w)); };
    ReducedODE red = build_reduction(spec, Family::MixedTT, s, ReduceDirection::InT);
    const auto xs = grid_x(spec);
    // C(x) = psi(x) - Hhat(x,0) - K(phi(x))
    fit_constant(red, spec, xs, [&c, &red](double x) {
        return c.psi.eval(Env{}.bind(Var::X, x)) - red.h_hat(x, 0.0) -
               red.k_of_u(eval_phi(c.phi, x));
    });
    const auto h = red.h_hat;
    const auto k = red.k_of_u;
    const double C = red.c;
    red.rhs = [h, k, C](double x, double t, double u) { return h(x, t) + k(u) + C; };
    return red;
}

namespace {

double invert_core(const std::function<double(double)>& f, double y, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    const bool inc = fhi > flo;
    const double ymin = std::min(flo, fhi), ymax = std::max(flo, fhi);
    const double tol_y = 1e-12 * (1.0 + std::fabs(y));
    if (y < ymin - tol_y || y > ymax + tol_y)
        throw RootFindError("target value outside the range of f on the bracket");
    y = std::clamp(y, ymin, ymax);
    double a = lo, b = hi;
    for (int it = 0; it < 80 && (b - a) > 1e-16 * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < y) == inc)
            a = m;
        else
            b = m;
    }
    double p = 0.5 * (a + b);
    // Newton polish with a finite-difference derivative
    for (int it = 0; it < 6; ++it) {
        const double fp = f(p);
        if (std::fabs(fp - y) <= tol_y) return p;
        const double d = 1e-7 * (1.0 + std::fabs(p));
        const double der = (f(p + d) - f(p - d)) / (2.0 * d);
        if (der == 0.0 || !std::isfinite(der)) break;
        const double pn = p - (fp - y) / der;
        if (!std::isfinite(pn) || pn < lo || pn > hi) break;
        p = pn;
    }
    if (std::fabs(f(p) - y) > tol_y)
        throw RootFindError("root polish failed to reach the requested residual");
    return p;
}

}  // namespace

double invert_f(const Expr& f, double y, double p_lo, double p_hi) {
    if (!(p_lo < p_hi)) throw std::invalid_argument("invalid bracket");
    auto F = [&f](double p) { return f.eval(Env::u(p)); };
    // strict monotonicity check by sampling
    int sign = 0;
    double prev = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double p = p_lo + (p_hi - p_lo) * i / 63.0;
        const double v = F(p);
        if (i > 0) {
            const double d = v - prev;
            if (d == 0.0) throw RootFindError("f is not strictly monotone on the bracket");
            const int s = d > 0.0 ? 1 : -1;
            if (sign == 0) sign = s;
            if (s != sign) throw RootFindError("f is not strictly monotone on the bracket");
        }
        prev = v;
    }
    return invert_core(F, y, p_lo, p_hi);
}

ReducedODE reduce_ftype(const ProblemSpec& spec) {
    const auto& c = std::get<FTypeCoeffs>(spec.coeffs);
    ReductionSetup s;
    s.a = c.a;
    s.source = c.big_b_xt;
    s.h0 = c.h0;
    s.k_integrand = [au = c.a_u](double w) { return au.eval(Env::u(w)); };
    ReducedODE red = build_reduction(spec, Family::FType, s, ReduceDirection::InT);
    const auto xs = grid_x(spec);
    // C(x) = f(psi(x)) - Hhat(x,0) - K(phi(x))
    fit_constant(red, spec, xs, [&c, &red](double x) {
        const double psi = c.psi.eval(Env{}.bind(Var::X, x));
        return c.f.eval(Env::u(psi)) - red.h_hat(x, 0.0) - red.k_of_u(eval_phi(c.phi, x));
    });
    const auto h = red.h_hat;
    const auto k = red.k_of_u;
    const double C = red.c;
    const Expr f = c.f;
    const double lo = c.f_lo, hi = c.f_hi;
    red.rhs = [h, k, C, f, lo, hi](double x, double t, double u) {
        const double y = h(x, t) + k(u) + C;
        return invert_core([&f](double p) { return f.eval(Env::u(p)); }, y, lo, hi);
    };
    return red;
}

ReducedODE reduce_general_bu(const ProblemSpec& spec) {
    const auto& c = std::get<GeneralBUCoeffs>(spec.coeffs);
    ReductionSetup s;
    s.a = c.a;
    s.source = c.alpha_xt;
    s.h0 = c.h0;
    s.k_integrand = [g = c.g_u, bb = c.big_b_u](double w) {
        return g.eval(Env::u(w)) * std::exp(bb.eval(Env::u(w)));
    };
    ReducedODE red = build_reduction(spec, Family::GeneralBU, s, ReduceDirection::InT);
    const auto xs = grid_x(spec);
    // C(x) = psi(x) e^{bigB(phi(x))} - Hhat(x,0) - K(phi(x))
    fit_constant(red, spec, xs, [&c, &red](double x) {
        const double phi = eval_phi(c.phi, x);
        const double psi = c.psi.eval(Env{}.bind(Var::X, x));
        return psi * std::exp(c.big_b_u.eval(Env::u(phi))) - red.h_hat(x, 0.0) -
               red.k_of_u(phi);
    });
    const auto h = red.h_hat;
    const auto k = red.k_of_u;
    const double C = red.c;
    const Expr bb = c.big_b_u;
    red.rhs = [h, k, C, bb](double x, double t, double u) {
        return (h(x, t) + k(u) + C) * std::exp(-bb.eval(Env::u(u)));
    };
    return red;
}

ReducedODE reduce_mixed_xt(const ProblemSpec& spec) {
    const auto& c = std::get<MixedXTCoeffs>(spec.coeffs);
    ReductionSetup s;
    s.a = c.a;
    s.source = c.b_xt;
    s.h0 = c.h0;
    s.k_integrand = [f = c.f](double w) { return f.eval(Env::u(w)); };
    ReducedODE red = build_reduction(spec, Family::MixedXT, s, ReduceDirection::InX);
    const auto ts = grid_t(spec);
    const double x_min = spec.domain.x_min;
    // C(t) = h(t) - Hhat(x_min, t) - K(g(t))
    fit_constant(red, spec, ts, [&c, &red, x_min](double t) {
        const double g = c.g.eval(Env{}.bind(Var::T, t));
        const double hb = c.h.eval(Env{}.bind(Var::T, t));
        return hb - red.h_hat(x_min, t) - red.k_of_u(g);
    });
    const auto h = red.h_hat;
    const auto k = red.k_of_u;
    const double C = red.c;
    red.rhs = [h, k, C](double x, double t, double u) { return h(x, t) + k(u) + C; };
    return red;
}

ReducedODE reduce(const ProblemSpec& spec) {
    switch (spec.family) {
        case Family::MixedTT: return reduce_mixed_tt(spec);
        case Family::MixedXT: return reduce_mixed_xt(spec);
        case Family::FType: return reduce_ftype(spec);
        case Family::GeneralBU: return reduce_general_bu(spec);
        default:
            throw ValidationError(std::string("family '") + family_name(spec.family) +
                                  "' is first order and has no reduction");
    }
}

namespace {

const Expr& data_phi(const ProblemSpec& spec) {
    switch (spec.family) {
        case Family::MixedTT: return std::get<MixedTTCoeffs>(spec.coeffs).phi;
        case Family::FType: return std::get<FTypeCoeffs>(spec.coeffs).phi;
        case Family::GeneralBU: return std::get<GeneralBUCoeffs>(spec.coeffs).phi;
        default: throw ValidationError("family has no phi data line");
    }
}

}  // namespace

SolutionGrid integrate_reduced_in_t(const ReducedODE& red, const ProblemSpec& spec,
                                    const RunOptions& run) {
    if (red.direction != ReduceDirection::InT)
        throw std::invalid_argument("reduction integrates in x, not t");
    SolutionGrid g = make_grid(spec);
    const Expr& phi = data_phi(spec);
    const std::size_t nx = g.xs.size(), nt = g.ts.size();
    std::vector<long> steps(nx, 0);
    parallel_for(nx, run.threads, [&](std::size_t i) {
        const double x = g.xs[i];
        double u0;
        try {
            u0 = eval_phi(phi, x);
        } catch (const std::runtime_error&) {
            for (std::size_t j = 0; j < nt; ++j) g.status[g.idx(i, j)] = NodeStatus::TraceFailed;
            return;
        }
        g.u[g.idx(i, 0)] = u0;  // data row copied exactly
        g.status[g.idx(i, 0)] = NodeStatus::Ok;
        if (std::fabs(u0) > spec.solver.blow_up_cap) {
            for (std::size_t j = 1; j < nt; ++j) g.status[g.idx(i, j)] = NodeStatus::BlowUp;
            return;
        }

        ode::OdeSystem sys;
        sys.dim = 1;
        sys.rhs = [&red, x](double t, std::span<const double> y, std::span<double> dy) {
            try {
                dy[0] = red.rhs(x, t, y[0]);
            } catch (const std::runtime_error&) {
                dy[0] = kNaN;  // surfaces as a non-finite step, aborting this line
            }
        };
        const double y0[1] = {u0};
        ode::IntegrateOptions opts;
        opts.blow_up_cap = spec.solver.blow_up_cap;
        auto res = ode::integrate(sys, y0, 0.0, spec.domain.t_max, spec.solver.tol,
                                  std::span<const double>(g.ts).subspan(1), opts);
        steps[i] = res.steps;
        for (std::size_t j = 1; j < nt; ++j) {
            if (j - 1 < res.samples.size()) {
                g.u[g.idx(i, j)] = res.samples[j - 1].y[0];
                g.status[g.idx(i, j)] = NodeStatus::Ok;
            } else {
                g.status[g.idx(i, j)] = (res.outcome == ode::Outcome::Ok)
                                            ? NodeStatus::TraceFailed
                                            : status_from_outcome(res.outcome);
            }
        }
    });
    for (long s : steps) g.total_steps += s;
    return g;
}

SolutionGrid integrate_reduced_in_x(const ReducedODE& red, const ProblemSpec& spec,
                                    const RunOptions& run) {
    if (red.direction != ReduceDirection::InX)
        throw std::invalid_argument("reduction integrates in t, not x");
    const auto& c = std::get<MixedXTCoeffs>(spec.coeffs);
    SolutionGrid g = make_grid(spec);
    const std::size_t nx = g.xs.size(), nt = g.ts.size();
    std::vector<long> steps(nt, 0);
    parallel_for(nt, run.threads, [&](std::size_t j) {
        const double t = g.ts[j];
        double u0;
        try {
            u0 = c.g.eval(Env{}.bind(Var::T, t));
        } catch (const std::runtime_error&) {
            for (std::size_t i = 0; i < nx; ++i) g.status[g.idx(i, j)] = NodeStatus::TraceFailed;
            return;
        }
        g.u[g.idx(0, j)] = u0;  // boundary column copied exactly
        g.status[g.idx(0, j)] = NodeStatus::Ok;
        if (std::fabs(u0) > spec.solver.blow_up_cap) {
            for (std::size_t i = 1; i < nx; ++i) g.status[g.idx(i, j)] = NodeStatus::BlowUp;
            return;
        }

        ode::OdeSystem sys;
        sys.dim = 1;
        sys.rhs = [&red, t](double xx, std::span<const double> y, std::span<double> dy) {
            try {
                dy[0] = red.rhs(xx, t, y[0]);
            } catch (const std::runtime_error&) {
                dy[0] = kNaN;
            }
        };
        const double y0[1] = {u0};
        ode::IntegrateOptions opts;
        opts.blow_up_cap = spec.solver.blow_up_cap;
        auto res = ode::integrate(sys, y0, spec.domain.x_min, spec.domain.x_max,
                                  spec.solver.tol, std::span<const double>(g.xs).subspan(1),
                                  opts);
        steps[j] = res.steps;
        for (std::size_t i = 1; i < nx; ++i) {
            if (i - 1 < res.samples.size()) {
                g.u[g.idx(i, j)] = res.samples[i - 1].y[0];
                g.status[g.idx(i, j)] = NodeStatus::Ok;
            } else {
                g.status[g.idx(i, j)] = (res.outcome == ode::Outcome::Ok)
                                            ? NodeStatus::TraceFailed
                                            : status_from_outcome(res.outcome);
            }
        }
    });
    for (long s : steps) g.total_steps += s;
    return g;
}

double closed_form_power_law(const std::function<double(double)>& h_of_t, int n, double v0,
                             double t, double tol, std::optional<double> lambda) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!std::isfinite(v0)) throw std::invalid_argument("v0 must be finite");
    const double lam = lambda.value_or(1.0 / n);
    const double tol_phi = std::max(tol * 1e-2, 1e-14);
    const double tol_w = std::max(tol * 1e-1, 1e-13);
    auto phi = [&](double s) { return ode::quadrature(h_of_t, 0.0, s, tol_phi); };
    const double w = ode::quadrature([&](double s) { return std::exp(n * phi(s)); }, 0.0, t,
                                     tol_w);
    const double v = std::exp(-n * phi(t)) * (v0 - n * lam * w);
    if (v <= 0.0) throw BlowUpError("power-law solution reaches blow-up before t");
    return checked_pow(v, -1.0 / n);
}

SolutionGrid solve(const ProblemSpec& spec, const RunOptions& run) {
    validate(spec);
    switch (spec.family) {
        case Family::Linear: return solve_linear_first_order(spec, run);
        case Family::Separable: return solve_separable(spec, run);
        case Family::Bernoulli: return solve_bernoulli(spec, run);
        case Family::Riccati: return solve_riccati(spec, run);
        case Family::MixedTT: return integrate_reduced_in_t(reduce_mixed_tt(spec), spec, run);
        case Family::FType: return integrate_reduced_in_t(reduce_ftype(spec), spec, run);
        case Family::GeneralBU:
            return integrate_reduced_in_t(reduce_general_bu(spec), spec, run);
        case Family::MixedXT: return integrate_reduced_in_x(reduce_mixed_xt(spec), spec, run);
    }
    throw ValidationError("unknown family");
}

}  // namespace charode
