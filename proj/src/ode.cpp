#include "charode/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace charode::ode {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Ok: return "ok";
        case Outcome::BlowUp: return "blow_up";
        case Outcome::StepUnderflow: return "step_underflow";
        case Outcome::NonFiniteRhs: return "non_finite_rhs";
        case Outcome::GuardStop: return "guard_stop";
        case Outcome::MaxSteps: return "max_steps";
    }
    return "?";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th- and embedded 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<double, kMaxDim>;

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace

IntegrationResult integrate(const OdeSystem& sys, std::span<const double> y0, double t0,
                            double t1, double tol, std::span<const double> sample_at,
                            const IntegrateOptions& opts) {
    const int d = sys.dim;
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("ode dimension out of range");
    if (static_cast<int>(y0.size()) != d) throw std::invalid_argument("y0 size mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    for (std::size_t i = 0; i < sample_at.size(); ++i) {
        if (sample_at[i] < lo - 1e-14 || sample_at[i] > hi + 1e-14)
            throw std::invalid_argument("sample time outside integration interval");
        if (i > 0 && dir * (sample_at[i] - sample_at[i - 1]) <= 0.0)
            throw std::invalid_argument("sample times not sorted in integration direction");
    }

    IntegrationResult res;
    res.final_state.assign(y0.begin(), y0.end());
    res.last_t = t0;

    State y{}, ynew{}, k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ytmp{};
    std::copy(y0.begin(), y0.end(), y.begin());

    std::size_t next_sample = 0;
    auto emit_samples_at = [&](double t) {
        while (next_sample < sample_at.size() &&
               std::fabs(sample_at[next_sample] - t) <= 1e-13 * (1.0 + std::fabs(t))) {
            res.samples.push_back({sample_at[next_sample],
                                   std::vector<double>(y.begin(), y.begin() + d)});
            ++next_sample;
        }
    };

    double t = t0;
    emit_samples_at(t);

    if (t0 == t1) {
        res.final_state.assign(y.begin(), y.begin() + d);
        return res;
    }

    auto eval = [&](double tt, const State& yy, State& out) {
        sys.rhs(tt, std::span<const double>(yy.data(), d), std::span<double>(out.data(), d));
    };

    eval(t, y, k1);
    if (!all_finite(std::span<const double>(k1.data(), d))) {
        res.outcome = Outcome::NonFiniteRhs;
        return res;
    }

    // initial step: conservative guess from the first derivative magnitude
    double span_len = std::fabs(t1 - t0);
    double h = span_len;
    {
        double dn = inf_norm(std::span<const double>(k1.data(), d));
        double yn = inf_norm(std::span<const double>(y.data(), d));
        double scale = (dn > 1e-12) ? (1.0 + yn) / dn : span_len;
        h = std::min({span_len, 0.1 * scale, span_len * 0.1 + 1e-8});
        h = std::max(h, 1e-10 * span_len);
    }

    const double safe = 0.9, beta = 0.04, expo1 = 0.25 - beta * 0.75;
    const double facc1 = 5.0, facc2 = 0.1;  // clamp of h_old/h_new
    double facold = 1e-4;
    bool rejected = false;

    while (dir * (t1 - t) > 0.0) {
        if (res.steps + res.rejected > opts.max_steps) {
            res.outcome = Outcome::MaxSteps;
            break;
        }
        const double hmin = 16.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, std::fabs(t));
        if (h < hmin) {
            res.outcome = Outcome::StepUnderflow;
            break;
        }
        // land exactly on the next sample time / endpoint
        double stop = t1;
        if (next_sample < sample_at.size() && dir * (sample_at[next_sample] - stop) < 0.0)
            stop = sample_at[next_sample];
        double h_eff = std::min(h, dir * (stop - t));
        bool hit_stop = (h_eff >= dir * (stop - t) - 1e-30);
        if (hit_stop) h_eff = dir * (stop - t);
        const double hs = dir * h_eff;  // signed step

        for (int i = 0; i < d; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
        eval(t + c2 * hs, ytmp, k2);
        for (int i = 0; i < d; ++i) ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        eval(t + c3 * hs, ytmp, k3);
        for (int i = 0; i < d; ++i)
            ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        eval(t + c4 * hs, ytmp, k4);
        for (int i = 0; i < d; ++i)
            ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        eval(t + c5 * hs, ytmp, k5);
        for (int i = 0; i < d; ++i)
            ytmp[i] = y[i] +
                      hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        eval(t + hs, ytmp, k6);
        for (int i = 0; i < d; ++i)
            ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        eval(t + hs, ynew, k7);  // FSAL stage

        bool finite = all_finite(std::span<const double>(ynew.data(), d)) &&
                      all_finite(std::span<const double>(k7.data(), d));
        double err = 0.0;
        if (finite) {
            for (int i = 0; i < d; ++i) {
                double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                 e7 * k7[i]);
                double sc = tol + tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
                double q = e / sc;
                err += q * q;
            }
            // error per unit step, so the accumulated error stays commensurate
            // with tol over the whole interval
            err = std::sqrt(err / d) / std::max(h_eff, 1e-300);
        } else {
            err = 2.0;  // treat as a rejected step and shrink
        }

        if (!finite && h_eff <= hmin * 4.0) {
            res.outcome = Outcome::NonFiniteRhs;
            break;
        }

        if (err <= 1.0) {
            // accepted
            facold = std::max(err, 1e-4);
            t = (hit_stop) ? stop : t + hs;
            std::copy(ynew.begin(), ynew.begin() + d, y.begin());
            std::copy(k7.begin(), k7.begin() + d, k1.begin());
            ++res.steps;
            res.max_est_error = std::max(res.max_est_error, err * h_eff * tol);
            if (inf_norm(std::span<const double>(y.data(), d)) > opts.blow_up_cap) {
                res.outcome = Outcome::BlowUp;
                res.last_t = t;
                res.final_state.assign(y.begin(), y.begin() + d);
                return res;
            }
            if (opts.guard && !opts.guard(t, std::span<const double>(y.data(), d))) {
                res.outcome = Outcome::GuardStop;
                res.last_t = t;
                res.final_state.assign(y.begin(), y.begin() + d);
                return res;
            }
            emit_samples_at(t);
            double fac11 = std::pow(err, expo1);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(facc2, std::min(facc1, fac / safe));
            double hnew = h_eff / fac;
            if (rejected) hnew = std::min(hnew, h_eff);
            h = hnew;
            rejected = false;
        } else {
            double fac11 = std::pow(err, expo1);
            h = h_eff / std::min(facc1, fac11 / safe);
            rejected = true;
            ++res.rejected;
        }
    }

    res.last_t = t;
    res.final_state.assign(y.begin(), y.begin() + d);
    return res;
}

std::vector<double> rk4_fixed(const OdeSystem& sys, std::span<const double> y0, double t0,
                              double t1, long n_steps) {
    const int d = sys.dim;
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("ode dimension out of range");
    if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
    State y{}, k1{}, k2{}, k3{}, k4{}, ytmp{};
    std::copy(y0.begin(), y0.end(), y.begin());
    const double h = (t1 - t0) / static_cast<double>(n_steps);
    auto eval = [&](double tt, const State& yy, State& out) {
        sys.rhs(tt, std::span<const double>(yy.data(), d), std::span<double>(out.data(), d));
    };
    double t = t0;
    for (long n = 0; n < n_steps; ++n) {
        eval(t, y, k1);
        for (int i = 0; i < d; ++i) ytmp[i] = y[i] + 0.5 * h * k1[i];
        eval(t + 0.5 * h, ytmp, k2);
        for (int i = 0; i < d; ++i) ytmp[i] = y[i] + 0.5 * h * k2[i];
        eval(t + 0.5 * h, ytmp, k3);
        for (int i = 0; i < d; ++i) ytmp[i] = y[i] + h * k3[i];
        eval(t + h, ytmp, k4);
        for (int i = 0; i < d; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + h * static_cast<double>(n + 1);
    }
    return std::vector<double>(y.begin(), y.begin() + d);
}

namespace {

double simpson(double fa, double fm, double fb, double h) { return (fa + 4.0 * fm + fb) * h / 6.0; }

double simpson_adaptive(const std::function<double(double)>& f, double a, double m, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth) {
    if (depth > 60) throw QuadratureError("quadrature subdivision limit reached");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw QuadratureError("non-finite integrand value");
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_adaptive(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_adaptive(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double quadrature(const std::function<double(double)>& f, double s0, double s1, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (s0 == s1) return 0.0;
    const double a = s0, b = s1;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw QuadratureError("non-finite integrand value");
    const double whole = simpson(fa, fm, fb, b - a);
    return simpson_adaptive(f, a, m, b, fa, fm, fb, whole, tol, 0);
}

namespace {

// K15 abscissae (positive half) and weights; rows 0..3 carry the embedded G7.
constexpr double kK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double gk15_panel(const std::function<double(double)>& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double fk = 0.0, fg = 0.0;
    const double f0 = f(mid);
    if (!std::isfinite(f0)) throw QuadratureError("non-finite integrand value");
    fk = kK15Weights[7] * f0;
    fg = kG7Weights[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kK15Nodes[i];
        const double fl = f(mid - dx), fr = f(mid + dx);
        if (!std::isfinite(fl) || !std::isfinite(fr))
            throw QuadratureError("non-finite integrand value");
        fk += kK15Weights[i] * (fl + fr);
        if (i % 2 == 1) fg += kG7Weights[i / 2] * (fl + fr);
    }
    err = std::fabs((fk - fg) * half);
    return fk * half;
}

double gk15_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                     int depth) {
    if (depth > 60) throw QuadratureError("quadrature subdivision limit reached");
    double err = 0.0;
    const double v = gk15_panel(f, a, b, err);
    if (err <= tol) return v;
    const double m = 0.5 * (a + b);
    return gk15_adaptive(f, a, m, 0.5 * tol, depth + 1) +
           gk15_adaptive(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

double quadrature_kronrod(const std::function<double(double)>& f, double s0, double s1,
                          double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (s0 == s1) return 0.0;
    return gk15_adaptive(f, s0, s1, tol, 0);
}

}  // namespace charode::ode
