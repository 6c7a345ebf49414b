#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "charode/expr.hpp"
#include "charode/ode.hpp"

namespace charode::characteristics {

/// Coefficients for an augmented characteristic trace. `a` drives the curve
/// dx/dt = a(x,t); `alpha` and `b` are the integrands accumulated alongside.
/// Unused integrands may be zero expressions.
struct TraceCoeffs {
    Expr a;
    Expr alpha;  // accumulated as Ialpha = int_0^t alpha(x(s),s) ds
    Expr b;      // accumulated as Ib = int_0^t b(x(s),s) ds and as the
                 // weighted source J = int_0^t b e^{-Ialpha} dtau
};

struct TraceOptions {
    double tol = 1e-10;
    double blow_up_cap = 1e12;
    // spatial bounds guard; traces leaving [x_lo, x_hi] abort
    double x_lo = -std::numeric_limits<double>::infinity();
    double x_hi = std::numeric_limits<double>::infinity();
};

/// Makes the default guard interval for a problem domain: the domain widened
/// by `margin_factor` times its width on both sides.
TraceOptions trace_options_for_domain(double x_min, double x_max, double tol,
                                      double blow_up_cap, double margin_factor = 10.0);

struct PathSample {
    double t;
    double x;
    double i_alpha;  // int_0^t alpha(x(s),s) ds
    double j_src;    // int_0^t b(x(tau),tau) e^{-i_alpha(tau)} dtau
    double i_b;      // int_0^t b(x(s),s) ds
};

struct CharacteristicPath {
    double x0 = 0.0;  // foot point, x at t = 0
    std::vector<PathSample> samples;
    long steps = 0;
};

class TraceError : public std::runtime_error {
  public:
    TraceError(ode::Outcome outcome, double reached_t);
    ode::Outcome outcome() const { return outcome_; }
    double reached_t() const { return reached_t_; }

  private:
    ode::Outcome outcome_;
    double reached_t_;
};

/// Trace the characteristic through (x0, 0) forward to t_end, accumulating
/// all three path integrals. `sample_at` must be ascending within [0, t_end].
CharacteristicPath trace_forward(const TraceCoeffs& coeffs, double x0, double t_end,
                                 const TraceOptions& opts, std::span<const double> sample_at);

/// Foot point of the characteristic through (x, t): integrate dx/ds = a
/// backward from s = t to s = 0.
double trace_backward(const Expr& a, double x, double t, const TraceOptions& opts);

/// int_0^t g(x(s), s) ds along the characteristic through (x, t), computed
/// with a single backward augmented trace.
double path_integral(const Expr& g, const Expr& a, double x, double t,
                     const TraceOptions& opts);

/// Same backward trace but returning both the integral and the foot point.
struct NodeIntegral {
    double value;  // int_0^t g along the characteristic
    double x0;     // foot point
};
NodeIntegral path_integral_with_foot(const Expr& g, const Expr& a, double x, double t,
                                     const TraceOptions& opts);

}  // namespace charode::characteristics
