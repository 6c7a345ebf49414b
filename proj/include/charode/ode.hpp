#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace charode::ode {

inline constexpr int kMaxDim = 8;

/// Autonomous-in-form right-hand side y' = f(t, y) for a small state vector.
/// The callback must be deterministic and side-effect free.
struct OdeSystem {
    int dim = 1;
    std::function<void(double t, std::span<const double> y, std::span<double> dy)> rhs;
};

enum class Outcome {
    Ok,
    BlowUp,         // |y|_inf exceeded the cap; last_t is the last reachable time
    StepUnderflow,  // stiffness or finite-time singularity
    NonFiniteRhs,
    GuardStop,      // caller-supplied guard rejected the trajectory
    MaxSteps,
};

const char* outcome_name(Outcome o);

struct IntegrateOptions {
    double blow_up_cap = 1e12;
    long max_steps = 2'000'000;
    /// Optional guard checked on every accepted step; returning false aborts
    /// with Outcome::GuardStop (used for spatial bounds on characteristics).
    std::function<bool(double t, std::span<const double> y)> guard;
};

struct Sample {
    double t;
    std::vector<double> y;
};

struct IntegrationResult {
    Outcome outcome = Outcome::Ok;
    double last_t = 0.0;             // equals t1 when outcome == Ok
    std::vector<double> final_state; // state at last_t
    std::vector<Sample> samples;     // exactly the reached entries of sample_at, in order
    long steps = 0;                  // accepted steps
    long rejected = 0;
    double max_est_error = 0.0;      // max accepted local error estimate (absolute scale)
};

/// Integrate with an embedded Dormand-Prince 4(5) pair under PI step-size
/// control. Backward integration when t1 < t0. `sample_at` must be sorted in
/// the direction of integration and contained in [min(t0,t1), max(t0,t1)];
/// steps are shortened to land on the sample times exactly.
IntegrationResult integrate(const OdeSystem& sys, std::span<const double> y0, double t0,
                            double t1, double tol, std::span<const double> sample_at,
                            const IntegrateOptions& opts = {});

/// Classic fixed-step RK4 over n_steps equal steps. Used as the low-tech
/// fallback and as a cross-check in the verification suites.
std::vector<double> rk4_fixed(const OdeSystem& sys, std::span<const double> y0, double t0,
                              double t1, long n_steps);

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Simpson with Richardson correction; absolute error target `tol`.
double quadrature(const std::function<double(double)>& f, double s0, double s1, double tol);

/// Adaptive Gauss-Kronrod G7/K15, the independent second route used by the
/// oracle cross-checks.
double quadrature_kronrod(const std::function<double(double)>& f, double s0, double s1,
                          double tol);

}  // namespace charode::ode
