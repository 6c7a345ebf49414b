#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "charode/problem.hpp"

namespace charode {

struct RunOptions {
    int threads = 1;
};

class RootFindError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BlowUpError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ReduceDirection { InT, InX };

/// Machine-readable description of the first-order equation a second-order
/// family reduces to along characteristics:
///
///   mixed_tt:    u_t = Hhat(x,t) + K(u) + C
///   mixed_xt:    u_x = Hhat(x,t) + K(u) + C
///   ftype:       f(u_t) = Hhat(x,t) + K(u) + C
///   general_bu:  u_t = (Hhat(x,t) + K(u) + C) e^{-bigB(u)}
///
/// Hhat is the source integral accumulated along the characteristic through
/// the node, anchored so Hhat(x,0) equals the optional H0(x) (zero by
/// default). K is the antiderivative of the u-coefficient from u_ref. The
/// single constant C is fitted from the data; delta_c is the spread of the
/// per-node constants and measures how well the data fit the ansatz.
struct ReducedODE {
    Family family = Family::MixedTT;
    ReduceDirection direction = ReduceDirection::InT;
    std::function<double(double x, double t)> h_hat;
    std::function<double(double u)> k_of_u;
    double c = 0.0;
    double delta_c = 0.0;
    double consistency_threshold = 0.0;
    bool consistent = true;
    /// per-node constants: (x_i, C_i) for reductions in t, (t_j, C_j) in x
    std::vector<std::pair<double, double>> c_table;
    /// du/d(t or x) at (x, t, u); throws on domain errors
    std::function<double(double x, double t, double u)> rhs;
};

// -- first-order families ---------------------------------------------------

SolutionGrid solve_linear_first_order(const ProblemSpec& spec, const RunOptions& run = {});
SolutionGrid solve_separable(const ProblemSpec& spec, const RunOptions& run = {});
SolutionGrid solve_bernoulli(const ProblemSpec& spec, const RunOptions& run = {});

/// Shift u = u1 + w turning the Riccati problem into a Bernoulli problem in w
/// with exponent 2, coefficient gamma = b + 2 beta u1 and data phi - u1(.,0).
ProblemSpec riccati_to_bernoulli(const ProblemSpec& spec);
SolutionGrid solve_riccati(const ProblemSpec& spec, const RunOptions& run = {});

// -- second-order families --------------------------------------------------

ReducedODE reduce_mixed_tt(const ProblemSpec& spec);
ReducedODE reduce_mixed_xt(const ProblemSpec& spec);
ReducedODE reduce_ftype(const ProblemSpec& spec);
ReducedODE reduce_general_bu(const ProblemSpec& spec);

/// Dispatch to the family's reducer (second-order families only).
ReducedODE reduce(const ProblemSpec& spec);

SolutionGrid integrate_reduced_in_t(const ReducedODE& red, const ProblemSpec& spec,
                                    const RunOptions& run = {});
SolutionGrid integrate_reduced_in_x(const ReducedODE& red, const ProblemSpec& spec,
                                    const RunOptions& run = {});

/// Solve y = f(p) for p on the bracket [p_lo, p_hi]. Verifies strict
/// monotonicity by sampling, then bisects and polishes with Newton steps
/// using a finite-difference derivative until |f(p) - y| <= 1e-12 (1 + |y|).
double invert_f(const Expr& f, double y, double p_lo, double p_hi);

/// Explicit solution of u' = H(t) u + lambda u^{n+1} via v = u^{-n}:
/// v(t) = e^{-n Phi(t)} (v0 - n lambda int_0^t e^{n Phi}), Phi = int_0^t H,
/// u = v^{-1/n}. lambda defaults to 1/n. Throws BlowUpError when v(t) <= 0.
double closed_form_power_law(const std::function<double(double)>& h_of_t, int n, double v0,
                             double t, double tol, std::optional<double> lambda = {});

/// Family dispatcher used by the CLI: first-order families solve directly,
/// second-order families reduce and integrate.
SolutionGrid solve(const ProblemSpec& spec, const RunOptions& run = {});

}  // namespace charode
