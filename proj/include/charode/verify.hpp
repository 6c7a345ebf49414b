#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charode/problem.hpp"

namespace charode::verify {

/// Closed-form solutions transcribed from the worked examples, each bound to
/// the problem it solves and to a singularity-free validity predicate.
enum class OracleId { Eq4, Eq7, Eq8, Eq10, Eq11, Eq12, Eq20Reduced, Prop92 };

const char* oracle_name(OracleId id);
std::optional<OracleId> oracle_from_name(const std::string& name);

struct Oracle {
    OracleId id;
    std::string name;
    ProblemSpec spec;  // canonical problem with its acceptance domain and grid
    std::function<double(double x, double t)> eval;
    std::function<bool(double x, double t)> valid;
    Domain study;  // singularity-free rectangle for residual/convergence studies
};

const Oracle& oracle(OracleId id);
std::vector<OracleId> all_oracles();

class OracleDomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed-form value at (x, t); throws OracleDomainError outside the
/// oracle's validity region.
double oracle_eval(OracleId id, double x, double t);

/// Matches a problem spec against the registry by family and structural
/// equality of the coefficient expressions. Returns the mismatching field
/// name in `why` when a candidate oracle is given but does not match.
std::optional<OracleId> match_oracle(const ProblemSpec& spec);
bool oracle_matches(OracleId id, const ProblemSpec& spec, std::string* why);

struct ResidualReport {
    double h_x = 0.0, h_t = 0.0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double worst_x = 0.0, worst_t = 0.0;
    long n_interior = 0;  // interior nodes with a full ok stencil
    int stencil_order = 2;
};

/// Pointwise defect of the grid under the family's first-order equation with
/// second-order central differences; edges and nodes without a complete ok
/// stencil are excluded.
ResidualReport residual_first_order(const SolutionGrid& grid, const ProblemSpec& spec);

/// Same for the second-order families (D_tt, D_xt, D_xx stencils).
ResidualReport residual_second_order(const SolutionGrid& grid, const ProblemSpec& spec);

/// Dispatches on the spec's family.
ResidualReport residual(const SolutionGrid& grid, const ProblemSpec& spec);

/// Samples the oracle's closed form onto its study rectangle at spacing h and
/// reports the residual of the oracle field itself. Validates the oracle
/// transcription independently of the solver: the values must satisfy the
/// PDE to O(h^2).
ResidualReport oracle_residual(OracleId id, double h);

struct ConvergencePoint {
    double h;
    double value;
};

/// Oracle-field residual at each spacing; with 2nd-order stencils successive
/// ratios sit near 4 and the fitted slope near 2.
std::vector<ConvergencePoint> convergence_order(OracleId id, std::span<const double> hs);

/// Least-squares slope of log(value) against log(h).
double fitted_slope(std::span<const ConvergencePoint> pts);

struct OracleComparison {
    double max_err = 0.0;
    double mean_err = 0.0;
    long n_compared = 0;
    long n_skipped = 0;  // nodes not ok or outside the validity region
};

/// Max |solver - oracle| over nodes that are solver-ok, oracle-valid and
/// satisfy the optional extra region predicate.
OracleComparison compare_with_oracle(const SolutionGrid& grid, OracleId id,
                                     const std::function<bool(double, double)>& extra_region = {});

}  // namespace charode::verify
