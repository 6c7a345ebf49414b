#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "charode/expr.hpp"

namespace charode {

/// The eight equation families the engine reduces and solves.
enum class Family {
    Linear,     // u_t + a u_x - alpha u = b
    Separable,  // u_t + a u_x = f(u) b
    Bernoulli,  // u_t + a u_x = b u + alpha u^n
    Riccati,    // u_t + a u_x = b u + alpha + beta u^2
    MixedTT,    // u_tt + a u_xt = b + (u_t + a u_x) f(u)
    MixedXT,    // u_xt + a u_xx = b + (a u_x + u_t) f(u)
    FType,      // f'(u_t)(u_tt + a u_xt) = B + A(u)(u_t + a u_x)
    GeneralBU,  // u_tt + a u_xt + b(u) u_t (u_t + a u_x) = alpha e^{-int b} + G (u_t + a u_x)
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool is_second_order(Family f);

struct LinearCoeffs {
    Expr a, alpha, b_xt, phi;
};

struct SeparableCoeffs {
    Expr a, f, b_xt, phi;
};

struct BernoulliCoeffs {
    Expr a, b_xt, alpha, phi;
    double n = 2.0;  // exponent, n != 1
};

struct RiccatiCoeffs {
    Expr a, b_xt, alpha, beta, u1, phi;
};

struct MixedTTCoeffs {
    Expr a, b_xt, f, phi, psi;  // psi = u_t(x, 0)
    Expr h0;                    // optional anchor H(x,0) as a function of the foot point
};

struct MixedXTCoeffs {
    Expr a, b_xt, f, g, h;  // g = u(x_min, t), h = u_x(x_min, t)
    Expr h0;
};

struct FTypeCoeffs {
    Expr a, big_b_xt, a_u, f, phi, psi;
    double f_lo = -1.0, f_hi = 1.0;  // bracket on which f is strictly monotone
    Expr h0;
};

struct GeneralBUCoeffs {
    Expr a, alpha_xt, g_u, big_b_u, phi, psi;  // big_b_u = antiderivative of b(u)
    Expr h0;
};

using FamilyCoeffs = std::variant<LinearCoeffs, SeparableCoeffs, BernoulliCoeffs, RiccatiCoeffs,
                                  MixedTTCoeffs, MixedXTCoeffs, FTypeCoeffs, GeneralBUCoeffs>;

struct Domain {
    double x_min = 0.0, x_max = 1.0, t_max = 1.0;
};

struct GridSize {
    int nx = 2, nt = 2;
};

struct SolverSettings {
    double tol = 1e-10;
    double blow_up_cap = 1e12;
    double consistency_tol = 1e-6;      // scaled by (1 + |C|) at check time
    double u_ref = 0.0;                 // reference point of the K antiderivative
    double max_failure_fraction = 0.1;  // cmd_solve exits 2 above this
    double bounds_margin_factor = 10.0;
};

struct ProblemSpec {
    Family family = Family::Linear;
    FamilyCoeffs coeffs;
    Domain domain;
    GridSize grid;
    SolverSettings solver;
};

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Structural checks: grid sizes, t_max, Bernoulli n != 1, coefficient
/// expressions present and referencing only the variables their slot allows,
/// FType monotonicity by 64-point sampling. Throws ValidationError.
void validate(const ProblemSpec& spec);

std::vector<double> grid_x(const ProblemSpec& spec);
std::vector<double> grid_t(const ProblemSpec& spec);

enum class NodeStatus : unsigned char { Ok, BlowUp, TraceFailed };

const char* node_status_name(NodeStatus s);

/// Rectangular solution grid, row-major with x as the slow index.
struct SolutionGrid {
    std::vector<double> xs, ts;
    std::vector<double> u;            // size xs.size() * ts.size()
    std::vector<NodeStatus> status;   // same layout
    long total_steps = 0;             // accepted integrator steps, all nodes

    std::size_t idx(std::size_t i, std::size_t j) const { return i * ts.size() + j; }
    double& at(std::size_t i, std::size_t j) { return u[idx(i, j)]; }
    double at(std::size_t i, std::size_t j) const { return u[idx(i, j)]; }
    NodeStatus status_at(std::size_t i, std::size_t j) const { return status[idx(i, j)]; }
    bool ok(std::size_t i, std::size_t j) const {
        return status[idx(i, j)] == NodeStatus::Ok;
    }
    long count(NodeStatus s) const;
};

SolutionGrid make_grid(const ProblemSpec& spec);

}  // namespace charode
