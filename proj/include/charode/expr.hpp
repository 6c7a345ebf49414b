#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace charode {

/// Variables an expression may reference. `s` is the integration dummy;
/// it is only bound internally by the integrators.
enum class Var : int { X = 0, T = 1, U = 2, S = 3 };

const char* var_name(Var v);

/// Partial binding of the four variables. Evaluating an expression whose
/// free variables are not all bound is an error, never a default.
struct Env {
    std::array<std::optional<double>, 4> vals;

    Env& bind(Var v, double value) {
        vals[static_cast<int>(v)] = value;
        return *this;
    }
    std::optional<double> get(Var v) const { return vals[static_cast<int>(v)]; }

    static Env xt(double x, double t) { return Env{}.bind(Var::X, x).bind(Var::T, t); }
    static Env xts(double x, double t) {
        return Env{}.bind(Var::X, x).bind(Var::T, t).bind(Var::S, t);
    }
    static Env u(double u) { return Env{}.bind(Var::U, u); }
};

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t offset);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Evaluation failure (unbound variable or domain error), carrying the byte
/// offset of the node in the original source when available.
class EvalError : public std::runtime_error {
  public:
    EvalError(const std::string& msg, std::size_t offset);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

namespace detail {
struct ExprNode;
}

/// Immutable arithmetic expression over {x, t, u, s}.
///
/// Trees are immutable after construction and share subtrees freely, so Expr
/// values are cheap to copy and safe to evaluate concurrently.
class Expr {
  public:
    Expr() = default;  // empty; only assignable

    bool empty() const { return node_ == nullptr; }

    double eval(const Env& env) const;
    std::set<Var> free_vars() const;
    Expr substitute(Var v, const Expr& replacement) const;
    std::string to_string() const;

    /// Structural equality (same tree shape, bit-identical constants).
    bool equals(const Expr& other) const;

    static Expr constant(double c);
    static Expr variable(Var v);
    static Expr neg(const Expr& e);
    static Expr add(const Expr& a, const Expr& b);
    static Expr sub(const Expr& a, const Expr& b);
    static Expr mul(const Expr& a, const Expr& b);
    static Expr div(const Expr& a, const Expr& b);
    static Expr pow(const Expr& a, const Expr& b);

  private:
    friend Expr parse_expr(const std::string&);
    explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::ExprNode> node_;
};

/// Parse `src` with precedence ^ > unary- > * / > + - and right-associative ^.
Expr parse_expr(const std::string& src);

/// Power with the artifact's domain rule: a negative base requires an
/// integer exponent, otherwise the evaluation is a domain error.
double checked_pow(double base, double exponent);

}  // namespace charode
