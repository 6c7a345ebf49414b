#include "charode/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <vector>

namespace charode {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "x";
        case Var::T: return "t";
        case Var::U: return "u";
        case Var::S: return "s";
    }
    return "?";
}

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

EvalError::EvalError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

namespace detail {

enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Exp, Log, Sin, Cos, Tan, Atan, Sqrt, Abs };

struct ExprNode {
    Kind kind;
    double value = 0.0;          // Constant
    Var var = Var::X;            // Variable
    Func func = Func::Exp;       // Call
    std::shared_ptr<const ExprNode> a, b;
    std::size_t offset = 0;      // byte offset in original source, 0 for built trees
};

using NodePtr = std::shared_ptr<const ExprNode>;

const char* func_name(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Atan: return "atan";
        case Func::Sqrt: return "sqrt";
        case Func::Abs: return "abs";
    }
    return "?";
}

}  // namespace detail

using detail::ExprNode;
using detail::Func;
using detail::Kind;
using detail::NodePtr;

double checked_pow(double base, double exponent) {
    if (base < 0.0) {
        if (std::nearbyint(exponent) != exponent)
            throw EvalError("negative base with non-integer exponent", 0);
        return std::pow(base, exponent);
    }
    if (base == 0.0 && exponent < 0.0) throw EvalError("zero base with negative exponent", 0);
    return std::pow(base, exponent);
}

namespace {

std::shared_ptr<ExprNode> make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double eval_node(const ExprNode& n, const Env& env) {
    switch (n.kind) {
        case Kind::Constant: return n.value;
        case Kind::Variable: {
            auto v = env.get(n.var);
            if (!v)
                throw EvalError(std::string("unbound variable '") + var_name(n.var) + "'",
                                n.offset);
            return *v;
        }
        case Kind::Neg: return -eval_node(*n.a, env);
        case Kind::Add: return eval_node(*n.a, env) + eval_node(*n.b, env);
        case Kind::Sub: return eval_node(*n.a, env) - eval_node(*n.b, env);
        case Kind::Mul: return eval_node(*n.a, env) * eval_node(*n.b, env);
        case Kind::Div: {
            double num = eval_node(*n.a, env), den = eval_node(*n.b, env);
            if (den == 0.0) throw EvalError("division by zero", n.offset);
            return num / den;
        }
        case Kind::Pow: {
            double base = eval_node(*n.a, env), expo = eval_node(*n.b, env);
            try {
                return checked_pow(base, expo);
            } catch (const EvalError& e) {
                throw EvalError(e.what(), n.offset);
            }
        }
        case Kind::Call: {
            double arg = eval_node(*n.a, env);
            switch (n.func) {
                case Func::Exp: return std::exp(arg);
                case Func::Log:
                    if (arg <= 0.0) throw EvalError("log of non-positive value", n.offset);
                    return std::log(arg);
                case Func::Sin: return std::sin(arg);
                case Func::Cos: return std::cos(arg);
                case Func::Tan: return std::tan(arg);
                case Func::Atan: return std::atan(arg);
                case Func::Sqrt:
                    if (arg < 0.0) throw EvalError("sqrt of negative value", n.offset);
                    return std::sqrt(arg);
                case Func::Abs: return std::fabs(arg);
            }
            throw EvalError("unknown function", n.offset);
        }
    }
    throw EvalError("corrupt expression node", n.offset);
}

void collect_vars(const ExprNode& n, std::set<Var>& out) {
    if (n.kind == Kind::Variable) out.insert(n.var);
    if (n.a) collect_vars(*n.a, out);
    if (n.b) collect_vars(*n.b, out);
}

NodePtr substitute_node(const NodePtr& n, Var v, const NodePtr& repl) {
    if (!n) return nullptr;
    if (n->kind == Kind::Variable && n->var == v) return repl;
    NodePtr a = substitute_node(n->a, v, repl);
    NodePtr b = substitute_node(n->b, v, repl);
    if (a == n->a && b == n->b) return n;  // untouched subtree, share it
    auto m = std::make_shared<ExprNode>(*n);
    m->a = std::move(a);
    m->b = std::move(b);
    return m;
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Constant: {
            // bit comparison so that -0.0 and 0.0 stay distinguishable
            double x = a->value, y = b->value;
            return std::memcmp(&x, &y, sizeof x) == 0;
        }
        case Kind::Variable: return a->var == b->var;
        case Kind::Call:
            if (a->func != b->func) return false;
            break;
        default: break;
    }
    return equal_nodes(a->a, b->a) && equal_nodes(a->b, b->b);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Precedence levels for printing: + - (1), * / (2), unary - (3), ^ (4).
int node_prec(const ExprNode& n) {
    switch (n.kind) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

void print_node(const ExprNode& n, std::ostringstream& out, int parent_prec) {
    int prec = node_prec(n);
    bool parens = prec < parent_prec;
    if (parens) out << '(';
    switch (n.kind) {
        case Kind::Constant:
            if (n.value < 0.0 || std::signbit(n.value)) {
                out << '(' << format_double(n.value) << ')';
            } else {
                out << format_double(n.value);
            }
            break;
        case Kind::Variable: out << var_name(n.var); break;
        case Kind::Neg:
            out << '-';
            print_node(*n.a, out, prec + 1);
            break;
        case Kind::Add:
            print_node(*n.a, out, prec);
            out << '+';
            print_node(*n.b, out, prec + 1);
            break;
        case Kind::Sub:
            print_node(*n.a, out, prec);
            out << '-';
            print_node(*n.b, out, prec + 1);
            break;
        case Kind::Mul:
            print_node(*n.a, out, prec);
            out << '*';
            print_node(*n.b, out, prec + 1);
            break;
        case Kind::Div:
            print_node(*n.a, out, prec);
            out << '/';
            print_node(*n.b, out, prec + 1);
            break;
        case Kind::Pow:
            print_node(*n.a, out, prec + 1);  // left operand of ^ needs parens if not atomic
            out << '^';
            print_node(*n.b, out, prec);      // right-associative
            break;
        case Kind::Call:
            out << detail::func_name(n.func) << '(';
            print_node(*n.a, out, 0);
            out << ')';
            break;
    }
    if (parens) out << ')';
}

class Parser {
  public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr parse() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("empty expression", 0);
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ < src_.size())
            throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
        return e;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr e = parse_term();
        for (;;) {
            std::size_t at = pos_;
            if (eat('+')) {
                auto n = make(Kind::Add, e, parse_term());
                n->offset = at;
                e = n;
            } else if (eat('-')) {
                auto n = make(Kind::Sub, e, parse_term());
                n->offset = at;
                e = n;
            } else {
                return e;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_unary();
        for (;;) {
            std::size_t at = pos_;
            if (eat('*')) {
                auto n = make(Kind::Mul, e, parse_unary());
                n->offset = at;
                e = n;
            } else if (eat('/')) {
                auto n = make(Kind::Div, e, parse_unary());
                n->offset = at;
                e = n;
            } else {
                return e;
            }
        }
    }

    NodePtr parse_unary() {
        std::size_t at = pos_;
        if (eat('-')) {
            auto n = make(Kind::Neg, parse_unary());
            n->offset = at;
            return n;
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        std::size_t at = pos_;
        if (eat('^')) {
            // right-associative; exponent may carry a unary minus
            auto n = make(Kind::Pow, base, parse_unary());
            n->offset = at;
            return n;
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", pos_);
        // strtod accepts a leading sign, but unary minus is handled upstream
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = make(Kind::Constant);
        n->value = v;
        n->offset = start;
        return n;
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (peek() == '(') {
            Func f;
            if (name == "exp") f = Func::Exp;
            else if (name == "log") f = Func::Log;
            else if (name == "sin") f = Func::Sin;
            else if (name == "cos") f = Func::Cos;
            else if (name == "tan") f = Func::Tan;
            else if (name == "atan") f = Func::Atan;
            else if (name == "sqrt") f = Func::Sqrt;
            else if (name == "abs") f = Func::Abs;
            else throw ParseError("unknown function '" + name + "'", start);
            eat('(');
            NodePtr arg = parse_sum();
            if (!eat(')')) throw ParseError("expected ')' after function argument", pos_);
            auto n = make(Kind::Call, arg);
            n->func = f;
            n->offset = start;
            return n;
        }
        Var v;
        if (name == "x") v = Var::X;
        else if (name == "t") v = Var::T;
        else if (name == "u") v = Var::U;
        else if (name == "s") v = Var::S;
        else throw ParseError("unknown variable '" + name + "'", start);
        auto n = make(Kind::Variable);
        n->var = v;
        n->offset = start;
        return n;
    }
};

}  // namespace

double Expr::eval(const Env& env) const {
    if (!node_) throw EvalError("empty expression", 0);
    return eval_node(*node_, env);
}

std::set<Var> Expr::free_vars() const {
    std::set<Var> out;
    if (node_) collect_vars(*node_, out);
    return out;
}

Expr Expr::substitute(Var v, const Expr& replacement) const {
    if (!node_) return *this;
    if (replacement.node_ == nullptr) throw std::invalid_argument("empty replacement");
    return Expr(substitute_node(node_, v, replacement.node_));
}

std::string Expr::to_string() const {
    if (!node_) return "";
    std::ostringstream out;
    print_node(*node_, out, 0);
    return out.str();
}

bool Expr::equals(const Expr& other) const { return equal_nodes(node_, other.node_); }

Expr Expr::constant(double c) {
    auto n = make(Kind::Constant);
    n->value = c;
    return Expr(n);
}

Expr Expr::variable(Var v) {
    auto n = make(Kind::Variable);
    n->var = v;
    return Expr(n);
}

Expr Expr::neg(const Expr& e) { return Expr(make(Kind::Neg, e.node_)); }
Expr Expr::add(const Expr& a, const Expr& b) { return Expr(make(Kind::Add, a.node_, b.node_)); }
Expr Expr::sub(const Expr& a, const Expr& b) { return Expr(make(Kind::Sub, a.node_, b.node_)); }
Expr Expr::mul(const Expr& a, const Expr& b) { return Expr(make(Kind::Mul, a.node_, b.node_)); }
Expr Expr::div(const Expr& a, const Expr& b) { return Expr(make(Kind::Div, a.node_, b.node_)); }
Expr Expr::pow(const Expr& a, const Expr& b) { return Expr(make(Kind::Pow, a.node_, b.node_)); }

Expr parse_expr(const std::string& src) {
    if (src.empty()) throw ParseError("empty expression", 0);
    Parser p(src);
    return Expr(p.parse());
}

}  // namespace charode
