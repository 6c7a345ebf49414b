#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "charode/expr.hpp"

using namespace charode;

TEST_CASE("parse basic structure") {
    Expr e = parse_expr("x + t");
    Expr ref = Expr::add(Expr::variable(Var::X), Expr::variable(Var::T));
    CHECK(e.equals(ref));
}

TEST_CASE("power binds tighter than addition") {
    Expr e = parse_expr("x+t^2");
    Env env = Env::xt(2.0, 3.0);
    CHECK(e.eval(env) == doctest::Approx(11.0).epsilon(1e-14));  // not (x+t)^2 = 25
}

TEST_CASE("power is right-associative and beats unary minus") {
    CHECK(parse_expr("x^t^2").eval(Env::xt(2.0, 3.0)) == doctest::Approx(512.0));  // 2^(3^2)
    CHECK(parse_expr("-t^2").eval(Env::xt(0.0, 2.0)) == doctest::Approx(-4.0));
    CHECK(parse_expr("2^-t").eval(Env::xt(0.0, 1.0)) == doctest::Approx(0.5));
}

TEST_CASE("numeric evaluation examples") {
    CHECK(parse_expr("-t+1-exp(-t)").eval(Env::xt(0.0, 1.0)) ==
          doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
    CHECK(parse_expr("x*exp(t)").eval(Env::xt(1.0, 1.0)) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(parse_expr("u^2+1").eval(Env::u(0.0)) == 1.0);
    CHECK(parse_expr("atan(u)").eval(Env::u(1.0)) == doctest::Approx(std::atan(1.0)));
    CHECK(parse_expr("1.5e2 + .5").eval(Env{}) == doctest::Approx(150.5));
}

TEST_CASE("substitute composes trees textually") {
    Expr e = parse_expr("s + 2*u");
    Expr r = parse_expr("t+x");
    CHECK(e.substitute(Var::U, r).equals(parse_expr("s + 2*(t+x)")));

    Expr zero = parse_expr("u^2").substitute(Var::U, parse_expr("0"));
    CHECK(zero.eval(Env{}) == 0.0);

    // substitution does not evaluate
    Expr kept = parse_expr("u+u").substitute(Var::U, parse_expr("1+1"));
    CHECK(kept.equals(parse_expr("(1+1)+(1+1)")));
}

TEST_CASE("free_vars") {
    CHECK(parse_expr("x+t").free_vars() == std::set<Var>{Var::X, Var::T});
    CHECK(parse_expr("3.5").free_vars().empty());
    CHECK(parse_expr("u^2*(x+t)").free_vars() == std::set<Var>{Var::U, Var::X, Var::T});
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x"), ParseError);
    CHECK_THROWS_AS(parse_expr("x + y"), ParseError);    // unknown variable
    CHECK_THROWS_AS(parse_expr("foo(x)"), ParseError);   // unknown function
    try {
        parse_expr("x + y");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(parse_expr("x").eval(Env{}), EvalError);       // unbound
    CHECK_THROWS_AS(parse_expr("log(t)").eval(Env::xt(0, -1.0)), EvalError);
    CHECK_THROWS_AS(parse_expr("1/t").eval(Env::xt(0, 0.0)), EvalError);
    CHECK_THROWS_AS(parse_expr("t^0.5").eval(Env::xt(0, -2.0)), EvalError);
    CHECK(parse_expr("t^3").eval(Env::xt(0, -2.0)) == doctest::Approx(-8.0));
    CHECK_THROWS_AS(parse_expr("sqrt(t)").eval(Env::xt(0, -1.0)), EvalError);
}

namespace {

Expr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
    std::uniform_real_distribution<double> cdist(-4.0, 4.0);
    std::uniform_int_distribution<int> vdist(0, 3);
    switch (pick(rng)) {
        case 0: return Expr::constant(std::fabs(std::round(cdist(rng) * 16.0)) / 16.0);
        case 1: return Expr::variable(static_cast<Var>(vdist(rng)));
        case 2: return Expr::neg(random_tree(rng, depth - 1));
        case 3: return Expr::add(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 4: return Expr::sub(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 5: return Expr::mul(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 6: return Expr::div(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 7: return Expr::pow(random_tree(rng, depth - 1), Expr::constant(vdist(rng)));
        case 8: {
            const char* fns[6] = {"sin", "cos", "exp", "atan", "abs", "tan"};
            std::uniform_int_distribution<int> fdist(0, 5);
            std::string src = std::string(fns[fdist(rng)]) + "(s)";
            return parse_expr(src).substitute(Var::S, random_tree(rng, depth - 1));
        }
        default: return Expr::variable(static_cast<Var>(vdist(rng)));
    }
}

}  // namespace

TEST_CASE("round trip: parse(print(e)) is structurally equal") {
    std::mt19937 rng(20260810u);
    int checked = 0;
    for (int k = 0; k < 400; ++k) {
        Expr e = random_tree(rng, 4);
        Expr back = parse_expr(e.to_string());
        CHECK(back.equals(e));
        // printing is a fixed point after one round
        CHECK(parse_expr(back.to_string()).equals(back));
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("substitution commutes with evaluation") {
    std::mt19937 rng(987654u);
    std::uniform_real_distribution<double> vals(-2.0, 2.0);
    int successes = 0;
    for (int k = 0; k < 600 && successes < 200; ++k) {
        Expr e = random_tree(rng, 3);
        Expr r = random_tree(rng, 2);
        Env env;
        env.bind(Var::X, vals(rng)).bind(Var::T, vals(rng)).bind(Var::S, vals(rng));
        env.bind(Var::U, vals(rng));
        try {
            const double rv = r.eval(env);
            Env env2 = env;
            env2.bind(Var::U, rv);
            const double lhs = e.substitute(Var::U, r).eval(env);
            const double rhs = e.eval(env2);
            if (std::isfinite(lhs) && std::isfinite(rhs)) {
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
                ++successes;
            }
        } catch (const EvalError&) {
            // domain error for this sample; skip
        }
    }
    CHECK(successes >= 200);
}

TEST_CASE("evaluation is deterministic") {
    Expr e = parse_expr("sin(x)*exp(t)/(1+u^2)+sqrt(abs(s))");
    Env env;
    env.bind(Var::X, 0.3).bind(Var::T, 0.7).bind(Var::U, -1.1).bind(Var::S, 2.2);
    const double a = e.eval(env), b = e.eval(env);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}
