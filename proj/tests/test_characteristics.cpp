#include <doctest.h>

#include <cmath>
#include <vector>

#include "charode/characteristics.hpp"

using namespace charode;
namespace chars = charode::characteristics;

namespace {

chars::TraceOptions opts() {
    chars::TraceOptions o;
    o.tol = 1e-10;
    return o;
}

}  // namespace

TEST_CASE("forward trace of dx/dt = x reproduces x0 e^t") {
    chars::TraceCoeffs c{parse_expr("x"), parse_expr("1"), parse_expr("x+t")};
    const double samples[2] = {0.5, 1.0};
    auto path = chars::trace_forward(c, 1.0, 1.0, opts(), samples);
    REQUIRE(path.samples.size() == 2);
    CHECK(std::fabs(path.samples.back().x - std::exp(1.0)) <= 1e-9);
    // Ialpha with alpha = 1 is t itself
    CHECK(path.samples.back().i_alpha == doctest::Approx(1.0).epsilon(1e-10));
    // Ib = x0 (e^t - 1) + t^2/2 for b = x + t
    CHECK(std::fabs(path.samples.back().i_b - (std::exp(1.0) - 1.0 + 0.5)) <= 1e-9);
    // J = int_0^t (x0 e^s + s) e^{-s} ds = x0 t + 1 - (1 + t) e^{-t}
    const double j_exact = 1.0 + 1.0 - 2.0 * std::exp(-1.0);
    CHECK(std::fabs(path.samples.back().j_src - j_exact) <= 1e-9);
}

TEST_CASE("straight and frozen characteristics") {
    chars::TraceCoeffs c1{parse_expr("1"), parse_expr("0"), parse_expr("0")};
    const double s2[1] = {2.0};
    auto p1 = chars::trace_forward(c1, 0.0, 2.0, opts(), s2);
    CHECK(p1.samples.back().x == doctest::Approx(2.0).epsilon(1e-12));

    chars::TraceCoeffs c0{parse_expr("0"), parse_expr("0"), parse_expr("0")};
    const double s3[1] = {1.7};
    auto p0 = chars::trace_forward(c0, 5.0, 1.7, opts(), s3);
    CHECK(p0.samples.back().x == 5.0);
}

TEST_CASE("backward trace recovers the foot point") {
    Expr a = parse_expr("x");
    CHECK(std::fabs(chars::trace_backward(a, std::exp(1.0), 1.0, opts()) - 1.0) <= 1e-9);
    Expr one = parse_expr("1");
    CHECK(chars::trace_backward(one, 3.0, 2.0, opts()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(chars::trace_backward(a, 4.2, 0.0, opts()) == 4.2);
}

TEST_CASE("round trip backward then forward returns to the node") {
    Expr a = parse_expr("x*(1+0.3*sin(t))");
    chars::TraceCoeffs c{a, parse_expr("0"), parse_expr("0")};
    for (double x : {0.5, 1.0, 1.7}) {
        for (double t : {0.3, 0.9}) {
            const double x0 = chars::trace_backward(a, x, t, opts());
            const double st[1] = {t};
            auto path = chars::trace_forward(c, x0, t, opts(), st);
            CHECK(std::fabs(path.samples.back().x - x) <= 1e-8);
        }
    }
}

TEST_CASE("path integral through a node equals the forward accumulation") {
    Expr a = parse_expr("x");
    Expr g = parse_expr("x+t");
    // through (e, 1) the foot is 1, so the integral is x0(e - 1) + 1/2
    auto ni = chars::path_integral_with_foot(g, a, std::exp(1.0), 1.0, opts());
    CHECK(std::fabs(ni.value - (std::exp(1.0) - 1.0 + 0.5)) <= 1e-9);
    CHECK(std::fabs(ni.x0 - 1.0) <= 1e-9);
    CHECK(chars::path_integral(g, a, std::exp(1.0), 0.0, opts()) == 0.0);
}

TEST_CASE("differentiating Ialpha along samples recovers the integrand") {
    Expr a = parse_expr("x");
    Expr alpha = parse_expr("x*t+1");
    chars::TraceCoeffs c{a, alpha, parse_expr("0")};
    std::vector<double> ts;
    const double dt = 1e-2;
    for (int i = 0; i <= 100; ++i) ts.push_back(i * dt);
    auto path = chars::trace_forward(c, 0.7, 1.0, opts(), ts);
    REQUIRE(path.samples.size() == ts.size());
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < path.samples.size(); ++i) {
        const auto &lo = path.samples[i - 1], &mid = path.samples[i], &hi = path.samples[i + 1];
        const double dIa = (hi.i_alpha - lo.i_alpha) / (2.0 * dt);
        const double want = alpha.eval(Env::xt(mid.x, mid.t));
        worst = std::max(worst, std::fabs(dIa - want));
    }
    CHECK(worst <= 5e-4);  // O(dt^2) with a modest constant
}

TEST_CASE("bounds guard aborts a runaway trace") {
    chars::TraceCoeffs c{parse_expr("x^2"), parse_expr("0"), parse_expr("0")};
    auto o = chars::trace_options_for_domain(0.0, 2.0, 1e-10, 1e12, 10.0);
    const double st[1] = {1.0};
    CHECK_THROWS_AS(chars::trace_forward(c, 2.0, 1.0, o, st), chars::TraceError);
}
