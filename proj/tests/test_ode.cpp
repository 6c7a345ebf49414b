#include <doctest.h>

#include <cmath>
#include <vector>

#include "charode/ode.hpp"

using namespace charode;

namespace {

ode::OdeSystem scalar(double (*f)(double, double)) {
    ode::OdeSystem sys;
    sys.dim = 1;
    sys.rhs = [f](double t, std::span<const double> y, std::span<double> dy) {
        dy[0] = f(t, y[0]);
    };
    return sys;
}

}  // namespace

TEST_CASE("exponential growth to machine-level accuracy") {
    auto sys = scalar(+[](double, double y) { return y; });
    const double y0[1] = {1.0};
    auto res = ode::integrate(sys, y0, 0.0, 1.0, 1e-10, {});
    REQUIRE(res.outcome == ode::Outcome::Ok);
    CHECK(std::fabs(res.final_state[0] - std::exp(1.0)) <= 1e-9);
}

TEST_CASE("constant solution is exact at every sample") {
    auto sys = scalar(+[](double, double) { return 0.0; });
    const double y0[1] = {3.25};
    const double samples[4] = {0.1, 0.25, 0.5, 0.9};
    auto res = ode::integrate(sys, y0, 0.0, 1.0, 1e-8, samples);
    REQUIRE(res.outcome == ode::Outcome::Ok);
    REQUIRE(res.samples.size() == 4);
    for (const auto& s : res.samples) CHECK(s.y[0] == 3.25);
    CHECK(res.final_state[0] == 3.25);
}

TEST_CASE("quadratic blow-up is reported near t = 1") {
    // y' = y^2, y(0) = 1 has the exact solution 1/(1-t)
    auto sys = scalar(+[](double, double y) { return y * y; });
    const double y0[1] = {1.0};
    auto res = ode::integrate(sys, y0, 0.0, 1.0, 1e-10, {});
    CHECK((res.outcome == ode::Outcome::BlowUp || res.outcome == ode::Outcome::StepUnderflow));
    CHECK(res.last_t > 0.99);
    CHECK(res.last_t < 1.0);
}

TEST_CASE("samples are strictly ordered and end matches final state") {
    auto sys = scalar(+[](double t, double y) { return std::cos(t) * y; });
    const double y0[1] = {1.0};
    std::vector<double> samples;
    for (int i = 1; i <= 20; ++i) samples.push_back(2.0 * i / 20.0);
    auto res = ode::integrate(sys, y0, 0.0, 2.0, 1e-10, samples);
    REQUIRE(res.outcome == ode::Outcome::Ok);
    REQUIRE(res.samples.size() == samples.size());
    for (std::size_t i = 1; i < res.samples.size(); ++i)
        CHECK(res.samples[i].t > res.samples[i - 1].t);
    CHECK(res.final_state[0] == res.samples.back().y[0]);
}

TEST_CASE("time reversal round trip stays within 10 tol") {
    auto sys = scalar(+[](double t, double y) { return std::sin(3.0 * t) * y + 0.1 * t; });
    const double tol = 1e-9;
    const double y0[1] = {0.8};
    auto fwd = ode::integrate(sys, y0, 0.0, 2.0, tol, {});
    REQUIRE(fwd.outcome == ode::Outcome::Ok);
    auto back = ode::integrate(sys, fwd.final_state, 2.0, 0.0, tol, {});
    REQUIRE(back.outcome == ode::Outcome::Ok);
    CHECK(std::fabs(back.final_state[0] - y0[0]) <= 10.0 * tol * (1.0 + std::fabs(y0[0])));
}

TEST_CASE("halving tol never increases the max estimated error") {
    auto sys = scalar(+[](double t, double y) { return y * std::cos(t); });
    const double y0[1] = {1.0};
    double prev = 0.0;
    bool first = true;
    for (double tol = 1e-5; tol >= 1e-10; tol *= 0.5) {
        auto res = ode::integrate(sys, y0, 0.0, 3.0, tol, {});
        REQUIRE(res.outcome == ode::Outcome::Ok);
        if (!first) CHECK(res.max_est_error <= prev + 1e-18);
        prev = res.max_est_error;
        first = false;
    }
}

TEST_CASE("fixed-step RK4 fallback shows order 4") {
    auto sys = scalar(+[](double, double y) { return y; });
    const double y0[1] = {1.0};
    const double exact = std::exp(1.0);
    const double e1 = std::fabs(ode::rk4_fixed(sys, y0, 0.0, 1.0, 40)[0] - exact);
    const double e2 = std::fabs(ode::rk4_fixed(sys, y0, 0.0, 1.0, 80)[0] - exact);
    const double order = std::log2(e1 / e2);
    CHECK(order > 3.8);
    CHECK(order < 4.2);
}

TEST_CASE("backward integration works") {
    auto sys = scalar(+[](double, double y) { return y; });
    const double y0[1] = {std::exp(1.0)};
    auto res = ode::integrate(sys, y0, 1.0, 0.0, 1e-10, {});
    REQUIRE(res.outcome == ode::Outcome::Ok);
    CHECK(std::fabs(res.final_state[0] - 1.0) <= 1e-9);
}

TEST_CASE("guard stops the trajectory") {
    auto sys = scalar(+[](double, double) { return 1.0; });
    const double y0[1] = {0.0};
    ode::IntegrateOptions opts;
    opts.guard = [](double, std::span<const double> y) { return y[0] <= 0.5; };
    auto res = ode::integrate(sys, y0, 0.0, 2.0, 1e-10, {}, opts);
    CHECK(res.outcome == ode::Outcome::GuardStop);
    CHECK(res.final_state[0] > 0.5);  // stops on the first accepted step past the bound
    CHECK(res.last_t < 2.0);
}

TEST_CASE("quadrature basics") {
    CHECK(std::fabs(ode::quadrature([](double s) { return s; }, 0, 1, 1e-12) - 0.5) <= 1e-12);
    CHECK(std::fabs(ode::quadrature([](double s) { return std::exp(s); }, 0, 1, 1e-12) -
                    (std::exp(1.0) - 1.0)) <= 1e-11);
    // reversed limits flip the sign
    CHECK(ode::quadrature([](double s) { return s; }, 1, 0, 1e-12) ==
          doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("quadrature exact on cubics") {
    auto f = [](double s) { return ((s - 2.0) * s + 3.0) * s - 11.0 / 12.0; };
    // antiderivative: s^4/4 - 2 s^3/3 + 3 s^2/2 - 11 s/12 over [0, 1]
    const double exact = 0.25 - 2.0 / 3.0 + 1.5 - 11.0 / 12.0;
    CHECK(std::fabs(ode::quadrature(f, 0, 1, 1e-10) - exact) <= 1e-13);
    CHECK(std::fabs(ode::quadrature_kronrod(f, 0, 1, 1e-10) - exact) <= 1e-13);
}

TEST_CASE("two independent rules agree on the eq10 oracle constant") {
    // int_0^1 e^{s + s^2/2} ds, the quadrature-backed constant of Example 4.1
    auto f = [](double s) { return std::exp(s + 0.5 * s * s); };
    const double simpson = ode::quadrature(f, 0, 1, 1e-12);
    const double kronrod = ode::quadrature_kronrod(f, 0, 1, 1e-12);
    CHECK(std::fabs(simpson - kronrod) <= 1e-10);
    CHECK(simpson == doctest::Approx(2.1434490999194193).epsilon(1e-12));
    // the eq12 constant as well
    auto g = [](double s) { return std::exp(0.5 * s * s); };
    CHECK(ode::quadrature(g, 0, 1, 1e-12) ==
          doctest::Approx(1.1949576619102276).epsilon(1e-12));
    CHECK(std::fabs(ode::quadrature(g, 0, 1, 1e-12) - ode::quadrature_kronrod(g, 0, 1, 1e-12)) <=
          1e-10);
}

TEST_CASE("non-finite integrand is an error") {
    CHECK_THROWS_AS(ode::quadrature([](double s) { return 1.0 / s; }, 0, 1, 1e-10),
                    ode::QuadratureError);
    CHECK_THROWS_AS(ode::quadrature_kronrod([](double s) { return 1.0 / s; }, -1, 1, 1e-10),
                    ode::QuadratureError);
}

TEST_CASE("preconditions") {
    auto sys = scalar(+[](double, double y) { return y; });
    const double y0[1] = {1.0};
    CHECK_THROWS_AS(ode::integrate(sys, y0, 0.0, 1.0, 0.0, {}), std::invalid_argument);
    const double bad_samples[2] = {0.5, 0.25};
    CHECK_THROWS_AS(ode::integrate(sys, y0, 0.0, 1.0, 1e-8, bad_samples),
                    std::invalid_argument);
    const double outside[1] = {2.0};
    CHECK_THROWS_AS(ode::integrate(sys, y0, 0.0, 1.0, 1e-8, outside), std::invalid_argument);
}
