#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dtmm/errors.hpp"
#include "dtmm/quadrature.hpp"

using dtmm::integrate;
using dtmm::QuadratureConfig;

TEST_CASE("elementary integrals") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate([](double) { return 4.0; }, -2.5, 3.5) == doctest::Approx(24.0));
}

TEST_CASE("oscillatory integrand") {
    double got = integrate([](double x) { return std::sin(10.0 * x); }, 0.0, 10.0);
    double want = (1.0 - std::cos(100.0)) / 10.0;
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("expression overload") {
    dtmm::Expression e = dtmm::parse_expression("x^2+1");
    CHECK(integrate(e, 0.0, 2.0) == doctest::Approx(8.0 / 3.0 + 2.0).epsilon(1e-12));
}

TEST_CASE("degenerate and reversed intervals") {
    auto f = [](double x) { return std::cos(x) + x; };
    CHECK(integrate(f, 1.25, 1.25) == 0.0);
    CHECK(integrate(f, 0.3, 2.1) == -integrate(f, 2.1, 0.3));
}

TEST_CASE("interval additivity") {
    auto f = [](double x) { return std::exp(std::sin(x)); };
    double whole = integrate(f, -1.0, 2.0);
    double split = integrate(f, -1.0, 0.4) + integrate(f, 0.4, 2.0);
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
}

TEST_CASE("depth exhaustion raises") {
    QuadratureConfig cfg;
    cfg.rel = 1e-14;
    cfg.abs = 1e-16;
    cfg.max_depth = 2;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(50.0 * x); }, 0.0, 10.0, cfg),
                    dtmm::QuadratureError);
}

TEST_CASE("integrand exceptions propagate") {
    dtmm::Expression e = dtmm::parse_expression("log(x)");
    CHECK_THROWS_AS(integrate(e, -1.0, 1.0), dtmm::DomainError);
}

TEST_CASE("random polynomials against their antiderivatives") {
    std::mt19937_64 rng(0xabcd);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> ends(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        double c[7];
        for (double& v : c) v = coef(rng);
        auto f = [&](double x) {
            double acc = 0.0;
            for (int k = 6; k >= 0; --k) acc = acc * x + c[k];
            return acc;
        };
        auto F = [&](double x) {
            double acc = 0.0;
            for (int k = 6; k >= 0; --k) acc = acc * x + c[k] / (k + 1);
            return acc * x;
        };
        double a = ends(rng), b = ends(rng);
        double want = F(b) - F(a);
        CHECK(integrate(f, a, b) == doctest::Approx(want).epsilon(1e-9).scale(1.0));
    }
}
