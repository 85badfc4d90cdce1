#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dtmm/errors.hpp"
#include "dtmm/oracle.hpp"

using dtmm::CoefficientProfile;
using dtmm::State;

TEST_CASE("harmonic closed form") {
    CoefficientProfile p = dtmm::make_profile("1", 0.0, 2.0);
    State end = dtmm::rk_solve(p, 0.0, {1.0, 0.0, 0.0, 0.0}, 2.0);
    CHECK(end.u == doctest::Approx(std::cos(2.0)).epsilon(1e-11));
    CHECK(end.du == doctest::Approx(-std::sin(2.0)).epsilon(1e-11));
    CHECK(end.v == 0.0);

    State shifted = dtmm::rk_solve(p, 1.0, {0.0, 0.0, 1.0, 0.0}, 1.0 + M_PI / 2.0);
    CHECK(shifted.u == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("complex coefficient closed form") {
    CoefficientProfile p = dtmm::make_profile("0", "1", 0.0, 1.0);
    State end = dtmm::rk_solve(p, 0.0, {1.0, 0.0, 0.0, 0.0}, 1.0);
    std::complex<double> y_ref = std::cos(std::sqrt(std::complex<double>(0.0, 1.0)));
    CHECK(end.u == doctest::Approx(y_ref.real()).epsilon(1e-10));
    CHECK(end.v == doctest::Approx(y_ref.imag()).epsilon(1e-10));
}

TEST_CASE("backward integration") {
    CoefficientProfile p = dtmm::make_profile("1+x", 0.0, 2.0);
    State fwd = dtmm::rk_solve(p, 0.0, {1.0, 0.0, 0.0, 0.0}, 2.0);
    State back = dtmm::rk_solve(p, 2.0, fwd, 0.0);
    CHECK(back.u == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(back.du == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
}

TEST_CASE("trace lands exactly on the requested points") {
    CoefficientProfile p = dtmm::make_profile("2-x", 0.0, 3.0);
    std::vector<double> pts{0.0, 0.4, 1.1, 2.35, 3.0};
    std::vector<State> tr = dtmm::rk_trace(p, 0.0, {0.5, 0.0, 1.0, 0.0}, pts);
    REQUIRE(tr.size() == pts.size());
    CHECK(tr[0].u == 0.5);  // initial state verbatim
    CHECK(tr[0].du == 1.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        State direct = dtmm::rk_solve(p, 0.0, {0.5, 0.0, 1.0, 0.0}, pts[i]);
        CHECK(tr[i].u == doctest::Approx(direct.u).epsilon(1e-10));
        CHECK(tr[i].du == doctest::Approx(direct.du).epsilon(1e-10));
    }
}

TEST_CASE("tolerance mode refines until agreement") {
    CoefficientProfile p = dtmm::make_profile("1", 0.0, 2.0);
    dtmm::OracleConfig cfg;
    cfg.step = 0.25;  // coarse start
    cfg.tolerance = 1e-10;
    State end = dtmm::rk_solve(p, 0.0, {1.0, 0.0, 0.0, 0.0}, 2.0, cfg);
    CHECK(end.u == doctest::Approx(std::cos(2.0)).epsilon(1e-9));
}

TEST_CASE("step budget is enforced") {
    CoefficientProfile p = dtmm::make_profile("1", 0.0, 2.0);
    dtmm::OracleConfig cfg;
    cfg.step = 1e-9;
    cfg.max_steps = 1000;
    CHECK_THROWS_AS(dtmm::rk_solve(p, 0.0, {1.0, 0.0, 0.0, 0.0}, 2.0, cfg),
                    dtmm::NumericalError);
}

TEST_CASE("one-period map of a constant coefficient") {
    CoefficientProfile p = dtmm::make_profile("4", 0.0, 1.0);
    dtmm::ComplexMap m = dtmm::oracle_monodromy(p, 0.0, 1.0);
    CHECK(m.m00.real() == doctest::Approx(std::cos(2.0)).epsilon(1e-10));
    CHECK(m.m01.real() == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-10));
    CHECK(m.m10.real() == doctest::Approx(-2.0 * std::sin(2.0)).epsilon(1e-10));
    CHECK(m.m11.real() == doctest::Approx(std::cos(2.0)).epsilon(1e-10));
    CHECK(std::abs(m.m00.imag()) < 1e-12);
}
