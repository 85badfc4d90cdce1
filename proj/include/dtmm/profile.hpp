#pragma once

#include <optional>
#include <utility>

#include "dtmm/expression.hpp"
#include "dtmm/quadrature.hpp"

namespace dtmm {

// The coefficient f(x) = g(x) + i h(x) of y'' + f y = 0 on a closed interval.
// An absent h means the profile is real-valued, which enables the scalar
// basis-function path.
struct CoefficientProfile {
    Expression g;
    std::optional<Expression> h;
    double lo = 0.0;
    double hi = 0.0;

    bool is_real() const noexcept { return !h.has_value(); }

    double eval_g(double x) const { return g.eval(x); }
    double eval_h(double x) const { return h ? h->eval(x) : 0.0; }
};

CoefficientProfile make_profile(std::string_view g_text, double lo, double hi);
CoefficientProfile make_profile(std::string_view g_text, std::string_view h_text,
                                double lo, double hi);

// Antiderivative of g from alpha to x. integral_g(p, a, a) is exactly 0.
double integral_g(const CoefficientProfile& p, double alpha, double x,
                  const QuadratureConfig& cfg = {});

// Antiderivative of h; exactly 0 for real profiles (no quadrature is run).
double integral_h(const CoefficientProfile& p, double alpha, double x,
                  const QuadratureConfig& cfg = {});

// The correction-exponent integral
//
//     gamma(x; alpha) = int_alpha^x (x + alpha - 2 t) e(t) dt .
//
// The weight collapses the nested double integral
// int_alpha^x ( -(t - alpha) e(t) + int_alpha^t e(s) ds ) dt into a single
// quadrature by swapping the order of integration; the equivalence is
// checked against the nested form in the test suite.
double moment_integral(const Expression& e, double alpha, double x,
                       const QuadratureConfig& cfg = {});

} // namespace dtmm
