#pragma once

#include <functional>

#include "dtmm/expression.hpp"

namespace dtmm {

struct QuadratureConfig {
    double rel = 1e-10;  // relative tolerance
    double abs = 1e-12;  // absolute tolerance floor
    int max_depth = 40;  // recursion depth limit per half-interval
};

// Adaptive Simpson estimate of the integral of `f` over [a, b].
//
// integrate(a, a) is exactly 0; integrate(a, b) == -integrate(b, a) exactly.
// Throws QuadratureError when the tolerance cannot be met within the depth
// limit. Exceptions thrown by the integrand abort the whole integral.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

double integrate(const Expression& e, double a, double b,
                 const QuadratureConfig& cfg = {});

} // namespace dtmm
