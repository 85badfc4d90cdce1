#include "dtmm/profile.hpp"

namespace dtmm {

CoefficientProfile make_profile(std::string_view g_text, double lo, double hi) {
    return {parse_expression(g_text), std::nullopt, lo, hi};
}

CoefficientProfile make_profile(std::string_view g_text, std::string_view h_text,
                                double lo, double hi) {
    return {parse_expression(g_text), parse_expression(h_text), lo, hi};
}

double integral_g(const CoefficientProfile& p, double alpha, double x,
                  const QuadratureConfig& cfg) {
    return integrate(p.g, alpha, x, cfg);
}

double integral_h(const CoefficientProfile& p, double alpha, double x,
                  const QuadratureConfig& cfg) {
    if (!p.h) return 0.0;
    return integrate(*p.h, alpha, x, cfg);
}

double moment_integral(const Expression& e, double alpha, double x,
                       const QuadratureConfig& cfg) {
    return integrate([&](double t) { return (x + alpha - 2.0 * t) * e.eval(t); },
                     alpha, x, cfg);
}

} // namespace dtmm
