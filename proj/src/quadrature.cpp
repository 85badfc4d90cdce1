#include "dtmm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {

using Fn = std::function<double(double)>;

double simpson_rec(const Fn& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    if (lm <= a || rm <= m || m >= b) return whole; // interval at rounding resolution
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw QuadratureError("quadrature tolerance not reached within the depth limit");
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const Fn& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(cfg.rel > 0.0) || !(cfg.abs > 0.0) || cfg.max_depth < 1)
        throw std::invalid_argument("integrate: tolerances must be positive and depth >= 1");
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, cfg);
    double fa = f(a);
    double fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double tol = std::max(cfg.abs, cfg.rel * std::abs(whole));
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, cfg.max_depth);
}

double integrate(const Expression& e, double a, double b, const QuadratureConfig& cfg) {
    return integrate([&e](double t) { return e.eval(t); }, a, b, cfg);
}

} // namespace dtmm
