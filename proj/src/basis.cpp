#include "dtmm/basis.hpp"

#include <cmath>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {
constexpr double kSeriesThreshold = 1e-8;

void require_real(const CoefficientProfile& p, const char* what) {
    if (!p.is_real())
        throw DomainError(std::string(what) + " requires a real-valued profile");
}
} // namespace

double cos_sqrt(double w) {
    if (std::abs(w) < kSeriesThreshold) return 1.0 - w / 2.0 + w * w / 24.0;
    if (w > 0.0) return std::cos(std::sqrt(w));
    return std::cosh(std::sqrt(-w));
}

double sinc_sqrt(double w) {
    if (std::abs(w) < kSeriesThreshold) return 1.0 - w / 6.0 + w * w / 120.0;
    if (w > 0.0) {
        double r = std::sqrt(w);
        return std::sin(r) / r;
    }
    double r = std::sqrt(-w);
    return std::sinh(r) / r;
}

BasisEval basis_at(const CoefficientProfile& p, double alpha, double x,
                   bool corrected, const QuadratureConfig& cfg) {
    require_real(p, "basis_at");
    double len = x - alpha;
    double G = integral_g(p, alpha, x, cfg);
    double w = len * G;
    double c = cos_sqrt(w);
    double s = sinc_sqrt(w);
    double gamma = corrected ? moment_integral(p.g, alpha, x, cfg) : 0.0;
    double em = std::exp(-0.5 * gamma);
    double ep = std::exp(0.5 * gamma);
    BasisEval out;
    out.psi1 = em * c;
    out.psi2 = em * len * s;
    out.psi3 = -ep * G * s;
    out.psi4 = ep * c;
    return out;
}

std::pair<double, double> basis_derivatives_at_origin(const CoefficientProfile& p, double alpha,
                                                      bool corrected,
                                                      const QuadratureConfig& cfg) {
    const double step = 1e-6;
    BasisEval fwd = basis_at(p, alpha, alpha + step, corrected, cfg);
    BasisEval bwd = basis_at(p, alpha, alpha - step, corrected, cfg);
    return {(fwd.psi1 - bwd.psi1) / (2.0 * step), (fwd.psi2 - bwd.psi2) / (2.0 * step)};
}

WkbEval wkb_at(const CoefficientProfile& p, double alpha, double x,
               const QuadratureConfig& cfg) {
    require_real(p, "wkb_at");
    WkbEval marker;
    marker.turning_point = true;

    double gx = p.eval_g(x);
    if (gx <= 0.0) return marker;
    double lo = std::min(alpha, x);
    double hi = std::max(alpha, x);
    const int scan = 256;
    for (int i = 0; i <= scan; ++i) {
        double t = lo + (hi - lo) * i / scan;
        if (p.eval_g(t) < 0.0) return marker;
    }
    try {
        double phase = integrate(
            [&](double t) {
                double v = p.eval_g(t);
                if (v < 0.0) throw DomainError("negative coefficient on WKB path");
                return std::sqrt(v);
            },
            alpha, x, cfg);
        double root_k = std::sqrt(std::sqrt(gx));
        WkbEval out;
        out.u1 = std::cos(phase) / root_k;
        out.u2 = std::sin(phase) / root_k;
        return out;
    } catch (const DomainError&) {
        return marker;
    }
}

} // namespace dtmm
