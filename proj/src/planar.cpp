#include "dtmm/planar.hpp"

#include <cmath>
#include <complex>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {
constexpr double kSinhcSeriesThreshold = 1e-4;
}

PlanarMatrix planar_sqrt(PlanarMatrix B, double scale) {
    std::complex<double> z(scale * B.a, scale * B.b);
    std::complex<double> s = std::sqrt(z); // principal branch: Re >= 0
    if (s.imag() < 0.0) s = -s;
    return {s.real(), s.imag()};
}

PlanarMatrix planar_exp(PlanarMatrix D) {
    double ea = std::exp(D.a);
    return {ea * std::cos(D.b), ea * std::sin(D.b)};
}

PlanarMatrix planar_cosh(PlanarMatrix D) {
    return {std::cosh(D.a) * std::cos(D.b), std::sinh(D.a) * std::sin(D.b)};
}

PlanarMatrix planar_sinh(PlanarMatrix D) {
    return {std::sinh(D.a) * std::cos(D.b), std::cosh(D.a) * std::sin(D.b)};
}

PlanarMatrix planar_sinhc(PlanarMatrix D) {
    double det = planar_det(D);
    if (det < kSinhcSeriesThreshold) {
        PlanarMatrix d2 = D * D;
        PlanarMatrix acc = planar_identity();
        PlanarMatrix pow = d2;
        acc = acc + (1.0 / 6.0) * pow;       // D^2 / 3!
        pow = pow * d2;
        acc = acc + (1.0 / 120.0) * pow;     // D^4 / 5!
        pow = pow * d2;
        acc = acc + (1.0 / 5040.0) * pow;    // D^6 / 7!
        return acc;
    }
    return planar_inverse(D) * planar_sinh(D);
}

PlanarMatrix planar_inverse(PlanarMatrix D) {
    double det = planar_det(D);
    if (det == 0.0) throw DomainError("planar_inverse of a singular matrix");
    return {D.a / det, -D.b / det};
}

} // namespace dtmm
