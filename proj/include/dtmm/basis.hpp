#pragma once

#include <utility>

#include "dtmm/profile.hpp"

namespace dtmm {

// Scalar basis functions for real-valued profiles, built on
//
//     w = (x - alpha) * int_alpha^x g(t) dt
//
// which stays real for either sign of g, so the pair below replaces the WKB
// pair without diverging at turning points.

// cos(sqrt(w)) for w >= 0, cosh(sqrt(-w)) for w < 0; entire in w.
double cos_sqrt(double w);

// sin(sqrt(w))/sqrt(w) resp. sinh(sqrt(-w))/sqrt(-w); entire in w, value 1
// at w = 0.
double sinc_sqrt(double w);

// The four fundamental-solution components at (x; alpha):
//
//     u(x)  = psi1 u(alpha) + psi2 u'(alpha)
//     u'(x) = psi3 u(alpha) + psi4 u'(alpha)
//
// With the correction enabled the pair carries exp(-gamma/2) (psi1, psi2)
// and exp(+gamma/2) (psi3, psi4); gamma is the moment integral of g.
// psi1*psi4 - psi2*psi3 == 1 identically.
struct BasisEval {
    double psi1 = 1.0;
    double psi2 = 0.0;
    double psi3 = 0.0;
    double psi4 = 1.0;
};

BasisEval basis_at(const CoefficientProfile& p, double alpha, double x,
                   bool corrected, const QuadratureConfig& cfg = {});

// Central finite-difference derivatives of psi1 and psi2 at x = alpha
// (step 1e-6); the exact values are (0, 1) for any smooth g.
std::pair<double, double> basis_derivatives_at_origin(const CoefficientProfile& p, double alpha,
                                                      bool corrected,
                                                      const QuadratureConfig& cfg = {});

// The classic WKB pair k^{-1/2} cos(int k), k^{-1/2} sin(int k) with
// k = sqrt(g). `turning_point` is set instead of values whenever g(x) <= 0
// or g dips negative anywhere along the path; near such points the WKB pair
// diverges while basis_at stays finite.
struct WkbEval {
    double u1 = 0.0;
    double u2 = 0.0;
    bool turning_point = false;
};

WkbEval wkb_at(const CoefficientProfile& p, double alpha, double x,
               const QuadratureConfig& cfg = {});

} // namespace dtmm
