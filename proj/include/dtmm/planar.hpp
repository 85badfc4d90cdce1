#pragma once

namespace dtmm {

// 2x2 matrices of the shape
//
//     [[ a, b],
//      [-b, a]]
//
// form a commutative algebra isomorphic to the complex numbers. All the
// matrix-valued quantities the transfer construction manipulates stay inside
// this algebra, so square roots, exponentials and hyperbolic functions have
// closed forms.
struct PlanarMatrix {
    double a = 0.0;
    double b = 0.0;
};

constexpr PlanarMatrix planar_identity() { return {1.0, 0.0}; }

constexpr PlanarMatrix operator+(PlanarMatrix p, PlanarMatrix q) { return {p.a + q.a, p.b + q.b}; }
constexpr PlanarMatrix operator-(PlanarMatrix p, PlanarMatrix q) { return {p.a - q.a, p.b - q.b}; }
constexpr PlanarMatrix operator-(PlanarMatrix p) { return {-p.a, -p.b}; }
constexpr PlanarMatrix operator*(double s, PlanarMatrix p) { return {s * p.a, s * p.b}; }

// Product inside the algebra; commutative.
constexpr PlanarMatrix operator*(PlanarMatrix p, PlanarMatrix q) {
    return {p.a * q.a - p.b * q.b, p.a * q.b + p.b * q.a};
}

constexpr double planar_det(PlanarMatrix p) { return p.a * p.a + p.b * p.b; }

// A root D with D*D == scale*B. Branch: D.b >= 0, and when both components
// are nonzero sign(D.a) follows sign(scale*B.b) so that 2*D.a*D.b matches the
// off-diagonal of scale*B. Downstream consumers are branch-invariant (they
// use only even functions of D), which the tests enforce.
PlanarMatrix planar_sqrt(PlanarMatrix B, double scale);

// (e^a cos b, e^a sin b)
PlanarMatrix planar_exp(PlanarMatrix D);

// (cosh a cos b, sinh a sin b) and (sinh a cos b, cosh a sin b)
PlanarMatrix planar_cosh(PlanarMatrix D);
PlanarMatrix planar_sinh(PlanarMatrix D);

// D^{-1} sinh(D) with the removable singularity at D = 0 filled by the
// truncated series sum_{n<=3} D^{2n} / (2n+1)!, used when det(D) < 1e-4.
PlanarMatrix planar_sinhc(PlanarMatrix D);

// (a, -b) / det. Throws DomainError when det == 0; the singular case is
// exactly the one planar_sinhc exists to avoid.
PlanarMatrix planar_inverse(PlanarMatrix D);

} // namespace dtmm
