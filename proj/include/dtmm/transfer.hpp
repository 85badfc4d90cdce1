#pragma once

#include <array>
#include <complex>

#include "dtmm/planar.hpp"
#include "dtmm/profile.hpp"

namespace dtmm {

// The real 4-vector (u, v, u', v') carrying y = u + i v and y' = u' + i v'.
struct State {
    double u = 0.0;
    double v = 0.0;
    double du = 0.0;
    double dv = 0.0;
};

// One propagation step as four planar blocks:
//
//     [ (u, v)  ]   [ vv  vd ] [ (u0, v0)   ]
//     [ (u',v') ] = [ dv  dd ] [ (u0',v0')  ]
//
// Uncorrected steps have vv == dd; the commutator correction scales the top
// block row by exp(-J/2) and the bottom row by exp(+J/2), and chained
// products are general in all four blocks. The planar algebra is closed
// under these compositions.
struct TransferMatrix {
    PlanarMatrix vv = planar_identity();
    PlanarMatrix vd{};
    PlanarMatrix dv{};
    PlanarMatrix dd = planar_identity();
};

// 2x2 complex view of a TransferMatrix, acting on (y, y').
struct ComplexMap {
    std::complex<double> m00, m01, m10, m11;
};

// The planar carrier of the local coefficient: (-g(x), h(x)).
PlanarMatrix local_coefficient(const CoefficientProfile& p, double x);

// Componentwise integral of the local coefficient over [alpha, x]:
// (-G, H) with G = int g, H = int h. Exactly zero when x == alpha.
PlanarMatrix integrated_coefficient(const CoefficientProfile& p, double alpha, double x,
                                    const QuadratureConfig& cfg = {});

// Root of the length-scaled integral: D with D*D = (x - alpha) * B.
PlanarMatrix integral_root(PlanarMatrix B, double length);

// First-commutator correction integral over [alpha, x],
// J = int (2t - x - alpha) E(t) dt. For real profiles J = (gamma, 0) with
// gamma the moment integral of g.
PlanarMatrix commutator_moment(const CoefficientProfile& p, double alpha, double x,
                               const QuadratureConfig& cfg = {});

// Uncorrected step: vv = dd = cosh(D), vd = (x-alpha)*sinhc(D),
// dv = B*sinhc(D). The dv form is algebraically (1/(x-alpha))*B*vd but stays
// finite at zero-length intervals and at interior zeros of the integral.
TransferMatrix build_blocks(const CoefficientProfile& p, double alpha, double x,
                            const QuadratureConfig& cfg = {});

// Full step; with `corrected` the block rows carry exp(-J/2) / exp(+J/2).
TransferMatrix build_transfer(const CoefficientProfile& p, double alpha, double x,
                              bool corrected, const QuadratureConfig& cfg = {});

State apply(const TransferMatrix& q, const State& s);

// Composition q2 after q1 (first q1, then q2).
TransferMatrix compose(const TransferMatrix& q2, const TransferMatrix& q1);

// The complex 2x2 map equivalent to `apply`: planar block (a, b) acts on
// y = u + i v as multiplication by a - i b.
ComplexMap to_complex_map(const TransferMatrix& q);

std::complex<double> state_y(const State& s);
std::complex<double> state_dy(const State& s);

// Row-major 4x4 dense form, mainly for determinant checks in tests.
std::array<double, 16> to_matrix(const TransferMatrix& q);

} // namespace dtmm
