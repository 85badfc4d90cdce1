#pragma once

#include <complex>
#include <vector>

#include "dtmm/propagate.hpp"

namespace dtmm {

// One-period transfer map of an L-periodic problem as the complex 2x2
// matrix acting on (y, y') at x0.
ComplexMap monodromy(const CoefficientProfile& p, double x0, double L, int n_sections,
                     bool corrected, const QuadratureConfig& cfg = {});

// Eigenvalues lambda of the monodromy and the wavenumbers kappa with
// exp(i kappa L) = lambda, folded to Re kappa in (-pi/L, pi/L] (zone-edge
// ties resolve to +pi/L). kappa1 is the lexicographically larger of the
// pair by (Re, Im), so output ordering is deterministic.
struct BlochResult {
    ComplexMap monodromy;
    std::complex<double> lambda1, lambda2;
    std::complex<double> kappa1, kappa2;
    double L = 0.0;
};

// Throws NumericalError if |det(m) - 1| > 1e-6, which signals an upstream
// accuracy failure rather than a property of the problem.
BlochResult bloch_wavenumbers(const ComplexMap& m, double L);

bool is_propagating(const BlochResult& r, double tol = 1e-6);

// One row of a band scan over the coefficient family g_E(x) = E - V(x).
struct BandPoint {
    double E = 0.0;
    std::complex<double> kappa1, kappa2;
    bool propagating = false;
    bool ok = false; // false: this point failed; kappas are NaN
};

// `count` energies equally spaced over [e_lo, e_hi] (count == 1 samples
// e_lo). Points are independent; ExecPolicy::parallel fans them out with
// identical results. A failed point is recorded with ok = false, not thrown.
std::vector<BandPoint> band_scan(const Expression& V, double e_lo, double e_hi, int count,
                                 double L, double x0, int n_sections, bool corrected,
                                 const QuadratureConfig& cfg = {},
                                 ExecPolicy policy = ExecPolicy::serial);

// Diagnostic for the approximation quality of a sectioned monodromy: the
// exact kappa of an L-periodic profile does not depend on the propagation
// origin, so max over sampled x0 in [-L/2, L/2] of |kappa1(x0) - kappa1(0)|
// measures the sectioning error. Returns the deviation; asserts nothing.
double kappa_x_independence_check(const CoefficientProfile& p, double L, int x0_samples,
                                  int n_sections, bool corrected,
                                  const QuadratureConfig& cfg = {});

} // namespace dtmm
