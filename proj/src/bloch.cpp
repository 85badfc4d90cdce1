#include "dtmm/bloch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {

std::complex<double> kappa_from_lambda(std::complex<double> lambda, double L) {
    double theta = std::arg(lambda);
    if (theta <= -M_PI) theta = M_PI; // fold the zone-edge tie upward
    double radial = std::log(std::abs(lambda));
    return {theta / L, -radial / L};
}

bool kappa_less(std::complex<double> p, std::complex<double> q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
}

} // namespace

ComplexMap monodromy(const CoefficientProfile& p, double x0, double L, int n_sections,
                     bool corrected, const QuadratureConfig& cfg) {
    if (!(L > 0.0)) throw std::invalid_argument("monodromy: period must be positive");
    Partition part = make_partition(x0, x0 + L, n_sections);
    std::vector<TransferMatrix> steps;
    steps.reserve(static_cast<std::size_t>(n_sections));
    for (int i = 0; i < n_sections; ++i) {
        auto k = static_cast<std::size_t>(i);
        steps.push_back(build_transfer(p, part[k], part[k + 1], corrected, cfg));
    }
    return to_complex_map(chain(steps));
}

BlochResult bloch_wavenumbers(const ComplexMap& m, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("bloch_wavenumbers: period must be positive");
    std::complex<double> det = m.m00 * m.m11 - m.m01 * m.m10;
    if (std::abs(det - 1.0) > 1e-6)
        throw NumericalError("monodromy determinant deviates from 1 beyond tolerance");
    std::complex<double> half_trace = 0.5 * (m.m00 + m.m11);
    std::complex<double> radical = std::sqrt(half_trace * half_trace - det);

    BlochResult r;
    r.monodromy = m;
    r.L = L;
    r.lambda1 = half_trace + radical;
    r.lambda2 = half_trace - radical;
    r.kappa1 = kappa_from_lambda(r.lambda1, L);
    r.kappa2 = kappa_from_lambda(r.lambda2, L);
    if (kappa_less(r.kappa1, r.kappa2)) {
        std::swap(r.lambda1, r.lambda2);
        std::swap(r.kappa1, r.kappa2);
    }
    return r;
}

bool is_propagating(const BlochResult& r, double tol) {
    return std::abs(std::abs(r.lambda1) - 1.0) < tol &&
           std::abs(std::abs(r.lambda2) - 1.0) < tol;
}

std::vector<BandPoint> band_scan(const Expression& V, double e_lo, double e_hi, int count,
                                 double L, double x0, int n_sections, bool corrected,
                                 const QuadratureConfig& cfg, ExecPolicy policy) {
    if (count < 1) throw std::invalid_argument("band_scan: count must be >= 1");
    std::vector<BandPoint> points(static_cast<std::size_t>(count));
    const double nan = std::numeric_limits<double>::quiet_NaN();

#ifdef _OPENMP
    #pragma omp parallel for schedule(static) if (policy == ExecPolicy::parallel)
#else
    (void)policy;
#endif
    for (int i = 0; i < count; ++i) {
        double E = count == 1 ? e_lo : e_lo + (e_hi - e_lo) * i / (count - 1);
        BandPoint& pt = points[static_cast<std::size_t>(i)];
        pt.E = E;
        try {
            CoefficientProfile profile{binary_expr('-', number_expr(E), V),
                                       std::nullopt, x0, x0 + L};
            BlochResult r = bloch_wavenumbers(
                monodromy(profile, x0, L, n_sections, corrected, cfg), L);
            pt.kappa1 = r.kappa1;
            pt.kappa2 = r.kappa2;
            pt.propagating = is_propagating(r);
            pt.ok = true;
        } catch (...) {
            pt.kappa1 = pt.kappa2 = {nan, nan};
            pt.propagating = false;
            pt.ok = false;
        }
    }
    return points;
}

double kappa_x_independence_check(const CoefficientProfile& p, double L, int x0_samples,
                                  int n_sections, bool corrected,
                                  const QuadratureConfig& cfg) {
    if (x0_samples < 2)
        throw std::invalid_argument("kappa_x_independence_check: need >= 2 samples");
    std::complex<double> ref =
        bloch_wavenumbers(monodromy(p, 0.0, L, n_sections, corrected, cfg), L).kappa1;
    double worst = 0.0;
    for (int i = 0; i < x0_samples; ++i) {
        double x0 = -0.5 * L + L * i / (x0_samples - 1);
        std::complex<double> k =
            bloch_wavenumbers(monodromy(p, x0, L, n_sections, corrected, cfg), L).kappa1;
        worst = std::max(worst, std::abs(k - ref));
    }
    return worst;
}

} // namespace dtmm
