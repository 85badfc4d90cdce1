#include "dtmm/transfer.hpp"

namespace dtmm {

namespace {

// Planar block (a, b) acting on the real pair (p, q).
inline void planar_apply(PlanarMatrix m, double p, double q, double& out_p, double& out_q) {
    out_p = m.a * p + m.b * q;
    out_q = -m.b * p + m.a * q;
}

inline std::complex<double> planar_to_complex(PlanarMatrix m) {
    return {m.a, -m.b};
}

} // namespace

PlanarMatrix local_coefficient(const CoefficientProfile& p, double x) {
    return {-p.eval_g(x), p.eval_h(x)};
}

PlanarMatrix integrated_coefficient(const CoefficientProfile& p, double alpha, double x,
                                    const QuadratureConfig& cfg) {
    double G = integral_g(p, alpha, x, cfg);
    double H = integral_h(p, alpha, x, cfg);
    return {-G, H};
}

PlanarMatrix integral_root(PlanarMatrix B, double length) {
    return planar_sqrt(B, length);
}

PlanarMatrix commutator_moment(const CoefficientProfile& p, double alpha, double x,
                               const QuadratureConfig& cfg) {
    double ma = moment_integral(p.g, alpha, x, cfg);
    double mb = p.h ? moment_integral(*p.h, alpha, x, cfg) : 0.0;
    return {ma, -mb};
}

TransferMatrix build_blocks(const CoefficientProfile& p, double alpha, double x,
                            const QuadratureConfig& cfg) {
    double length = x - alpha;
    PlanarMatrix B = integrated_coefficient(p, alpha, x, cfg);
    PlanarMatrix D = integral_root(B, length);
    PlanarMatrix sc = planar_sinhc(D);
    PlanarMatrix cc = planar_cosh(D);
    TransferMatrix q;
    q.vv = cc;
    q.vd = length * sc;
    q.dv = B * sc;
    q.dd = cc;
    return q;
}

TransferMatrix build_transfer(const CoefficientProfile& p, double alpha, double x,
                              bool corrected, const QuadratureConfig& cfg) {
    TransferMatrix q = build_blocks(p, alpha, x, cfg);
    if (!corrected) return q;
    PlanarMatrix J = commutator_moment(p, alpha, x, cfg);
    PlanarMatrix wtop = planar_exp(-0.5 * J);
    PlanarMatrix wbot = planar_exp(0.5 * J);
    q.vv = wtop * q.vv;
    q.vd = wtop * q.vd;
    q.dv = wbot * q.dv;
    q.dd = wbot * q.dd;
    return q;
}

State apply(const TransferMatrix& q, const State& s) {
    double a, b, c, d;
    planar_apply(q.vv, s.u, s.v, a, b);
    planar_apply(q.vd, s.du, s.dv, c, d);
    State out;
    out.u = a + c;
    out.v = b + d;
    planar_apply(q.dv, s.u, s.v, a, b);
    planar_apply(q.dd, s.du, s.dv, c, d);
    out.du = a + c;
    out.dv = b + d;
    return out;
}

TransferMatrix compose(const TransferMatrix& q2, const TransferMatrix& q1) {
    TransferMatrix r;
    r.vv = q2.vv * q1.vv + q2.vd * q1.dv;
    r.vd = q2.vv * q1.vd + q2.vd * q1.dd;
    r.dv = q2.dv * q1.vv + q2.dd * q1.dv;
    r.dd = q2.dv * q1.vd + q2.dd * q1.dd;
    return r;
}

ComplexMap to_complex_map(const TransferMatrix& q) {
    return {planar_to_complex(q.vv), planar_to_complex(q.vd),
            planar_to_complex(q.dv), planar_to_complex(q.dd)};
}

std::complex<double> state_y(const State& s) { return {s.u, s.v}; }
std::complex<double> state_dy(const State& s) { return {s.du, s.dv}; }

std::array<double, 16> to_matrix(const TransferMatrix& q) {
    auto put = [](std::array<double, 16>& m, int row, int col, PlanarMatrix p) {
        m[static_cast<std::size_t>(4 * row + col)] = p.a;
        m[static_cast<std::size_t>(4 * row + col + 1)] = p.b;
        m[static_cast<std::size_t>(4 * (row + 1) + col)] = -p.b;
        m[static_cast<std::size_t>(4 * (row + 1) + col + 1)] = p.a;
    };
    std::array<double, 16> m{};
    put(m, 0, 0, q.vv);
    put(m, 0, 2, q.vd);
    put(m, 2, 0, q.dv);
    put(m, 2, 2, q.dd);
    return m;
}

} // namespace dtmm
