#include "dtmm/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {

struct Deriv {
    double u, v, du, dv;
};

inline Deriv rhs(const CoefficientProfile& p, double x, const State& s) {
    double g = p.eval_g(x);
    double h = p.eval_h(x);
    return {s.du, s.dv, -g * s.u + h * s.v, -h * s.u - g * s.v};
}

inline State axpy(const State& s, double c, const Deriv& d) {
    return {s.u + c * d.u, s.v + c * d.v, s.du + c * d.du, s.dv + c * d.dv};
}

State rk4_span(const CoefficientProfile& p, double a, const State& s0, double b, long steps) {
    State s = s0;
    double h = (b - a) / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) {
        double x = a + h * static_cast<double>(i);
        Deriv k1 = rhs(p, x, s);
        Deriv k2 = rhs(p, x + 0.5 * h, axpy(s, 0.5 * h, k1));
        Deriv k3 = rhs(p, x + 0.5 * h, axpy(s, 0.5 * h, k2));
        Deriv k4 = rhs(p, x + h, axpy(s, h, k3));
        s.u += h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u);
        s.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
        s.du += h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
        s.dv += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    }
    return s;
}

double state_dist(const State& a, const State& b) {
    return std::max(std::max(std::abs(a.u - b.u), std::abs(a.v - b.v)),
                    std::max(std::abs(a.du - b.du), std::abs(a.dv - b.dv)));
}

long initial_steps(double span, const OracleConfig& cfg) {
    if (!(cfg.step > 0.0)) throw std::invalid_argument("oracle step must be positive");
    double n = std::ceil(std::abs(span) / cfg.step);
    if (n > static_cast<double>(cfg.max_steps))
        throw NumericalError("reference integrator exceeded its step budget");
    return std::max(1L, static_cast<long>(n));
}

} // namespace

State rk_solve(const CoefficientProfile& p, double alpha, const State& s0, double x_end,
               const OracleConfig& cfg) {
    if (alpha == x_end) return s0;
    long n = initial_steps(x_end - alpha, cfg);
    State result = rk4_span(p, alpha, s0, x_end, n);
    if (!(cfg.tolerance > 0.0)) return result;
    while (true) {
        if (2 * n > cfg.max_steps)
            throw NumericalError("reference integrator did not converge before the step limit");
        State finer = rk4_span(p, alpha, s0, x_end, 2 * n);
        if (state_dist(finer, result) < cfg.tolerance) return finer;
        result = finer;
        n *= 2;
    }
}

std::vector<State> rk_trace(const CoefficientProfile& p, double alpha, const State& s0,
                            const std::vector<double>& points, const OracleConfig& cfg) {
    auto run = [&](double step) {
        std::vector<State> out;
        out.reserve(points.size());
        State s = s0;
        double x = alpha;
        for (double target : points) {
            if (target != x) {
                long n = std::max(1L, static_cast<long>(std::ceil(std::abs(target - x) / step)));
                s = rk4_span(p, x, s, target, n);
                x = target;
            }
            out.push_back(s);
        }
        return out;
    };

    double span = points.empty() ? 0.0 : std::abs(points.back() - alpha);
    initial_steps(span, cfg);  // enforces the step budget up front
    std::vector<State> result = run(cfg.step);
    if (!(cfg.tolerance > 0.0)) return result;
    double step = cfg.step;
    while (true) {
        step *= 0.5;
        if (span / step > static_cast<double>(cfg.max_steps))
            throw NumericalError("reference integrator did not converge before the step limit");
        std::vector<State> finer = run(step);
        double worst = 0.0;
        for (std::size_t i = 0; i < result.size(); ++i)
            worst = std::max(worst, state_dist(finer[i], result[i]));
        if (worst < cfg.tolerance) return finer;
        result = std::move(finer);
    }
}

ComplexMap oracle_monodromy(const CoefficientProfile& p, double x0, double L,
                            const OracleConfig& cfg) {
    State c0 = rk_solve(p, x0, State{1.0, 0.0, 0.0, 0.0}, x0 + L, cfg);
    State c1 = rk_solve(p, x0, State{0.0, 0.0, 1.0, 0.0}, x0 + L, cfg);
    return {state_y(c0), state_y(c1), state_dy(c0), state_dy(c1)};
}

} // namespace dtmm
