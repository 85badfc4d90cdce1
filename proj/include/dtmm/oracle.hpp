#pragma once

#include <vector>

#include "dtmm/transfer.hpp"

namespace dtmm {

// Brute-force reference integrator. Classical fixed-step RK4 on the
// first-order system (u, v, u', v')' = (u', v', -g u + h v, -h u - g v);
// shares nothing with the transfer-matrix path except profile evaluation.
struct OracleConfig {
    double step = 1e-3;      // base step size
    double tolerance = 0.0;  // > 0: halve the step until two successive
                             // answers agree componentwise within this
    long max_steps = 20000000;
};

State rk_solve(const CoefficientProfile& p, double alpha, const State& s0, double x_end,
               const OracleConfig& cfg = {});

// Continuous integration that lands exactly on each requested point.
// `points` must be monotone starting at alpha; entry i of the result is the
// state at points[i] (entry for alpha is s0 itself).
std::vector<State> rk_trace(const CoefficientProfile& p, double alpha, const State& s0,
                            const std::vector<double>& points, const OracleConfig& cfg = {});

// One-period map from two integrations with (y, y') = (1, 0) and (0, 1).
ComplexMap oracle_monodromy(const CoefficientProfile& p, double x0, double L,
                            const OracleConfig& cfg = {});

} // namespace dtmm
