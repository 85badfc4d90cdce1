#pragma once

#include <vector>

#include "dtmm/transfer.hpp"

namespace dtmm {

enum class ExecPolicy { serial, parallel };

// Ordered section breakpoints (ascending or descending for backward runs).
using Partition = std::vector<double>;

// n_sections + 1 equally spaced breakpoints from alpha to x_end. A
// zero-length span is allowed; its sections are identity steps.
Partition make_partition(double alpha, double x_end, int n_sections);

struct TraceSample {
    double x = 0.0;
    State s;
};

// Sample 0 is the initial condition verbatim.
using SolutionTrace = std::vector<TraceSample>;

// Chained sectioned solve of the initial-value problem.
//
// Section-start states are advanced sequentially one full section at a time.
// Within a section, `samples_per_section` intermediate points are produced
// by fresh sub-interval steps from the section-start state; those samples
// are independent of each other and run concurrently under
// ExecPolicy::parallel (identical results, the work just fans out).
//
// Real profiles advance through the scalar basis-function path; complex
// profiles through the planar-block transfer matrices.
SolutionTrace solve_ivp(const CoefficientProfile& p, const Partition& part, const State& s0,
                        bool corrected, int samples_per_section = 1,
                        const QuadratureConfig& cfg = {},
                        ExecPolicy policy = ExecPolicy::serial);

// Right-to-left product of per-section steps listed in travel order.
TransferMatrix chain(const std::vector<TransferMatrix>& steps);

} // namespace dtmm
