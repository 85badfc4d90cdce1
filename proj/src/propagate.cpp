#include "dtmm/propagate.hpp"

#include <exception>
#include <stdexcept>

#include "dtmm/basis.hpp"

namespace dtmm {

namespace {

State step_state(const CoefficientProfile& p, double from, double to, const State& s,
                 bool corrected, const QuadratureConfig& cfg) {
    if (p.is_real()) {
        BasisEval b = basis_at(p, from, to, corrected, cfg);
        State out;
        out.u = b.psi1 * s.u + b.psi2 * s.du;
        out.v = b.psi1 * s.v + b.psi2 * s.dv;
        out.du = b.psi3 * s.u + b.psi4 * s.du;
        out.dv = b.psi3 * s.v + b.psi4 * s.dv;
        return out;
    }
    return apply(build_transfer(p, from, to, corrected, cfg), s);
}

} // namespace

Partition make_partition(double alpha, double x_end, int n_sections) {
    if (n_sections < 1) throw std::invalid_argument("make_partition: need at least one section");
    Partition part(static_cast<std::size_t>(n_sections) + 1);
    for (int i = 0; i <= n_sections; ++i)
        part[static_cast<std::size_t>(i)] = alpha + (x_end - alpha) * i / n_sections;
    part.front() = alpha;
    part.back() = x_end;
    return part;
}

SolutionTrace solve_ivp(const CoefficientProfile& p, const Partition& part, const State& s0,
                        bool corrected, int samples_per_section,
                        const QuadratureConfig& cfg, ExecPolicy policy) {
    if (part.size() < 2) throw std::invalid_argument("solve_ivp: partition needs >= 2 points");
    if (samples_per_section < 1)
        throw std::invalid_argument("solve_ivp: samples_per_section must be >= 1");

    const int n = static_cast<int>(part.size()) - 1;
    const int ssp = samples_per_section;

    // Sequential pass: section-start states.
    std::vector<State> starts(static_cast<std::size_t>(n) + 1);
    starts[0] = s0;
    for (int i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        starts[k + 1] = step_state(p, part[k], part[k + 1], starts[k], corrected, cfg);
    }

    SolutionTrace trace(static_cast<std::size_t>(n) * ssp + 1);
    trace[0] = {part[0], s0};
    for (int i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        trace[k * ssp + static_cast<std::size_t>(ssp)] = {part[k + 1], starts[k + 1]};
    }
    if (ssp == 1) return trace;

    // Interior samples: independent sub-steps from each section start.
    const long total = static_cast<long>(n) * (ssp - 1);
    std::exception_ptr failure = nullptr;

#ifdef _OPENMP
    #pragma omp parallel for schedule(static) if (policy == ExecPolicy::parallel)
#else
    (void)policy;
#endif
    for (long idx = 0; idx < total; ++idx) {
        try {
            int sec = static_cast<int>(idx / (ssp - 1));
            int j = static_cast<int>(idx % (ssp - 1)) + 1;
            auto k = static_cast<std::size_t>(sec);
            double x = part[k] + (part[k + 1] - part[k]) * j / ssp;
            State s = step_state(p, part[k], x, starts[k], corrected, cfg);
            trace[k * ssp + static_cast<std::size_t>(j)] = {x, s};
        } catch (...) {
#ifdef _OPENMP
            #pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return trace;
}

TransferMatrix chain(const std::vector<TransferMatrix>& steps) {
    TransferMatrix acc; // identity
    for (const auto& q : steps) acc = compose(q, acc);
    return acc;
}

} // namespace dtmm
