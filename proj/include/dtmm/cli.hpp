#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "dtmm/profile.hpp"

namespace dtmm {

// Problem description loaded from a JSON config file. Recognized keys match
// the field names below; anything else is rejected.
struct ProblemConfig {
    std::string g;                                // coefficient, real part
    std::optional<std::string> h;                 // imaginary part
    std::optional<std::array<double, 2>> domain;  // [lo, hi]
    std::array<double, 4> initial{1.0, 0.0, 0.0, 0.0}; // (u, v, u', v') at alpha
    std::optional<double> alpha;                  // default: domain lo
    std::optional<int> sections;                  // default: wavelength heuristic
    bool corrected = true;
    std::optional<std::string> V;                 // band mode: potential
    std::optional<std::array<double, 3>> E_range; // band mode: lo, hi, count
    std::optional<double> L;                      // band mode: period

    // Command-line only (not config keys).
    std::optional<int> samples;
};

// Throws ConfigError on unreadable files, malformed JSON, unknown keys, or
// type mismatches.
ProblemConfig load_config(const std::string& path);

// Section-count heuristic: 64 * sqrt(max |f|) sections per unit length,
// i.e. enough to resolve the fastest local oscillation.
int default_sections(const CoefficientProfile& p, double a, double b);

// Commands. Each validates the whole configuration before emitting any
// output, writes CSV to `out`, diagnostics to `err`, and returns the process
// exit code: 0 success, 1 numerical failure, 2 invalid input.
int cmd_solve(const ProblemConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_basis(const ProblemConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_band(const ProblemConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const ProblemConfig& cfg, std::ostream& out, std::ostream& err);

// Full argv-level entry point used by the `dtmm` binary.
int run_cli(int argc, const char* const* argv);

// 17-significant-digit rendering used for every CSV numeric field.
std::string fmt17(double v);

} // namespace dtmm
