// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cam16/types.hpp"

namespace cam16 {

/// Wall-time comparison of the current inverse model against the legacy
/// formulation, batch inversion of (J, C, h) correlates per sample size.
struct BenchReport {
    std::vector<std::size_t> sizes;
    std::vector<double> fixed_seconds;   // best-of-repetitions, current model
    std::vector<double> legacy_seconds;  // best-of-repetitions, legacy model
    std::vector<double> speedup;         // legacy_seconds / fixed_seconds
    std::uint64_t seed = 0;
    int repetitions = 0;
    std::string cpu;
    std::string build;
};

/// Times batch inversion for both model variants. Inputs are (J, C, h)
/// correlates obtained by running the forward model on seeded uniform XYZ
/// samples (components in [1e-3, 100]) under D65, Y_b = 20, L_A = 318.31,
/// Average surround. Both variants are checked to agree within 1e-8 relative
/// before any timing starts. Timed loops are single-threaded.
BenchReport run_benchmark(const std::vector<std::size_t>& sizes, int repetitions,
                          std::uint64_t seed);

/// Machine-readable report (JSON).
void write_report_json(const BenchReport& report, std::ostream& out);

/// Plain-text table: size, legacy seconds, fixed seconds, speedup.
void write_report_table(const BenchReport& report, std::ostream& out);

}  // namespace cam16
