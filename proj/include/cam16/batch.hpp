// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cam16/types.hpp"

namespace cam16 {

enum class JobFormat { Csv, JsonLines };

/// Structural problem with a job's input (missing header, missing column);
/// distinct from per-row conversion failures, which never abort a job.
class JobError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Batch-conversion configuration. Exactly one of surround_name/surround_c
/// must be set. The selection kinds name the columns an inverse job reads.
struct JobConfig {
    XyzColor white{95.047, 100.0, 108.883};
    double y_b = 20.0;
    double l_a = 318.31;
    std::optional<SurroundName> surround_name = SurroundName::Average;
    std::optional<double> surround_c;
    bool discount_illuminant = false;
    JobFormat format = JobFormat::Csv;
    LightnessKind lightness = LightnessKind::J;
    ChromaKind chroma = ChromaKind::C;
    HueKind hue = HueKind::Angle;
    int jobs = 1;

    ViewingConditions make_viewing_conditions() const;
};

/// Outcome of a batch job. Failed rows are absent from the output stream;
/// their 1-based data-row numbers and reasons are collected here.
struct JobReport {
    std::size_t converted = 0;
    std::size_t failed = 0;
    std::vector<std::pair<std::size_t, std::string>> errors;
};

/// Convert XYZ records to correlate records (columns J,C,h,Q,M,s,H,H_c).
JobReport run_forward_job(const JobConfig& cfg, std::istream& in, std::ostream& out);

/// Convert correlate records back to XYZ records (columns X,Y,Z).
JobReport run_inverse_job(const JobConfig& cfg, std::istream& in, std::ostream& out);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace cam16
