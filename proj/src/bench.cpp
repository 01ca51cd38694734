// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include "cam16/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>

#include "json.hpp"

#include "cam16/cam16.hpp"
#include "cam16/legacy.hpp"

namespace cam16 {

namespace {

volatile double g_sink;  // keeps the timed loops from being optimized away

std::string cpu_model() {
    std::ifstream info("/proc/cpuinfo");
    std::string line;
    while (std::getline(info, line)) {
        if (line.rfind("model name", 0) == 0) {
            const auto pos = line.find(':');
            if (pos != std::string::npos && pos + 2 <= line.size()) {
                return line.substr(pos + 2);
            }
        }
    }
    return "unknown";
}

double relative_gap(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-9});
    return std::fabs(a - b) / scale;
}

template <typename Inverse>
double time_batch(const std::vector<CorrelateSelection>& batch, const ViewingConditions& vc,
                  int repetitions, Inverse inv) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < repetitions; ++rep) {
        double sink = 0.0;
        const auto start = std::chrono::steady_clock::now();
        for (const auto& sel : batch) {
            sink += inv(sel, vc).y;
        }
        const auto stop = std::chrono::steady_clock::now();
        g_sink = sink;
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

}  // namespace

BenchReport run_benchmark(const std::vector<std::size_t>& sizes, int repetitions,
                          std::uint64_t seed) {
    if (sizes.empty()) throw DomainError("at least one sample size is required");
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) {
            throw DomainError("sample sizes must be strictly increasing");
        }
    }
    if (repetitions < 3) throw DomainError("at least 3 repetitions are required");

    const ViewingConditions vc = viewing_conditions(
        {95.047, 100.0, 108.883}, 20.0, 318.31, surround_preset(SurroundName::Average));

    // Pre-generate correlates for the largest size; smaller runs use
    // prefixes. Draws outside the model's domain are skipped so the batch
    // holds exactly max_size valid correlate triples.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> component(1e-3, 100.0);
    const std::size_t max_size = sizes.back();
    std::vector<CorrelateSelection> batch;
    batch.reserve(max_size);
    while (batch.size() < max_size) {
        const XyzColor xyz{component(rng), component(rng), component(rng)};
        try {
            const Correlates r = forward(xyz, vc);
            batch.push_back(CorrelateSelection::jch(r.j, r.c, r.h));
        } catch (const DomainError&) {
        }
    }

    // Correctness gate: both paths must agree before anything is timed.
    for (const auto& sel : batch) {
        const XyzColor fixed = inverse(sel, vc);
        const XyzColor leg = legacy::inverse(sel, vc);
        if (relative_gap(fixed.x, leg.x) > 1e-8 || relative_gap(fixed.y, leg.y) > 1e-8 ||
            relative_gap(fixed.z, leg.z) > 1e-8) {
            throw std::runtime_error("inverse model variants disagree; refusing to time");
        }
    }

    BenchReport report;
    report.sizes = sizes;
    report.seed = seed;
    report.repetitions = repetitions;
    report.cpu = cpu_model();
#ifdef NDEBUG
    report.build = "release";
#else
    report.build = "debug";
#endif
    for (const std::size_t size : sizes) {
        const std::vector<CorrelateSelection> slice(batch.begin(),
                                                    batch.begin() + static_cast<long>(size));
        const double fixed_s = time_batch(slice, vc, repetitions,
                                          [](const CorrelateSelection& s,
                                             const ViewingConditions& v) { return inverse(s, v); });
        const double legacy_s =
            time_batch(slice, vc, repetitions,
                       [](const CorrelateSelection& s, const ViewingConditions& v) {
                           return legacy::inverse(s, v);
                       });
        report.fixed_seconds.push_back(fixed_s);
        report.legacy_seconds.push_back(legacy_s);
        report.speedup.push_back(fixed_s > 0.0 ? legacy_s / fixed_s : 0.0);
    }
    return report;
}

void write_report_json(const BenchReport& report, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["sizes"] = report.sizes;
    doc["fixed_seconds"] = report.fixed_seconds;
    doc["legacy_seconds"] = report.legacy_seconds;
    doc["speedup"] = report.speedup;
    doc["seed"] = report.seed;
    doc["repetitions"] = report.repetitions;
    doc["cpu"] = report.cpu;
    doc["build"] = report.build;
    out << doc.dump(2) << '\n';
}

void write_report_table(const BenchReport& report, std::ostream& out) {
    out << "      size   legacy_s    fixed_s  speedup\n";
    char line[96];
    for (std::size_t i = 0; i < report.sizes.size(); ++i) {
        std::snprintf(line, sizeof line, "%10zu %10.6f %10.6f %8.4f\n", report.sizes[i],
                      report.legacy_seconds[i], report.fixed_seconds[i], report.speedup[i]);
        out << line;
    }
}

}  // namespace cam16
