// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cam16/batch.hpp"
#include "cam16/bench.hpp"
#include "cam16/cam16.hpp"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 I/O error, 3 all rows failed.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitAllFailed = 3;

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError(what + ": '" + text + "' is not a number");
    }
}

cam16::XyzColor parse_white(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 3) {
        throw CLI::ValidationError("--white expects three comma-separated values");
    }
    return {parse_number(parts[0], "--white"), parse_number(parts[1], "--white"),
            parse_number(parts[2], "--white")};
}

struct CliJobOptions {
    std::string white = "95.047,100,108.883";
    double y_b = 20.0;
    double l_a = 318.31;
    std::string surround = "average";
    bool discount = false;
    std::string format = "csv";
    std::string select = "J,C,h";
    std::string input = "-";
    std::string output = "-";
    int jobs = 1;
};

void add_job_options(CLI::App* cmd, CliJobOptions& opt, bool inverse) {
    cmd->set_config("--config", "", "flat key=value config file; flags take precedence");
    cmd->add_option("--white", opt.white, "white point as X,Y,Z")->capture_default_str();
    cmd->add_option("--yb", opt.y_b, "background luminance factor Y_b")
        ->capture_default_str();
    cmd->add_option("--la", opt.l_a, "adapting-field luminance L_A in cd/m^2")
        ->capture_default_str();
    cmd->add_option("--surround", opt.surround, "average|dim|dark|c=<value>")
        ->capture_default_str();
    cmd->add_flag("--discount", opt.discount, "discount the illuminant (D = 1)");
    cmd->add_option("--format", opt.format, "record format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    if (inverse) {
        cmd->add_option("--select", opt.select,
                        "correlates to read: {J|Q},{C|M|s},{h|H}")
            ->capture_default_str();
    }
    cmd->add_option("--input", opt.input, "input path ('-' for stdin)")
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->add_option("--jobs", opt.jobs, "worker threads (output order is preserved)")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
}

cam16::JobConfig make_job_config(const CliJobOptions& opt, bool inverse) {
    cam16::JobConfig cfg;
    cfg.white = parse_white(opt.white);
    cfg.y_b = opt.y_b;
    cfg.l_a = opt.l_a;
    if (opt.surround == "average") {
        cfg.surround_name = cam16::SurroundName::Average;
    } else if (opt.surround == "dim") {
        cfg.surround_name = cam16::SurroundName::Dim;
    } else if (opt.surround == "dark") {
        cfg.surround_name = cam16::SurroundName::Dark;
    } else if (opt.surround.rfind("c=", 0) == 0) {
        cfg.surround_name.reset();
        cfg.surround_c = parse_number(opt.surround.substr(2), "--surround");
    } else {
        throw CLI::ValidationError("--surround must be average, dim, dark or c=<value>");
    }
    cfg.discount_illuminant = opt.discount;
    cfg.format = opt.format == "csv" ? cam16::JobFormat::Csv : cam16::JobFormat::JsonLines;
    cfg.jobs = opt.jobs;

    if (inverse) {
        std::vector<std::string> parts;
        std::stringstream ss(opt.select);
        std::string part;
        while (std::getline(ss, part, ',')) parts.push_back(part);
        if (parts.size() != 3) {
            throw CLI::ValidationError("--select expects three comma-separated letters");
        }
        if (parts[0] == "J") {
            cfg.lightness = cam16::LightnessKind::J;
        } else if (parts[0] == "Q") {
            cfg.lightness = cam16::LightnessKind::Q;
        } else {
            throw CLI::ValidationError("--select lightness must be J or Q");
        }
        if (parts[1] == "C") {
            cfg.chroma = cam16::ChromaKind::C;
        } else if (parts[1] == "M") {
            cfg.chroma = cam16::ChromaKind::M;
        } else if (parts[1] == "s") {
            cfg.chroma = cam16::ChromaKind::S;
        } else {
            throw CLI::ValidationError("--select chroma must be C, M or s");
        }
        if (parts[2] == "h") {
            cfg.hue = cam16::HueKind::Angle;
        } else if (parts[2] == "H") {
            cfg.hue = cam16::HueKind::Quadrature;
        } else {
            throw CLI::ValidationError("--select hue must be h or H");
        }
    }
    return cfg;
}

int run_job(const CliJobOptions& opt, bool inverse) {
    cam16::JobConfig cfg;
    try {
        cfg = make_job_config(opt, inverse);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ifstream in_file;
    std::ofstream out_file;
    if (opt.input != "-") {
        in_file.open(opt.input);
        if (!in_file) {
            std::cerr << "error: cannot open input '" << opt.input << "'\n";
            return kExitIo;
        }
    }
    if (opt.output != "-") {
        out_file.open(opt.output);
        if (!out_file) {
            std::cerr << "error: cannot open output '" << opt.output << "'\n";
            return kExitIo;
        }
    }
    std::istream& in = opt.input == "-" ? std::cin : in_file;
    std::ostream& out = opt.output == "-" ? std::cout : out_file;

    cam16::JobReport report;
    try {
        report = inverse ? cam16::run_inverse_job(cfg, in, out)
                         : cam16::run_forward_job(cfg, in, out);
    } catch (const cam16::JobError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cam16::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    out.flush();
    if (!out) {
        std::cerr << "error: writing output failed\n";
        return kExitIo;
    }

    for (const auto& [row, reason] : report.errors) {
        std::cerr << "row " << row << ": " << reason << '\n';
    }
    std::cerr << "converted " << report.converted << " rows, " << report.failed
              << " failed\n";
    if (report.failed > 0 && report.converted == 0) return kExitAllFailed;
    return kExitOk;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const double v = parse_number(part, "--sizes");
        if (v < 0.0 || v != std::floor(v) || v > 1e12) {
            throw CLI::ValidationError("--sizes entries must be non-negative integers");
        }
        sizes.push_back(static_cast<std::size_t>(v));
    }
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAM16 color appearance model batch converter and benchmark"};
    app.require_subcommand(1);

    CliJobOptions fwd_opt;
    CLI::App* fwd = app.add_subcommand("forward", "convert XYZ records to correlates");
    add_job_options(fwd, fwd_opt, false);

    CliJobOptions inv_opt;
    CLI::App* inv = app.add_subcommand("inverse", "convert correlates back to XYZ");
    add_job_options(inv, inv_opt, true);

    std::string bench_sizes = "100000,200000,300000,400000,500000,600000,700000,800000,900000,1000000";
    int bench_reps = 5;
    std::uint64_t bench_seed = 42;
    std::string bench_out;
    CLI::App* bench = app.add_subcommand("bench", "time the inverse model variants");
    bench->add_option("--sizes", bench_sizes, "comma-separated sample counts")
        ->capture_default_str();
    bench->add_option("--reps", bench_reps, "repetitions per size (best time wins)")
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "RNG seed for sample generation")
        ->capture_default_str();
    bench->add_option("--out", bench_out, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fwd->parsed()) return run_job(fwd_opt, false);
        if (inv->parsed()) return run_job(inv_opt, true);

        const std::vector<std::size_t> sizes = parse_sizes(bench_sizes);
        const cam16::BenchReport report = cam16::run_benchmark(sizes, bench_reps, bench_seed);
        cam16::write_report_table(report, std::cout);
        if (!bench_out.empty()) {
            std::ofstream out(bench_out);
            if (!out) {
                std::cerr << "error: cannot open output '" << bench_out << "'\n";
                return kExitIo;
            }
            cam16::write_report_json(report, out);
        }
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cam16::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
