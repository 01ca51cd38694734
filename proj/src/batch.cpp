// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include "cam16/batch.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "cam16/cam16.hpp"

namespace cam16 {

namespace {

const char* lightness_column(LightnessKind k) {
    return k == LightnessKind::J ? "J" : "Q";
}

const char* chroma_column(ChromaKind k) {
    return k == ChromaKind::C ? "C" : k == ChromaKind::M ? "M" : "s";
}

const char* hue_column(HueKind k) {
    return k == HueKind::Angle ? "h" : "H";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

double parse_double(std::string_view field, const char* column) {
    double v{};
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw std::runtime_error("column '" + std::string(column) + "' is not a number: '" +
                                 std::string(field) + "'");
    }
    return v;
}

// Column name -> index lookup for one CSV header.
class CsvHeader {
  public:
    explicit CsvHeader(std::string_view line) : names_(split_csv(line)) {}

    std::size_t require(const char* name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) return i;
        }
        throw JobError("input is missing column '" + std::string(name) + "'");
    }

  private:
    std::vector<std::string_view> names_;
};

void append_json_number(std::string& out, const char* key, double v) {
    out += '"';
    out += key;
    out += "\":";
    out += format_double(v);
}

std::string forward_record(const Correlates& r, JobFormat format) {
    std::string line;
    if (format == JobFormat::Csv) {
        line = format_double(r.j) + ',' + format_double(r.c) + ',' + format_double(r.h) +
               ',' + format_double(r.q) + ',' + format_double(r.m) + ',' +
               format_double(r.s) + ',' + format_double(r.big_h) + ',' + r.h_c;
    } else {
        line = '{';
        append_json_number(line, "J", r.j);
        line += ',';
        append_json_number(line, "C", r.c);
        line += ',';
        append_json_number(line, "h", r.h);
        line += ',';
        append_json_number(line, "Q", r.q);
        line += ',';
        append_json_number(line, "M", r.m);
        line += ',';
        append_json_number(line, "s", r.s);
        line += ',';
        append_json_number(line, "H", r.big_h);
        line += ",\"H_c\":\"" + r.h_c + "\"}";
    }
    return line;
}

std::string inverse_record(const XyzColor& xyz, JobFormat format) {
    if (format == JobFormat::Csv) {
        return format_double(xyz.x) + ',' + format_double(xyz.y) + ',' +
               format_double(xyz.z);
    }
    std::string line{'{'};
    append_json_number(line, "X", xyz.x);
    line += ',';
    append_json_number(line, "Y", xyz.y);
    line += ',';
    append_json_number(line, "Z", xyz.z);
    line += '}';
    return line;
}

double json_number(const nlohmann::json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw std::runtime_error("record is missing key '" + std::string(key) + "'");
    }
    if (!it->is_number()) {
        throw std::runtime_error("key '" + std::string(key) + "' is not a number");
    }
    return it->get<double>();
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

struct RowResult {
    bool ok = false;
    std::string text;  // output record, or failure reason
};

// Applies `convert` to every row, in parallel when cfg.jobs > 1, preserving
// row order in the output.
template <typename Convert>
JobReport run_rows(const std::vector<std::string>& rows, int jobs, std::ostream& out,
                   Convert convert) {
    std::vector<RowResult> results(rows.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                results[i] = {true, convert(rows[i])};
            } catch (const std::exception& e) {
                results[i] = {false, e.what()};
            }
        }
    };
    const std::size_t n = rows.size();
    if (jobs <= 1 || n < 2) {
        work(0, n);
    } else {
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
        const std::size_t chunk = (n + workers - 1) / workers;
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(work, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    JobReport report;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].ok) {
            out << results[i].text << '\n';
            ++report.converted;
        } else {
            ++report.failed;
            report.errors.emplace_back(i + 1, results[i].text);
        }
    }
    return report;
}

}  // namespace

ViewingConditions JobConfig::make_viewing_conditions() const {
    if (surround_name.has_value() == surround_c.has_value()) {
        throw JobError("exactly one of surround name or surround c must be given");
    }
    const Surround s = surround_name ? surround_preset(*surround_name)
                                     : surround_interpolate(*surround_c);
    return viewing_conditions(white, y_b, l_a, s, discount_illuminant);
}

JobReport run_forward_job(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    const ViewingConditions vc = cfg.make_viewing_conditions();
    std::vector<std::string> lines = read_lines(in);

    if (cfg.format == JobFormat::Csv) {
        if (lines.empty()) return {};
        const CsvHeader header(lines.front());
        const std::size_t ix = header.require("X");
        const std::size_t iy = header.require("Y");
        const std::size_t iz = header.require("Z");
        lines.erase(lines.begin());
        out << "J,C,h,Q,M,s,H,H_c\n";
        return run_rows(lines, cfg.jobs, out, [&](const std::string& row) {
            const auto fields = split_csv(row);
            const std::size_t needed = std::max({ix, iy, iz}) + 1;
            if (fields.size() < needed) {
                throw JobError("expected at least " + std::to_string(needed) + " fields");
            }
            const XyzColor xyz{parse_double(fields[ix], "X"), parse_double(fields[iy], "Y"),
                               parse_double(fields[iz], "Z")};
            return forward_record(forward(xyz, vc), cfg.format);
        });
    }

    return run_rows(lines, cfg.jobs, out, [&](const std::string& row) {
        const nlohmann::json obj = nlohmann::json::parse(row, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw std::runtime_error("not a JSON object");
        }
        const XyzColor xyz{json_number(obj, "X"), json_number(obj, "Y"),
                           json_number(obj, "Z")};
        return forward_record(forward(xyz, vc), cfg.format);
    });
}

JobReport run_inverse_job(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    const ViewingConditions vc = cfg.make_viewing_conditions();
    const char* lcol = lightness_column(cfg.lightness);
    const char* ccol = chroma_column(cfg.chroma);
    const char* hcol = hue_column(cfg.hue);
    std::vector<std::string> lines = read_lines(in);

    auto make_selection = [&](double l, double c, double h) {
        CorrelateSelection sel;
        sel.lightness_kind = cfg.lightness;
        sel.lightness = l;
        sel.chroma_kind = cfg.chroma;
        sel.chroma = c;
        sel.hue_kind = cfg.hue;
        sel.hue = h;
        return sel;
    };

    if (cfg.format == JobFormat::Csv) {
        if (lines.empty()) return {};
        const CsvHeader header(lines.front());
        const std::size_t il = header.require(lcol);
        const std::size_t ic = header.require(ccol);
        const std::size_t ih = header.require(hcol);
        lines.erase(lines.begin());
        out << "X,Y,Z\n";
        return run_rows(lines, cfg.jobs, out, [&](const std::string& row) {
            const auto fields = split_csv(row);
            const std::size_t needed = std::max({il, ic, ih}) + 1;
            if (fields.size() < needed) {
                throw JobError("expected at least " + std::to_string(needed) + " fields");
            }
            const CorrelateSelection sel =
                make_selection(parse_double(fields[il], lcol), parse_double(fields[ic], ccol),
                               parse_double(fields[ih], hcol));
            return inverse_record(inverse(sel, vc), cfg.format);
        });
    }

    return run_rows(lines, cfg.jobs, out, [&](const std::string& row) {
        const nlohmann::json obj = nlohmann::json::parse(row, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw std::runtime_error("not a JSON object");
        }
        const CorrelateSelection sel = make_selection(
            json_number(obj, lcol), json_number(obj, ccol), json_number(obj, hcol));
        return inverse_record(inverse(sel, vc), cfg.format);
    });
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace cam16
