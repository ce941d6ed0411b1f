#ifndef RANGEKM_EVAL_REPORT_HPP
#define RANGEKM_EVAL_REPORT_HPP

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"
#include "../format.hpp"
#include "benchmark.hpp"

namespace rangekm::eval {

enum class ReportFormat { Table, Delimited };

inline constexpr std::string_view report_header = "dataset,n,strategy,accuracy_percent,elapsed_ms,iterations,final_sse";

inline ReportFormat parse_report_format(std::string_view text) {
    if (text == "table") {
        return ReportFormat::Table;
    }
    if (text == "csv") {
        return ReportFormat::Delimited;
    }
    throw InvalidConfig("unknown report format '" + std::string(text) + "'");
}

namespace detail {

inline std::array<std::string, 7> row_fields(const BenchmarkRow& row, bool exact) {
    auto num = [exact](double v, int precision) { return exact ? format_double(v) : format_fixed(v, precision); };
    return {row.dataset_name,
            std::to_string(row.n),
            std::string(to_string(row.strategy)),
            num(row.accuracy_percent, 2),
            num(row.elapsed_ms, 3),
            num(row.iterations, 2),
            num(row.final_sse, 4)};
}

} // namespace detail

/**
 * Render a report. Delimited output prints every number in shortest
 * round-trip form so parse_report recovers it exactly; the table form
 * rounds for reading.
 */
inline std::string emit_report(const BenchmarkReport& report, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Delimited) {
        out << report_header << '\n';
        for (const auto& row : report.rows) {
            const auto fields = detail::row_fields(row, true);
            for (std::size_t i = 0; i < fields.size(); ++i) {
                out << (i ? "," : "") << fields[i];
            }
            out << '\n';
        }
        return out.str();
    }

    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"dataset", "n", "strategy", "accuracy_percent", "elapsed_ms", "iterations", "final_sse"});
    for (const auto& row : report.rows) {
        cells.push_back(detail::row_fields(row, false));
    }
    std::array<std::size_t, 7> width{};
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) {
                out << "  ";
            }
            // Text columns left-aligned, numbers right-aligned.
            const bool left = i == 0 || i == 2;
            const std::string pad(width[i] - line[i].size(), ' ');
            out << (left ? line[i] + pad : pad + line[i]);
        }
        out << '\n';
    }
    return out.str();
}

/// Inverse of emit_report(..., Delimited).
inline BenchmarkReport parse_report(std::istream& in) {
    BenchmarkReport report;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line) || trim(line) != report_header) {
        throw ParseError(1, "expected report header '" + std::string(report_header) + "'");
    }
    ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto f = split(trim(line));
        if (f.size() != 7) {
            throw ParseError(lineno, "expected 7 fields, got " + std::to_string(f.size()));
        }
        BenchmarkRow row;
        row.dataset_name = std::string(f[0]);
        const auto n = parse_integer<std::size_t>(f[1]);
        const auto acc = parse_double(f[3]);
        const auto ms = parse_double(f[4]);
        const auto it = parse_double(f[5]);
        const auto sse = parse_double(f[6]);
        if (!n || !acc || !ms || !it || !sse) {
            throw ParseError(lineno, "malformed numeric field");
        }
        try {
            row.strategy = parse_strategy(f[2]);
        } catch (const InvalidConfig& e) {
            throw ParseError(lineno, e.what());
        }
        row.n = *n;
        row.accuracy_percent = *acc;
        row.elapsed_ms = *ms;
        row.iterations = *it;
        row.final_sse = *sse;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace rangekm::eval

#endif
