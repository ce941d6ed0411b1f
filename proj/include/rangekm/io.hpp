#ifndef RANGEKM_IO_HPP
#define RANGEKM_IO_HPP

#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "error.hpp"
#include "format.hpp"

namespace rangekm {

/// Comma-delimited numeric table: a header of column names, then one row of numbers per line.
inline NumericDataset load_numeric_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line).empty()) {
        throw ParseError(1, "missing header");
    }
    std::vector<std::string> names;
    for (auto f : split(trim(line))) {
        if (trim(f).empty()) {
            throw ParseError(1, "empty column name");
        }
        names.emplace_back(trim(f));
    }

    std::vector<Point> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(trim(line));
        if (fields.size() != names.size()) {
            throw ParseError(lineno, "expected " + std::to_string(names.size()) + " fields, got "
                                         + std::to_string(fields.size()));
        }
        Point row;
        row.reserve(fields.size());
        for (auto f : fields) {
            const auto v = parse_double(f);
            if (!v || !std::isfinite(*v)) {
                throw ParseError(lineno, "not a finite number: '" + std::string(trim(f)) + "'");
            }
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(lineno, "no data rows");
    }
    return NumericDataset(rows, std::move(names));
}

inline void write_numeric_csv(std::ostream& out, const NumericDataset& dataset) {
    const auto& names = dataset.column_names();
    for (std::size_t j = 0; j < names.size(); ++j) {
        out << (j ? "," : "") << names[j];
    }
    out << '\n';
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        for (std::size_t j = 0; j < dataset.cols(); ++j) {
            out << (j ? "," : "") << format_double(dataset.at(i, j));
        }
        out << '\n';
    }
}

inline void write_assignment_csv(std::ostream& out, const Assignment& assignment) {
    out << "row_index,cluster_id\n";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        out << i << ',' << assignment[i] << '\n';
    }
}

inline void write_centroids_csv(std::ostream& out, const Centroids& centroids,
                                const std::vector<std::string>& column_names) {
    if (column_names.size() != centroids.dim()) {
        throw DimensionMismatch(centroids.dim(), column_names.size());
    }
    out << "cluster_id";
    for (const auto& name : column_names) {
        out << ',' << name;
    }
    out << '\n';
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        out << c;
        for (double v : centroids[c]) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
}

} // namespace rangekm

#endif
