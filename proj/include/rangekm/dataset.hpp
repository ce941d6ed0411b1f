#ifndef RANGEKM_DATASET_HPP
#define RANGEKM_DATASET_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

/**
 * @file dataset.hpp
 *
 * @brief Value types shared by every clustering routine.
 *
 * All types store their coordinates row-major in a single contiguous buffer
 * and hand out `std::span<const double>` views per row. Once constructed
 * they are never mutated by library code.
 */

namespace rangekm {

using Point = std::vector<double>;

/**
 * @brief An n-by-m matrix of finite real values with column labels.
 *
 * Construction validates the shape: at least one row and one column,
 * every row of equal length, and no NaN or infinite entries.
 */
class NumericDataset {
public:
    NumericDataset(const std::vector<Point>& rows, std::vector<std::string> column_names = {})
        : column_names_(std::move(column_names)) {
        if (rows.empty()) {
            throw InvalidDataset("dataset must contain at least one row");
        }
        n_ = rows.size();
        m_ = rows.front().size();
        if (m_ == 0) {
            throw InvalidDataset("dataset must contain at least one column");
        }
        values_.reserve(n_ * m_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != m_) {
                throw InvalidDataset("row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                                     + " values, expected " + std::to_string(m_));
            }
            for (double v : rows[i]) {
                if (!std::isfinite(v)) {
                    throw InvalidDataset("row " + std::to_string(i) + " contains a non-finite value");
                }
                values_.push_back(v);
            }
        }
        if (column_names_.empty()) {
            column_names_.reserve(m_);
            for (std::size_t j = 0; j < m_; ++j) {
                column_names_.push_back("x" + std::to_string(j));
            }
        } else if (column_names_.size() != m_) {
            throw InvalidDataset("expected " + std::to_string(m_) + " column names, got "
                                 + std::to_string(column_names_.size()));
        }
    }

    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return m_; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * m_, m_};
    }

    double at(std::size_t i, std::size_t j) const noexcept { return values_[i * m_ + j]; }

    const std::vector<std::string>& column_names() const noexcept { return column_names_; }

    /// Row-major copy of the values, for bitwise comparison in tests.
    const std::vector<double>& values() const noexcept { return values_; }

    bool operator==(const NumericDataset&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<double> values_;
    std::vector<std::string> column_names_;
};

/// k cluster centres of dimension m.
class Centroids {
public:
    Centroids(std::size_t k, std::size_t m) : k_(k), m_(m), values_(k * m, 0.0) {}

    explicit Centroids(const std::vector<Point>& points) {
        if (points.empty()) {
            throw InvalidConfig("centroid set must not be empty");
        }
        k_ = points.size();
        m_ = points.front().size();
        values_.reserve(k_ * m_);
        for (const auto& p : points) {
            if (p.size() != m_) {
                throw DimensionMismatch(m_, p.size());
            }
            values_.insert(values_.end(), p.begin(), p.end());
        }
    }

    std::size_t size() const noexcept { return k_; }
    std::size_t dim() const noexcept { return m_; }

    std::span<const double> operator[](std::size_t c) const noexcept {
        return {values_.data() + c * m_, m_};
    }

    std::span<double> mutable_point(std::size_t c) noexcept { return {values_.data() + c * m_, m_}; }

    Point point(std::size_t c) const {
        auto p = (*this)[c];
        return {p.begin(), p.end()};
    }

    const std::vector<double>& values() const noexcept { return values_; }

    bool operator==(const Centroids&) const = default;

private:
    std::size_t k_ = 0;
    std::size_t m_ = 0;
    std::vector<double> values_;
};

/// Cluster index for every row; each index lies in [0, k).
struct Assignment {
    std::vector<std::size_t> cluster_of;
    std::size_t k = 0;

    std::size_t size() const noexcept { return cluster_of.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return cluster_of[i]; }

    std::vector<std::size_t> cluster_sizes() const {
        std::vector<std::size_t> counts(k, 0);
        for (auto c : cluster_of) {
            ++counts[c];
        }
        return counts;
    }

    bool operator==(const Assignment&) const = default;
};

} // namespace rangekm

#endif
