#ifndef RANGEKM_INIT_HPP
#define RANGEKM_INIT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dataset.hpp"
#include "error.hpp"
#include "random.hpp"

/**
 * @file init.hpp
 *
 * @brief Initial centroid selection.
 *
 * Two strategies are provided: the classic random pick of k data rows, and
 * the deterministic range-based placement that spaces centroids evenly
 * inside each column's [min, max] interval. The range-based path also
 * supplies the equal-partition pre-assignment that seeds its first update.
 */

namespace rangekm {

struct ColumnRange {
    double min = 0;
    double max = 0;
    double range = 0;

    bool operator==(const ColumnRange&) const = default;
};

inline void check_k(const NumericDataset& dataset, std::size_t k) {
    if (k < 1 || k > dataset.rows()) {
        throw InvalidK(k, dataset.rows());
    }
}

inline ColumnRange column_range(const NumericDataset& dataset, std::size_t col) {
    if (col >= dataset.cols()) {
        throw IndexError("column " + std::to_string(col) + " out of bounds for " + std::to_string(dataset.cols())
                         + " columns");
    }
    ColumnRange out{dataset.at(0, col), dataset.at(0, col), 0};
    for (std::size_t i = 1; i < dataset.rows(); ++i) {
        out.min = std::min(out.min, dataset.at(i, col));
        out.max = std::max(out.max, dataset.at(i, col));
    }
    out.range = out.max - out.min;
    return out;
}

/// Column with the largest max - min; ties go to the lowest index.
inline std::size_t max_range_column(const NumericDataset& dataset) {
    std::size_t best = 0;
    double best_range = column_range(dataset, 0).range;
    for (std::size_t j = 1; j < dataset.cols(); ++j) {
        const double r = column_range(dataset, j).range;
        if (r > best_range) {
            best = j;
            best_range = r;
        }
    }
    return best;
}

/**
 * @brief Evenly spaced centroids inside the bounding box of the data.
 *
 * Centroid j (1-based) has coordinate `min_x + j * (max_x - min_x) / (k + 1)`
 * in every column x, so the k centroids split each column's range into k + 1
 * equal gaps. No randomness is involved.
 */
inline Centroids improved_initial_centroids(const NumericDataset& dataset, std::size_t k) {
    check_k(dataset, k);
    const std::size_t m = dataset.cols();
    Centroids out(k, m);
    for (std::size_t x = 0; x < m; ++x) {
        const auto span = column_range(dataset, x);
        const double step = span.range / static_cast<double>(k + 1);
        for (std::size_t c = 0; c < k; ++c) {
            const double v = span.min + static_cast<double>(c + 1) * step;
            // Guard the upper bound against rounding when the range is huge.
            out.mutable_point(c)[x] = std::clamp(v, span.min, span.max);
        }
    }
    return out;
}

/// k distinct rows drawn uniformly without replacement; a pure function of (dataset, k, seed).
inline Centroids random_initial_centroids(const NumericDataset& dataset, std::size_t k, std::uint64_t seed) {
    check_k(dataset, k);
    const std::size_t n = dataset.rows();
    Engine engine(seed);

    // Partial Fisher-Yates over the row indices.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_below(engine, n - i));
        std::swap(order[i], order[j]);
    }

    Centroids out(k, dataset.cols());
    for (std::size_t c = 0; c < k; ++c) {
        auto src = dataset.row(order[c]);
        std::copy(src.begin(), src.end(), out.mutable_point(c).begin());
    }
    return out;
}

/**
 * @brief Split rows into k contiguous, nearly equal blocks.
 *
 * Rows are ranked by their value in the max-range column (stable, so equal
 * values keep row order). The first n % k blocks get one extra row. Block i
 * becomes cluster i.
 */
inline Assignment initial_partition_assign(const NumericDataset& dataset, std::size_t k) {
    check_k(dataset, k);
    const std::size_t n = dataset.rows();
    const std::size_t key = max_range_column(dataset);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dataset.at(a, key) < dataset.at(b, key); });

    Assignment out{std::vector<std::size_t>(n, 0), k};
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t len = base + (c < extra ? 1 : 0);
        for (std::size_t r = 0; r < len; ++r) {
            out.cluster_of[order[pos++]] = c;
        }
    }
    return out;
}

} // namespace rangekm

#endif
