#ifndef RANGEKM_KMEANS_HPP
#define RANGEKM_KMEANS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "dataset.hpp"
#include "distance.hpp"
#include "error.hpp"
#include "init.hpp"

/**
 * @file kmeans.hpp
 *
 * @brief Lloyd iteration driven by either initialization strategy.
 */

namespace rangekm {

enum class InitStrategy { Random, ImprovedRange };

inline std::string_view to_string(InitStrategy s) noexcept {
    return s == InitStrategy::Random ? "random" : "improved";
}

inline InitStrategy parse_strategy(std::string_view text) {
    if (text == "random") {
        return InitStrategy::Random;
    }
    if (text == "improved") {
        return InitStrategy::ImprovedRange;
    }
    throw InvalidConfig("unknown init strategy '" + std::string(text) + "'");
}

struct KMeansConfig {
    std::size_t k = 2;
    std::size_t max_iterations = 300;
    /// Largest per-coordinate centroid shift that still counts as converged.
    double tolerance = 1e-9;
    InitStrategy init_strategy = InitStrategy::ImprovedRange;
    /// Only consulted by InitStrategy::Random.
    std::uint64_t seed = 0;
};

inline void validate(const KMeansConfig& config, const NumericDataset& dataset) {
    check_k(dataset, config.k);
    if (config.max_iterations < 1) {
        throw InvalidConfig("max_iterations must be at least 1");
    }
    if (!(config.tolerance >= 0) || !std::isfinite(config.tolerance)) {
        throw InvalidConfig("tolerance must be a finite non-negative number");
    }
}

struct ClusteringResult {
    Assignment assignment;
    Centroids centroids;
    /// SSE after each assignment step, starting with the assignment to the initial centroids.
    std::vector<double> sse_trace;
    std::size_t iterations = 0;
    /// False when the run stopped on the iteration cap.
    bool converged = false;
    std::chrono::nanoseconds elapsed{0};

    double final_sse() const noexcept { return sse_trace.empty() ? 0.0 : sse_trace.back(); }

    double elapsed_ms() const noexcept { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

/// Nearest centroid per row; distance ties go to the lower centroid index.
inline Assignment assign_points(const NumericDataset& dataset, const Centroids& centroids) {
    if (centroids.dim() != dataset.cols()) {
        throw DimensionMismatch(dataset.cols(), centroids.dim());
    }
    Assignment out{std::vector<std::size_t>(dataset.rows(), 0), centroids.size()};
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        const auto row = dataset.row(i);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            const double d = squared_distance(row, centroids[c]);
            if (d < best) {
                best = d;
                best_c = c;
            }
        }
        out.cluster_of[i] = best_c;
    }
    return out;
}

inline void check_assignment(const NumericDataset& dataset, const Assignment& assignment, std::size_t k) {
    if (assignment.size() != dataset.rows()) {
        throw ShapeError("assignment has " + std::to_string(assignment.size()) + " entries for "
                         + std::to_string(dataset.rows()) + " rows");
    }
    for (auto c : assignment.cluster_of) {
        if (c >= k) {
            throw IndexError("cluster index " + std::to_string(c) + " out of range for k = " + std::to_string(k));
        }
    }
}

/**
 * @brief Recompute each centroid as the mean of its rows.
 *
 * An empty cluster is moved onto the row farthest from its previous
 * centroid, skipping rows that are the only member of their cluster and
 * rows already claimed by an earlier empty cluster in the same pass. If no
 * row is eligible the previous centroid is kept.
 */
inline Centroids update_centroids(const NumericDataset& dataset, const Assignment& assignment, std::size_t k,
                                  const Centroids& previous) {
    check_assignment(dataset, assignment, k);
    if (previous.size() != k) {
        throw ShapeError("previous centroid set has " + std::to_string(previous.size()) + " entries, expected "
                         + std::to_string(k));
    }
    if (previous.dim() != dataset.cols()) {
        throw DimensionMismatch(dataset.cols(), previous.dim());
    }

    const std::size_t m = dataset.cols();
    Centroids out(k, m);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        const auto c = assignment[i];
        ++counts[c];
        auto sum = out.mutable_point(c);
        const auto row = dataset.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            sum[j] += row[j];
        }
    }

    std::vector<std::size_t> remaining = counts;
    std::vector<bool> claimed(dataset.rows(), false);
    for (std::size_t c = 0; c < k; ++c) {
        auto point = out.mutable_point(c);
        if (counts[c] > 0) {
            const double denom = static_cast<double>(counts[c]);
            for (auto& v : point) {
                v /= denom;
            }
            continue;
        }

        double far = -1;
        std::size_t pick = dataset.rows();
        for (std::size_t i = 0; i < dataset.rows(); ++i) {
            if (claimed[i] || remaining[assignment[i]] <= 1) {
                continue;
            }
            const double d = squared_distance(dataset.row(i), previous[c]);
            if (d > far) {
                far = d;
                pick = i;
            }
        }

        if (pick == dataset.rows()) {
            auto prev = previous[c];
            std::copy(prev.begin(), prev.end(), point.begin());
        } else {
            claimed[pick] = true;
            --remaining[assignment[pick]];
            auto src = dataset.row(pick);
            std::copy(src.begin(), src.end(), point.begin());
        }
    }
    return out;
}

/// Sum over rows of the squared distance to the assigned centroid.
inline double sum_squared_error(const NumericDataset& dataset, const Assignment& assignment,
                                const Centroids& centroids) {
    check_assignment(dataset, assignment, centroids.size());
    double total = 0;
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        total += squared_distance(dataset.row(i), centroids[assignment[i]]);
    }
    return total;
}

/// Largest absolute per-coordinate difference between two centroid sets of equal shape.
inline double max_displacement(const Centroids& a, const Centroids& b) {
    double out = 0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t i = 0; i < va.size(); ++i) {
        out = std::max(out, std::abs(va[i] - vb[i]));
    }
    return out;
}

/// Starting centroids for a run, before any Lloyd iteration.
inline Centroids starting_centroids(const NumericDataset& dataset, const KMeansConfig& config) {
    if (config.init_strategy == InitStrategy::Random) {
        return random_initial_centroids(dataset, config.k, config.seed);
    }
    // Range-spaced centroids, then one mean update over the equal-size pre-partition.
    const auto spaced = improved_initial_centroids(dataset, config.k);
    const auto blocks = initial_partition_assign(dataset, config.k);
    return update_centroids(dataset, blocks, config.k, spaced);
}

/**
 * @brief Run k-means to convergence.
 *
 * Each iteration recomputes the centroids from the current assignment and
 * then reassigns every row. The loop stops once no centroid coordinate
 * moves by more than `config.tolerance`, or after `config.max_iterations`
 * iterations. The returned assignment is always the nearest-centroid
 * assignment of the returned centroids.
 */
inline ClusteringResult run_kmeans(const NumericDataset& dataset, const KMeansConfig& config) {
    validate(config, dataset);
    const auto start = std::chrono::steady_clock::now();

    auto centroids = starting_centroids(dataset, config);
    auto assignment = assign_points(dataset, centroids);
    std::vector<double> trace{sum_squared_error(dataset, assignment, centroids)};

    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < config.max_iterations) {
        auto next = update_centroids(dataset, assignment, config.k, centroids);
        const double shift = max_displacement(next, centroids);
        centroids = std::move(next);
        assignment = assign_points(dataset, centroids);
        trace.push_back(sum_squared_error(dataset, assignment, centroids));
        ++iterations;
        if (shift <= config.tolerance) {
            converged = true;
            break;
        }
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    return ClusteringResult{std::move(assignment), std::move(centroids), std::move(trace), iterations, converged,
                            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

} // namespace rangekm

#endif
