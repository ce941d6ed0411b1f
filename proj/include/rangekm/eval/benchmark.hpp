#ifndef RANGEKM_EVAL_BENCHMARK_HPP
#define RANGEKM_EVAL_BENCHMARK_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "../kmeans.hpp"
#include "../random.hpp"
#include "purity.hpp"

namespace rangekm::eval {

/// Averages over all repeats of one (dataset, strategy) pair.
struct BenchmarkRow {
    std::string dataset_name;
    std::size_t n = 0;
    InitStrategy strategy = InitStrategy::ImprovedRange;
    double accuracy_percent = 0;
    double elapsed_ms = 0;
    double iterations = 0;
    double final_sse = 0;

    bool operator==(const BenchmarkRow&) const = default;
};

struct BenchmarkReport {
    std::vector<BenchmarkRow> rows;
};

struct BenchmarkOptions {
    std::size_t k = 4;
    std::vector<InitStrategy> strategies{InitStrategy::Random, InitStrategy::ImprovedRange};
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 300;
    double tolerance = 1e-9;
};

/// Seed used by the Random strategy on repeat `r`.
inline std::uint64_t repeat_seed(std::uint64_t seed, std::size_t r) noexcept {
    return derive_seed(seed, r);
}

/**
 * @brief Cluster every dataset with every strategy and tabulate the means.
 *
 * Each pair is run `repeats` times. Random draws a fresh derived seed per
 * repeat; ImprovedRange ignores the seed and is rerun only for timing.
 * Elapsed time covers run_kmeans alone. Rows are ordered by dataset, then
 * by the order of `strategies`.
 */
inline BenchmarkReport run_benchmark(const std::vector<LabeledDataset>& datasets, const BenchmarkOptions& options) {
    if (options.repeats < 1) {
        throw InvalidConfig("repeats must be at least 1");
    }
    for (const auto& ds : datasets) {
        check_k(ds.data, options.k);
    }

    BenchmarkReport report;
    report.rows.reserve(datasets.size() * options.strategies.size());
    for (const auto& ds : datasets) {
        for (const auto strategy : options.strategies) {
            KMeansConfig config;
            config.k = options.k;
            config.max_iterations = options.max_iterations;
            config.tolerance = options.tolerance;
            config.init_strategy = strategy;

            BenchmarkRow row{ds.name, ds.data.rows(), strategy};
            for (std::size_t r = 0; r < options.repeats; ++r) {
                config.seed = repeat_seed(options.seed, r);
                const auto result = run_kmeans(ds.data, config);
                row.accuracy_percent += purity_accuracy(result, ds.labels);
                row.elapsed_ms += result.elapsed_ms();
                row.iterations += static_cast<double>(result.iterations);
                row.final_sse += result.final_sse();
            }
            const double reps = static_cast<double>(options.repeats);
            row.accuracy_percent /= reps;
            row.elapsed_ms /= reps;
            row.iterations /= reps;
            row.final_sse /= reps;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace rangekm::eval

#endif
