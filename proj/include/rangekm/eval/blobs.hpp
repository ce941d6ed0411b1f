#ifndef RANGEKM_EVAL_BLOBS_HPP
#define RANGEKM_EVAL_BLOBS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../random.hpp"
#include "purity.hpp"

namespace rangekm::eval {

struct BlobSpec {
    std::size_t cluster_count = 4;
    std::size_t points_per_cluster = 250;
    std::size_t dimension = 2;
    double center_spread = 10.0;
    double noise_stddev = 1.0;
    std::uint64_t seed = 0;
};

inline void validate(const BlobSpec& spec) {
    if (spec.cluster_count < 1 || spec.points_per_cluster < 1 || spec.dimension < 1) {
        throw InvalidConfig("blob counts must all be at least 1");
    }
    if (!(spec.center_spread > 0) || !std::isfinite(spec.center_spread)) {
        throw InvalidConfig("center_spread must be positive");
    }
    if (!(spec.noise_stddev >= 0) || !std::isfinite(spec.noise_stddev)) {
        throw InvalidConfig("noise_stddev must be non-negative");
    }
}

/**
 * @brief Isotropic Gaussian blobs along the main diagonal.
 *
 * Blob c is centred at `c * center_spread` in every coordinate, so
 * neighbouring centres are `center_spread * sqrt(dimension)` apart. Rows
 * are emitted blob by blob; the label of a row is its blob index.
 */
inline LabeledDataset generate_blobs(const BlobSpec& spec, std::string name = {}) {
    validate(spec);
    Engine engine(spec.seed);
    std::normal_distribution<double> noise(0.0, 1.0);

    const std::size_t n = spec.cluster_count * spec.points_per_cluster;
    std::vector<Point> rows;
    std::vector<std::string> labels;
    rows.reserve(n);
    labels.reserve(n);
    for (std::size_t c = 0; c < spec.cluster_count; ++c) {
        const double centre = static_cast<double>(c) * spec.center_spread;
        for (std::size_t p = 0; p < spec.points_per_cluster; ++p) {
            Point row(spec.dimension);
            for (auto& v : row) {
                v = centre + spec.noise_stddev * noise(engine);
            }
            rows.push_back(std::move(row));
            labels.push_back(std::to_string(c));
        }
    }
    if (name.empty()) {
        name = "blobs-" + std::to_string(n);
    }
    return LabeledDataset(std::move(name), NumericDataset(rows), std::move(labels));
}

} // namespace rangekm::eval

#endif
