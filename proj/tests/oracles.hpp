// Brute-force reference computations used by the unit and acceptance suites.
// Nothing here calls into the clustering code paths it is used to check.

#ifndef RANGEKM_TESTS_ORACLES_HPP
#define RANGEKM_TESTS_ORACLES_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rangekm/dataset.hpp"
#include "rangekm/donor/records.hpp"

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline Rows to_rows(const rangekm::NumericDataset& ds) {
    Rows out(ds.rows(), std::vector<double>(ds.cols()));
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            out[i][j] = ds.at(i, j);
        }
    }
    return out;
}

inline double sq(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += (a[j] - b[j]) * (a[j] - b[j]);
    }
    return s;
}

/// Exhaustive nearest-centroid scan; strict '<' keeps the lowest index on ties.
inline std::vector<std::size_t> nearest_scan(const Rows& points, const Rows& centres) {
    std::vector<std::size_t> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centres.size(); ++c) {
            const double d = sq(points[i], centres[c]);
            if (d < best) {
                best = d;
                out[i] = c;
            }
        }
    }
    return out;
}

/// SSE of a labelling, using each group's own mean.
inline double partition_sse(const Rows& points, const std::vector<std::size_t>& group, std::size_t k) {
    const std::size_t m = points.front().size();
    Rows mean(k, std::vector<double>(m, 0.0));
    std::vector<double> count(k, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        count[group[i]] += 1;
        for (std::size_t j = 0; j < m; ++j) {
            mean[group[i]][j] += points[i][j];
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (auto& v : mean[c]) {
            v = count[c] > 0 ? v / count[c] : 0.0;
        }
    }
    double s = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        s += sq(points[i], mean[group[i]]);
    }
    return s;
}

struct BestSplit {
    double sse = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> group;
    std::size_t optimal_count = 0;
};

/// Global optimum over every split of the rows into two non-empty groups.
inline BestSplit best_two_partition(const Rows& points, double tie_eps = 1e-12) {
    const std::size_t n = points.size();
    BestSplit best;
    // Fix row 0 in group 0 so each unordered split is visited once.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> group(n, 0);
        std::size_t ones = 0;
        for (std::size_t i = 1; i < n; ++i) {
            group[i] = (mask >> (i - 1)) & 1;
            ones += group[i];
        }
        if (ones == 0) {
            continue;
        }
        const double s = partition_sse(points, group, 2);
        if (s < best.sse - tie_eps) {
            best = {s, group, 1};
        } else if (s <= best.sse + tie_eps) {
            ++best.optimal_count;
        }
    }
    return best;
}

/// Majority-label count per cluster, summed, over n, in percent.
inline double purity(const std::vector<std::size_t>& cluster, const std::vector<std::string>& labels) {
    std::map<std::size_t, std::map<std::string, int>> counts;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        counts[cluster[i]][labels[i]]++;
    }
    int total = 0;
    for (auto& [c, by_label] : counts) {
        int best = 0;
        for (auto& [l, v] : by_label) {
            best = v > best ? v : best;
        }
        total += best;
    }
    return 100.0 * total / static_cast<double>(cluster.size());
}

inline std::vector<rangekm::donor::DonorRecord> scan_filter(const std::vector<rangekm::donor::DonorRecord>& all,
                                                             const std::string& group, const std::string& location) {
    std::vector<rangekm::donor::DonorRecord> out;
    for (const auto& r : all) {
        if (r.blood_group == group && r.location == location) {
            out.push_back(r);
        }
    }
    return out;
}

/// Uniform random rows in [lo, hi)^m.
inline Rows random_rows(std::mt19937_64& rng, std::size_t n, std::size_t m, double lo = -10, double hi = 10) {
    std::uniform_real_distribution<double> u(lo, hi);
    Rows out(n, std::vector<double>(m));
    for (auto& r : out) {
        for (auto& v : r) {
            v = u(rng);
        }
    }
    return out;
}

} // namespace oracle

#endif
