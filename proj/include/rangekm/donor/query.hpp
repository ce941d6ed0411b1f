#ifndef RANGEKM_DONOR_QUERY_HPP
#define RANGEKM_DONOR_QUERY_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "../distance.hpp"
#include "../kmeans.hpp"
#include "encoding.hpp"
#include "records.hpp"

namespace rangekm::donor {

struct QueryResult {
    std::vector<DonorRecord> matched;
    std::size_t cluster_id = 0;
    std::size_t cluster_size = 0;
    std::string blood_group;
    std::string location;
};

inline double column_median(const NumericDataset& dataset, std::size_t col) {
    std::vector<double> values(dataset.rows());
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        values[i] = dataset.at(i, col);
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

/**
 * @brief Point in encoded space representing a (blood group, location) request.
 *
 * The categorical columns take the query's codes; every other column takes
 * its median so the point lands in the bulk of the data. A blood group that
 * no donor has is placed at its sorted insertion position.
 */
inline Point query_point(const EncodedDonors& encoded, const std::string& blood_group, const std::string& location) {
    const auto& loc_codes = encoded.codes("location");
    const auto loc = loc_codes.code(location);
    if (!loc) {
        throw UnknownLocation(location);
    }
    const auto& group_codes = encoded.codes("blood_group").categories();
    const auto group_pos = std::lower_bound(group_codes.begin(), group_codes.end(), blood_group) - group_codes.begin();

    Point q(encoded.dataset.cols());
    for (std::size_t j = 0; j < q.size(); ++j) {
        q[j] = column_median(encoded.dataset, j);
    }
    q[blood_group_column] = static_cast<double>(group_pos);
    q[location_column] = static_cast<double>(*loc);
    return q;
}

/**
 * Pick the cluster whose centroid is nearest the query point, then return
 * its members whose blood group and location match exactly. An empty match
 * is a normal result.
 */
inline QueryResult query_donors(const EncodedDonors& encoded, const ClusteringResult& result,
                                const std::string& blood_group, const std::string& location) {
    if (result.assignment.size() != encoded.records.size()) {
        throw ShapeError("clustering result has " + std::to_string(result.assignment.size()) + " rows, donors have "
                         + std::to_string(encoded.records.size()));
    }
    const std::string group = normalize_blood_group(blood_group);
    const Point q = query_point(encoded, group, location);

    QueryResult out;
    out.blood_group = group;
    out.location = location;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < result.centroids.size(); ++c) {
        const double d = squared_distance(q, result.centroids[c]);
        if (d < best) {
            best = d;
            out.cluster_id = c;
        }
    }
    for (std::size_t i = 0; i < encoded.records.size(); ++i) {
        if (result.assignment[i] != out.cluster_id) {
            continue;
        }
        ++out.cluster_size;
        const auto& rec = encoded.records[i];
        if (rec.blood_group == group && rec.location == location) {
            out.matched.push_back(rec);
        }
    }
    return out;
}

} // namespace rangekm::donor

#endif
