#ifndef RANGEKM_EVAL_PURITY_HPP
#define RANGEKM_EVAL_PURITY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "../dataset.hpp"
#include "../error.hpp"
#include "../kmeans.hpp"

namespace rangekm::eval {

/// A dataset paired with one category label per row.
struct LabeledDataset {
    std::string name;
    NumericDataset data;
    std::vector<std::string> labels;

    LabeledDataset(std::string name_, NumericDataset data_, std::vector<std::string> labels_)
        : name(std::move(name_)), data(std::move(data_)), labels(std::move(labels_)) {
        if (labels.size() != data.rows()) {
            throw ShapeError("expected " + std::to_string(data.rows()) + " labels, got "
                             + std::to_string(labels.size()));
        }
    }
};

/**
 * Weighted cluster purity, in percent: for each cluster count the rows that
 * carry its most common label, sum over clusters and divide by n.
 */
inline double purity_accuracy(const Assignment& assignment, const std::vector<std::string>& labels) {
    if (labels.size() != assignment.size()) {
        throw ShapeError("assignment has " + std::to_string(assignment.size()) + " rows but "
                         + std::to_string(labels.size()) + " labels were given");
    }
    if (labels.empty()) {
        throw ShapeError("cannot score an empty assignment");
    }

    std::map<std::size_t, std::map<std::string, std::size_t>> tally;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        ++tally[assignment[i]][labels[i]];
    }
    std::size_t majority_total = 0;
    for (const auto& [cluster, counts] : tally) {
        std::size_t best = 0;
        for (const auto& [label, count] : counts) {
            best = std::max(best, count);
        }
        majority_total += best;
    }
    return 100.0 * static_cast<double>(majority_total) / static_cast<double>(labels.size());
}

inline double purity_accuracy(const ClusteringResult& result, const std::vector<std::string>& labels) {
    return purity_accuracy(result.assignment, labels);
}

} // namespace rangekm::eval

#endif
