#ifndef RANGEKM_DISTANCE_HPP
#define RANGEKM_DISTANCE_HPP

#include <cmath>
#include <concepts>
#include <span>

#include "error.hpp"

namespace rangekm {

/// Sum of squared coordinate differences. Throws DimensionMismatch when a and b differ in length.
template <std::floating_point T>
T squared_distance(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(a.size(), b.size());
    }
    T total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const T delta = a[j] - b[j];
        total += delta * delta;
    }
    return total;
}

template <std::floating_point T>
T euclidean_distance(std::span<const T> a, std::span<const T> b) {
    return std::sqrt(squared_distance(a, b));
}

// Non-template overloads so that vectors and spans of double convert implicitly.
inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    return squared_distance<double>(a, b);
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return euclidean_distance<double>(a, b);
}

} // namespace rangekm

#endif
