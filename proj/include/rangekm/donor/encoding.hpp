#ifndef RANGEKM_DONOR_ENCODING_HPP
#define RANGEKM_DONOR_ENCODING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../dataset.hpp"
#include "../error.hpp"
#include "records.hpp"

namespace rangekm::donor {

/// Ordinal codes for one categorical column: code i is categories[i], sorted ascending.
class CategoryCodes {
public:
    CategoryCodes() = default;

    explicit CategoryCodes(const std::set<std::string>& values) : categories_(values.begin(), values.end()) {}

    std::optional<std::size_t> code(const std::string& value) const {
        auto it = std::lower_bound(categories_.begin(), categories_.end(), value);
        if (it == categories_.end() || *it != value) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - categories_.begin());
    }

    const std::string& decode(std::size_t code) const {
        if (code >= categories_.size()) {
            throw IndexError("category code " + std::to_string(code) + " out of range");
        }
        return categories_[code];
    }

    std::size_t size() const noexcept { return categories_.size(); }
    const std::vector<std::string>& categories() const noexcept { return categories_; }

private:
    std::vector<std::string> categories_;
};

inline constexpr std::size_t age_column = 0;
inline constexpr std::size_t blood_group_column = 1;
inline constexpr std::size_t location_column = 2;

/// Donor records as a numeric matrix with columns (age, blood_group, location).
struct EncodedDonors {
    NumericDataset dataset;
    std::vector<DonorRecord> records;
    /// Keyed by column name: "blood_group" and "location".
    std::map<std::string, CategoryCodes> encoding_map;

    const CategoryCodes& codes(const std::string& column) const {
        auto it = encoding_map.find(column);
        if (it == encoding_map.end()) {
            throw IndexError("no categorical column named '" + column + "'");
        }
        return it->second;
    }

    /// Original category text of a categorical cell.
    const std::string& decode(std::size_t row, std::size_t col) const {
        const auto& name = dataset.column_names().at(col);
        return codes(name).decode(static_cast<std::size_t>(dataset.at(row, col)));
    }
};

/**
 * Age passes through unchanged; blood group and location become integer
 * codes in sorted order of the category text, starting at 0.
 */
inline EncodedDonors encode_donors(const std::vector<DonorRecord>& records) {
    if (records.empty()) {
        throw InvalidDataset("cannot encode an empty donor list");
    }
    std::set<std::string> groups;
    std::set<std::string> locations;
    for (const auto& r : records) {
        groups.insert(r.blood_group);
        locations.insert(r.location);
    }
    CategoryCodes group_codes(groups);
    CategoryCodes location_codes(locations);

    std::vector<Point> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({static_cast<double>(r.age), static_cast<double>(*group_codes.code(r.blood_group)),
                        static_cast<double>(*location_codes.code(r.location))});
    }
    return EncodedDonors{NumericDataset(rows, {"age", "blood_group", "location"}),
                         records,
                         {{"blood_group", std::move(group_codes)}, {"location", std::move(location_codes)}}};
}

} // namespace rangekm::donor

#endif
