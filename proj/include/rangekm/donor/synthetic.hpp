#ifndef RANGEKM_DONOR_SYNTHETIC_HPP
#define RANGEKM_DONOR_SYNTHETIC_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../random.hpp"
#include "records.hpp"

namespace rangekm::donor {

struct DonorFixtureSpec {
    std::size_t total = 200;
    std::size_t cohort_size = 7;
    std::string cohort_group = "O-";
    std::string cohort_location = "Visakhapatnam";
    std::vector<std::string> locations{"Chennai", "Delhi", "Hyderabad", "Mumbai", "Visakhapatnam"};
    std::uint64_t seed = 0;
};

/**
 * @brief Synthetic donor table with a planted (group, location) cohort.
 *
 * The cohort is the only set of donors with that exact group and location,
 * and all its members share the median age of the table: the remaining
 * donors are split between a younger band (18-35) and an older band
 * (45-65) around it. Other donors still share the cohort's group or its
 * location, so an exact filter is needed to isolate it. Rows are shuffled.
 */
inline std::vector<DonorRecord> make_donor_fixture(const DonorFixtureSpec& spec) {
    if (spec.cohort_size > spec.total) {
        throw InvalidConfig("cohort larger than the fixture");
    }
    if (spec.locations.empty()) {
        throw InvalidConfig("fixture needs at least one location");
    }
    const std::string group = normalize_blood_group(spec.cohort_group);
    constexpr int cohort_age = 40;

    Engine engine(spec.seed);
    const std::size_t others = spec.total - spec.cohort_size;
    const std::size_t younger = others / 2;

    std::vector<DonorRecord> rows;
    rows.reserve(spec.total);
    for (std::size_t i = 0; i < spec.cohort_size; ++i) {
        rows.push_back({"", "", cohort_age, group, spec.cohort_location, ""});
    }
    for (std::size_t i = 0; i < others; ++i) {
        DonorRecord r;
        r.age = i < younger ? 18 + static_cast<int>(uniform_below(engine, 18))
                            : 45 + static_cast<int>(uniform_below(engine, 21));
        do {
            r.blood_group = std::string(blood_groups[uniform_below(engine, blood_groups.size())]);
            r.location = spec.locations[uniform_below(engine, spec.locations.size())];
        } while (r.blood_group == group && r.location == spec.cohort_location);
        rows.push_back(std::move(r));
    }

    for (std::size_t i = rows.size(); i > 1; --i) {
        std::swap(rows[i - 1], rows[uniform_below(engine, i)]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto num = std::to_string(i + 1);
        rows[i].donor_id = "D" + std::string(4 - std::min<std::size_t>(4, num.size()), '0') + num;
        rows[i].name = "Donor " + num;
        rows[i].mail_id = "donor" + num + "@example.org";
    }
    return rows;
}

} // namespace rangekm::donor

#endif
