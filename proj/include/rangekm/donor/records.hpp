#ifndef RANGEKM_DONOR_RECORDS_HPP
#define RANGEKM_DONOR_RECORDS_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "../error.hpp"
#include "../format.hpp"

namespace rangekm::donor {

inline constexpr std::string_view donor_header = "donor_id,name,age,blood_group,location,mail_id";

inline constexpr std::array<std::string_view, 8> blood_groups{"A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-"};

struct DonorRecord {
    std::string donor_id;
    std::string name;
    int age = 0;
    std::string blood_group;
    std::string location;
    std::string mail_id;

    bool operator==(const DonorRecord&) const = default;
};

/// Trim and upper-case; throws ValidationError unless the result is one of the eight ABO/Rh groups.
inline std::string normalize_blood_group(std::string_view text) {
    std::string out(trim(text));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (std::find(blood_groups.begin(), blood_groups.end(), out) == blood_groups.end()) {
        throw ValidationError(std::string(trim(text)), "unknown blood group '" + std::string(trim(text)) + "'");
    }
    return out;
}

inline bool valid_mail_id(std::string_view mail) {
    return std::count(mail.begin(), mail.end(), '@') == 1;
}

/**
 * @brief Read donor records from the comma-delimited donor format.
 *
 * The header must match `donor_header` exactly. Fields are trimmed; blank
 * lines are skipped. Quoted fields are not supported and are rejected, as
 * is any line without exactly six fields.
 */
inline std::vector<DonorRecord> load_donors(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) {
        throw ParseError(1, "missing header");
    }
    if (trim(line) != donor_header) {
        throw ParseError(1, "expected header '" + std::string(donor_header) + "'");
    }

    std::vector<DonorRecord> records;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (body.find('"') != std::string_view::npos) {
            throw ParseError(lineno, "quoted fields are not supported");
        }
        const auto f = split(body);
        if (f.size() != 6) {
            throw ParseError(lineno, "expected 6 fields, got " + std::to_string(f.size()));
        }

        DonorRecord rec;
        rec.donor_id = std::string(trim(f[0]));
        rec.name = std::string(trim(f[1]));
        rec.location = std::string(trim(f[4]));
        rec.mail_id = std::string(trim(f[5]));
        if (rec.donor_id.empty()) {
            throw ParseError(lineno, "empty donor_id");
        }
        if (rec.location.empty()) {
            throw ParseError(lineno, "empty location");
        }
        const auto age = parse_integer<int>(f[2]);
        if (!age) {
            throw ParseError(lineno, "malformed age '" + std::string(trim(f[2])) + "'");
        }
        if (*age < 0) {
            throw ValidationError(std::string(trim(f[2])), "line " + std::to_string(lineno) + ": negative age");
        }
        rec.age = *age;
        try {
            rec.blood_group = normalize_blood_group(f[3]);
        } catch (const ValidationError& e) {
            throw ValidationError(e.value(), "line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!valid_mail_id(rec.mail_id)) {
            throw ValidationError(rec.mail_id, "line " + std::to_string(lineno) + ": mail id '" + rec.mail_id
                                                   + "' must contain exactly one '@'");
        }
        if (!seen.insert(rec.donor_id).second) {
            throw DuplicateKey(rec.donor_id);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

/// Writes header plus one line per record; load_donors reads it back unchanged.
inline void write_donors(std::ostream& out, const std::vector<DonorRecord>& records) {
    out << donor_header << '\n';
    for (const auto& r : records) {
        out << r.donor_id << ',' << r.name << ',' << r.age << ',' << r.blood_group << ',' << r.location << ','
            << r.mail_id << '\n';
    }
}

} // namespace rangekm::donor

#endif
