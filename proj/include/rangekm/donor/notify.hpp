#ifndef RANGEKM_DONOR_NOTIFY_HPP
#define RANGEKM_DONOR_NOTIFY_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <unordered_set>

#include "../error.hpp"
#include "query.hpp"

namespace rangekm::donor {

inline std::string notification_subject(const std::string& blood_group, const std::string& location) {
    return "Blood donation request: " + blood_group + " at " + location;
}

inline std::string compose_message(const DonorRecord& donor, const std::string& subject, const std::string& body) {
    return "To: " + donor.mail_id + "\nSubject: " + subject + "\n\n" + body;
}

/**
 * @brief Write one `<donor_id>.msg` file per matched donor into `outbox`.
 *
 * Nothing is transmitted; the outbox directory stands in for mail delivery.
 * The directory is created on demand. With no matches nothing is written
 * and the directory is left untouched. Returns the number of files written.
 */
inline std::size_t compose_notifications(const QueryResult& result, const std::string& message_body,
                                         const std::filesystem::path& outbox) {
    if (result.matched.empty()) {
        return 0;
    }
    std::unordered_set<std::string> ids;
    for (const auto& donor : result.matched) {
        if (donor.donor_id.find_first_of("/\\") != std::string::npos || donor.donor_id == "." || donor.donor_id == "..") {
            throw ValidationError(donor.donor_id, "donor id '" + donor.donor_id + "' is not usable as a file name");
        }
        if (!ids.insert(donor.donor_id).second) {
            throw DuplicateKey(donor.donor_id);
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(outbox, ec);
    if (ec || !std::filesystem::is_directory(outbox)) {
        throw IoError("cannot create outbox directory '" + outbox.string() + "'"
                      + (ec ? ": " + ec.message() : std::string{}));
    }

    const auto subject = notification_subject(result.blood_group, result.location);
    std::size_t written = 0;
    for (const auto& donor : result.matched) {
        const auto path = outbox / (donor.donor_id + ".msg");
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        file << compose_message(donor, subject, message_body);
        file.close();
        if (!file) {
            throw IoError("failed to write '" + path.string() + "'");
        }
        ++written;
    }
    return written;
}

} // namespace rangekm::donor

#endif
