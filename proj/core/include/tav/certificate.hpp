#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tav/catalog.hpp"
#include "tav/determinant.hpp"
#include "tav/knot_table.hpp"

namespace tav {

std::string toolkit_version();
// current UTC time, ISO 8601
std::string utc_timestamp();

nlohmann::json verdict_to_json(const ZeroVerdict& v);
ZeroVerdict verdict_from_json(const nlohmann::json& j);

struct TavCertificate {
    std::string knot; // knot expression as resolved against the table
    std::string knot_hash;
    std::string knot_table_hash;
    std::string group_id;
    size_t group_order = 0;
    std::string group_hash;
    std::string catalog_hash;
    std::string representation = "regular";
    std::vector<size_t> hom;
    bool zero = false;
    ZeroVerdict engine;
    std::string timestamp;
    std::string version;

    friend bool operator==(const TavCertificate&, const TavCertificate&) = default;
};

nlohmann::json certificate_to_json(const TavCertificate& c);
TavCertificate certificate_from_json(const nlohmann::json& j);

struct VerifyResult {
    bool ok = false;
    size_t points_checked = 0;
    std::string message;
};

// Recomputes the recorded evaluations. Throws ProvenanceMismatch when the
// certificate was made against different knot or group data and Mismatch
// at the first evaluation that does not reproduce.
VerifyResult verify_certificate(const TavCertificate& c, const KnotTable& knots, const Catalog& catalog,
                                const DetOptions& opt = {});

} // namespace tav
