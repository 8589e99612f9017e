#pragma once

#include <string>

#include <json.hpp>

#include "tav/tav_scan.hpp"

namespace tav {

nlohmann::json report_to_json(const TavReport& r);
// inverse of report_to_json; ParseError on malformed input
TavReport report_from_json(const nlohmann::json& j);
std::string report_text(const TavReport& r);

nlohmann::json classification_to_json(const ClassificationTable& t);
std::string classification_text(const ClassificationTable& t);

} // namespace tav
