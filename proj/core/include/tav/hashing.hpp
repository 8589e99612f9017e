#pragma once

#include <string>

namespace tav {

std::string sha256_hex(const std::string& data);
std::string file_sha256(const std::string& path);

} // namespace tav
