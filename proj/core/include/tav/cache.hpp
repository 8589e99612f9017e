#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tav {

// Everything a cached verdict depends on. The key is a hash of all fields,
// so any change to the knot, the group, the hom or the toolkit misses.
struct CacheKey {
    std::string knot_hash;
    std::string group_hash;
    std::string representation;
    std::string hom; // orbit representative, hom_to_string form
    std::string mode;
    std::string version;

    std::string digest() const;
};

// Append-only verdict store in <dir>/verdicts.jsonl. Each line is one
// self-describing record carrying its own hash; records that fail to parse
// or re-hash are skipped with a warning and recomputed by the caller.
class VerdictCache {
public:
    explicit VerdictCache(std::string dir);

    std::optional<nlohmann::json> lookup(const CacheKey& key) const;
    void store(const CacheKey& key, const nlohmann::json& verdict);

    const std::string& path() const { return path_; }
    std::vector<std::string> warnings() const;
    size_t size() const;

private:
    std::string path_;
    mutable std::mutex mu_;
    std::map<std::string, nlohmann::json> records_;
    std::vector<std::string> warnings_;

    void load();
};

std::string record_hash(const std::string& key, const nlohmann::json& verdict);

} // namespace tav
