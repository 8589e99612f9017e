#include "tav/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "tav/error.hpp"
#include "tav/hashing.hpp"

namespace tav {

using nlohmann::json;

std::string CacheKey::digest() const
{
    std::string s = "tav-cache/1\n" + knot_hash + "\n" + group_hash + "\n" + representation + "\n" + hom + "\n" +
                    mode + "\n" + version;
    return sha256_hex(s);
}

std::string record_hash(const std::string& key, const json& verdict)
{
    return sha256_hex(key + "\n" + verdict.dump());
}

VerdictCache::VerdictCache(std::string dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        fail(ErrorKind::Io, "cannot create cache directory " + dir + ": " + ec.message());
    path_ = (std::filesystem::path(dir) / "verdicts.jsonl").string();
    load();
}

void VerdictCache::load()
{
    std::ifstream in(path_);
    if (!in)
        return;
    std::string line;
    size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty())
            continue;
        std::string why;
        try {
            json r = json::parse(line);
            std::string key = r.at("key").get<std::string>();
            const json& v = r.at("verdict");
            if (r.at("record_hash").get<std::string>() != record_hash(key, v))
                why = "record hash does not match";
            else
                records_[key] = v;
        } catch (const json::exception& e) {
            why = e.what();
        }
        if (!why.empty())
            warnings_.push_back(std::string(kind_name(ErrorKind::CacheCorrupt)) + ": " + path_ + ":" +
                                std::to_string(n) + ": " + why + " (ignored)");
    }
}

std::optional<json> VerdictCache::lookup(const CacheKey& key) const
{
    std::lock_guard<std::mutex> lk(mu_);
    auto it = records_.find(key.digest());
    if (it == records_.end())
        return std::nullopt;
    return it->second;
}

void VerdictCache::store(const CacheKey& key, const json& verdict)
{
    std::string k = key.digest();
    json r;
    r["key"] = k;
    r["knot_hash"] = key.knot_hash;
    r["group_hash"] = key.group_hash;
    r["representation"] = key.representation;
    r["hom"] = key.hom;
    r["mode"] = key.mode;
    r["version"] = key.version;
    r["verdict"] = verdict;
    r["record_hash"] = record_hash(k, verdict);
    std::string line = r.dump() + "\n";

    std::lock_guard<std::mutex> lk(mu_);
    // one write() per record on an O_APPEND descriptor, so concurrent
    // writers never interleave inside a line
    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0)
        fail(ErrorKind::Io, "cannot open " + path_ + ": " + std::strerror(errno));
    ssize_t w = ::write(fd, line.data(), line.size());
    int err = errno;
    ::close(fd);
    if (w != static_cast<ssize_t>(line.size()))
        fail(ErrorKind::Io, "short write to " + path_ + ": " + std::strerror(err));
    records_[k] = verdict;
}

std::vector<std::string> VerdictCache::warnings() const
{
    std::lock_guard<std::mutex> lk(mu_);
    return warnings_;
}

size_t VerdictCache::size() const
{
    std::lock_guard<std::mutex> lk(mu_);
    return records_.size();
}

} // namespace tav
