#ifndef HM_CACHE_HPP
#define HM_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hm/point_count.hpp"

namespace hm {

/// Point counts keyed by prime and variety, persisted as
///   {"version":1,"counts":{"<p>":{"G":n,"E":n,...}},"timestamps":{"<p>":{"G":"..."}}}
/// Unknown or corrupt files are dropped with a warning; recomputing is always safe.
class ResultCache {
public:
    static constexpr int kVersion = 1;

    ResultCache() = default;
    ResultCache(const ResultCache& o);
    ResultCache& operator=(const ResultCache& o);

    /// Missing file gives an empty cache silently; unreadable, corrupt or
    /// version-mismatched files give an empty cache plus a warning.
    static ResultCache load(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
    static ResultCache from_json(const nlohmann::json& j);

    std::optional<std::uint64_t> lookup(std::uint32_t p, Variety v) const;
    void store(std::uint32_t p, Variety v, std::uint64_t count);

    /// Every (prime, variety) pair present.
    std::vector<std::pair<std::uint32_t, Variety>> entries() const;

    nlohmann::json to_json() const;
    /// Write through a temporary file and rename.
    void save(const std::filesystem::path& path) const;

    bool dirty() const;

private:
    struct Entry {
        std::uint64_t count;
        std::string timestamp;
    };
    mutable std::mutex mu_;
    std::map<std::uint32_t, std::map<std::string, Entry>> counts_;
    bool dirty_ = false;
};

/// Cached count if present, else compute (and store when a cache is given).
CountRecord obtain_count(Variety v, const PrimeContext& ctx, unsigned threads, ResultCache* cache);

}  // namespace hm

#endif  // HM_CACHE_HPP
