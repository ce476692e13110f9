#include "hm/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <fmt/format.h>

namespace hm {

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

ResultCache::ResultCache(const ResultCache& o) {
    std::lock_guard lk(o.mu_);
    counts_ = o.counts_;
    dirty_ = o.dirty_;
}

ResultCache& ResultCache::operator=(const ResultCache& o) {
    if (this == &o) return *this;
    std::scoped_lock lk(mu_, o.mu_);
    counts_ = o.counts_;
    dirty_ = o.dirty_;
    return *this;
}

ResultCache ResultCache::from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("version", -1) != kVersion)
        throw std::runtime_error(fmt::format("cache version is not {}", kVersion));
    ResultCache c;
    const auto& counts = j.at("counts");
    const nlohmann::json stamps = j.contains("timestamps") ? j.at("timestamps") : nlohmann::json::object();
    for (const auto& [pkey, vars] : counts.items()) {
        const auto p = static_cast<std::uint32_t>(std::stoul(pkey));
        for (const auto& [vkey, n] : vars.items()) {
            auto v = parse_variety(vkey);
            if (!v) throw std::runtime_error(fmt::format("unknown variety '{}' in cache", vkey));
            std::string ts;
            if (stamps.contains(pkey) && stamps[pkey].contains(vkey)) ts = stamps[pkey][vkey].get<std::string>();
            c.counts_[p][std::string(variety_name(*v))] = Entry{n.get<std::uint64_t>(), ts};
        }
    }
    return c;
}

ResultCache ResultCache::load(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {};
    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open file");
        return from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        if (warnings) warnings->push_back(fmt::format("ignoring cache {}: {}", path.string(), e.what()));
        return {};
    }
}

std::optional<std::uint64_t> ResultCache::lookup(std::uint32_t p, Variety v) const {
    std::lock_guard lk(mu_);
    auto it = counts_.find(p);
    if (it == counts_.end()) return std::nullopt;
    auto jt = it->second.find(std::string(variety_name(v)));
    if (jt == it->second.end()) return std::nullopt;
    return jt->second.count;
}

void ResultCache::store(std::uint32_t p, Variety v, std::uint64_t count) {
    std::lock_guard lk(mu_);
    counts_[p][std::string(variety_name(v))] = Entry{count, utc_now()};
    dirty_ = true;
}

std::vector<std::pair<std::uint32_t, Variety>> ResultCache::entries() const {
    std::lock_guard lk(mu_);
    std::vector<std::pair<std::uint32_t, Variety>> out;
    for (const auto& [p, vars] : counts_)
        for (const auto& [name, e] : vars) out.emplace_back(p, *parse_variety(name));
    return out;
}

nlohmann::json ResultCache::to_json() const {
    std::lock_guard lk(mu_);
    nlohmann::json j;
    j["version"] = kVersion;
    j["counts"] = nlohmann::json::object();
    j["timestamps"] = nlohmann::json::object();
    for (const auto& [p, vars] : counts_) {
        const std::string key = std::to_string(p);
        for (const auto& [name, e] : vars) {
            j["counts"][key][name] = e.count;
            if (!e.timestamp.empty()) j["timestamps"][key][name] = e.timestamp;
        }
    }
    return j;
}

void ResultCache::save(const std::filesystem::path& path) const {
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
        out << to_json().dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

bool ResultCache::dirty() const {
    std::lock_guard lk(mu_);
    return dirty_;
}

CountRecord obtain_count(Variety v, const PrimeContext& ctx, unsigned threads, ResultCache* cache) {
    if (cache) {
        if (auto n = cache->lookup(ctx.p(), v)) {
            CountRecord rec;
            rec.p = ctx.p();
            rec.variety = v;
            rec.count = *n;
            rec.method = CountMethod::cached;
            return rec;
        }
    }
    CountRecord rec = count_variety(v, ctx, threads);
    if (cache) cache->store(ctx.p(), v, rec.count);
    return rec;
}

}  // namespace hm
