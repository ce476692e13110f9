#ifndef HM_REPORT_HPP
#define HM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hm/cache.hpp"
#include "hm/eta_forms.hpp"
#include "hm/galois_checks.hpp"
#include "hm/point_count.hpp"

namespace hm {

/// One column of the trace tables.
struct PrimeReport {
    std::uint32_t p = 0;
    std::int64_t count_G = 0;
    int sigma_defined = 0;
    int tau_defined = 0;
    int regular_defined = 0;
    std::int64_t count_E = 0;
    bool has_i = false;
    bool has_sqrt5 = false;
    bool has_eps = false;
    std::int64_t count_X_tilde = 0;
    std::int64_t p3_plus_1_minus_N = 0;
    std::int64_t p_plus_p2 = 0;
    std::vector<std::int64_t> h_candidates;
    std::optional<std::int64_t> trace_h3;
    std::string weil_bound_display;
    std::int64_t a_p = 0;
    std::optional<std::int64_t> diff;         // trace_h3 - a_p
    std::optional<std::int64_t> diff_over_p;  // when p divides diff
    std::optional<std::int64_t> w_check;      // 2p + 2 - #E, p = 1 mod 4 only
    ModularityStatus status = ModularityStatus::inconclusive;
    /// Annotations: conjectured h pattern, parity, divisibility.
    std::vector<std::string> notes;

    std::optional<std::int64_t> h() const {
        return h_candidates.size() == 1 ? std::optional{h_candidates.front()} : std::nullopt;
    }
    friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

/// 6 p^{3/2} (or b3 p^{3/2}) rounded up to one decimal, e.g. "2719.2" at p = 59.
/// Display only: computed as ceil(sqrt(100 b3^2 p^3)) / 10 in integers.
std::string weil_bound_display(std::uint32_t p, std::int64_t b3 = 6);

/// Assemble the column from G and E_union counts and the form coefficients.
/// `series` must reach at least p.
PrimeReport analyze_prime(const PrimeContext& ctx, std::span<const CountRecord> counts, const SeriesCoeffs& series);

/// Counts (from cache or computed) then analyze_prime.
PrimeReport run_prime(const PrimeContext& ctx, unsigned threads, ResultCache* cache, const SeriesCoeffs& series);

/// Printed cell for a field key (see kReportFields), or "p"/"status".
std::string report_cell(const PrimeReport& r, std::string_view key);

enum class ReportFormat { md, csv, json };
std::optional<ReportFormat> parse_format(std::string_view s);

std::string render_markdown(std::span<const PrimeReport> reports);
std::string render_csv(std::span<const PrimeReport> reports);
std::string render_json(std::span<const PrimeReport> reports);
std::string render(std::span<const PrimeReport> reports, ReportFormat f);

nlohmann::json to_json(const PrimeReport& r);
PrimeReport report_from_json(const nlohmann::json& j);

struct GoldenDiff {
    std::uint32_t p = 0;
    std::string key;
    std::string published;
    std::string computed;
    bool known_misprint = false;
};

/// Cell-by-cell comparison with the published column; empty when p is not
/// tabulated or everything agrees.
std::vector<GoldenDiff> compare_with_published(const PrimeReport& r);

}  // namespace hm

#endif  // HM_REPORT_HPP
