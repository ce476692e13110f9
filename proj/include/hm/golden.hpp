#ifndef HM_GOLDEN_HPP
#define HM_GOLDEN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hm {

/// Row keys of the trace tables, in printed order (the prime itself excluded).
inline constexpr std::array<std::string_view, 18> kReportFields{
    "count_G",        "sigma_defined",      "tau_defined", "regular_defined", "count_E",
    "has_i",          "has_sqrt5",          "has_eps",     "count_X_tilde",   "p3_plus_1_minus_N",
    "p_plus_p2",      "h",                  "trace_h3",    "weil_bound_display", "a_p",
    "diff",           "diff_over_p",        "w_check",
};

/// Human-readable row label for a field key.
std::string_view field_label(std::string_view key);

/// One published column, cell strings exactly as printed (blank cells are "").
struct GoldenColumn {
    std::uint32_t p;
    std::array<std::string_view, kReportFields.size()> cells;

    std::string_view cell(std::string_view key) const;
};

/// The 19 published columns, p = 59 .. 157.
const std::vector<GoldenColumn>& published_columns();
std::optional<GoldenColumn> published_column(std::uint32_t p);
std::vector<std::uint32_t> published_primes();

/// Cells known to be misprinted; the computed value is reported and the
/// mismatch does not fail a golden comparison.
bool is_known_misprint(std::uint32_t p, std::string_view key);

}  // namespace hm

#endif  // HM_GOLDEN_HPP
