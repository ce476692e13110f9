#include "hm/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hm/golden.hpp"
#include "hm/node_atlas.hpp"
#include "hm/resolution.hpp"

namespace hm {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t isqrt_u128(u128 n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string opt_cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

std::string weil_bound_display(std::uint32_t p, std::int64_t b3) {
    const u128 q = p;
    const u128 n = static_cast<u128>(100 * b3 * b3) * q * q * q;
    std::uint64_t tenths = isqrt_u128(n);
    if (static_cast<u128>(tenths) * tenths != n) ++tenths;
    return fmt::format("{}.{}", tenths / 10, tenths % 10);
}

PrimeReport analyze_prime(const PrimeContext& ctx, std::span<const CountRecord> counts, const SeriesCoeffs& series) {
    const std::int64_t p = ctx.p();
    const auto nodes = enumerate_nodes(ctx);
    const NodeInventory inv = summarize_nodes(nodes, ctx);
    const ResolutionCount rc = count_X_tilde(ctx, counts, inv);
    const WeilSolution h = solve_h(ctx, rc.count_X_tilde);
    const ModularityRow row = modularity_row(ctx, rc, h, series[static_cast<int>(p)]);

    PrimeReport r;
    r.p = ctx.p();
    r.count_G = rc.count_G;
    r.sigma_defined = inv.sigma_defined;
    r.tau_defined = inv.tau_defined;
    r.regular_defined = inv.regular_defined;
    r.count_E = rc.count_E;
    r.has_i = ctx.has_i();
    r.has_sqrt5 = ctx.has_sqrt5();
    r.has_eps = ctx.has_eps();
    r.count_X_tilde = rc.count_X_tilde;
    r.p3_plus_1_minus_N = p * p * p + 1 - rc.count_X_tilde;
    r.p_plus_p2 = p + p * p;
    r.h_candidates = h.candidates;
    r.trace_h3 = row.trace_h3;
    r.weil_bound_display = weil_bound_display(ctx.p());
    r.a_p = row.a_p;
    if (r.trace_h3) {
        r.diff = *r.trace_h3 - r.a_p;
        if (*r.diff % p == 0) r.diff_over_p = *r.diff / p;
    }
    if (ctx.p_mod_4() == 1) r.w_check = 2 * p + 2 - rc.count_E;
    r.status = row.status;

    if (h.candidates.size() > 1)
        r.notes.push_back(fmt::format("Weil bounds leave h ambiguous: {}", fmt::join(h.candidates, ", ")));
    if (h.candidates.empty()) r.notes.push_back("no integer h satisfies the Weil bound");
    if (h.unique && *h.unique != conjectured_h(ctx))
        r.notes.push_back(fmt::format("h = {} breaks the 12/20/24/72 pattern (expected {})", *h.unique,
                                      conjectured_h(ctx)));
    if (!parity_check(ctx.p(), rc.count_X_tilde)) r.notes.push_back("#X~(F_p) is odd");
    if (r.diff && !r.diff_over_p) r.notes.push_back("p does not divide tr Frob_p - a_p");
    return r;
}

PrimeReport run_prime(const PrimeContext& ctx, unsigned threads, ResultCache* cache, const SeriesCoeffs& series) {
    std::vector<CountRecord> counts;
    counts.push_back(obtain_count(Variety::G, ctx, threads, cache));
    counts.push_back(obtain_count(Variety::E_union, ctx, threads, cache));
    return analyze_prime(ctx, counts, series);
}

std::string report_cell(const PrimeReport& r, std::string_view key) {
    if (key == "p") return std::to_string(r.p);
    if (key == "count_G") return std::to_string(r.count_G);
    if (key == "sigma_defined") return std::to_string(r.sigma_defined);
    if (key == "tau_defined") return std::to_string(r.tau_defined);
    if (key == "regular_defined") return std::to_string(r.regular_defined);
    if (key == "count_E") return std::to_string(r.count_E);
    if (key == "has_i") return r.has_i ? "1" : "0";
    if (key == "has_sqrt5") return r.has_sqrt5 ? "1" : "0";
    if (key == "has_eps") return r.has_eps ? "1" : "0";
    if (key == "count_X_tilde") return std::to_string(r.count_X_tilde);
    if (key == "p3_plus_1_minus_N") return std::to_string(r.p3_plus_1_minus_N);
    if (key == "p_plus_p2") return std::to_string(r.p_plus_p2);
    if (key == "h") {
        if (auto h = r.h()) return std::to_string(*h);
        return fmt::format("{{{}}}", fmt::join(r.h_candidates, ","));
    }
    if (key == "trace_h3") return opt_cell(r.trace_h3);
    if (key == "weil_bound_display") return r.weil_bound_display;
    if (key == "a_p") return std::to_string(r.a_p);
    if (key == "diff") return opt_cell(r.diff);
    if (key == "diff_over_p") return opt_cell(r.diff_over_p);
    if (key == "w_check") return opt_cell(r.w_check);
    if (key == "status") return std::string(status_name(r.status));
    throw std::out_of_range(fmt::format("unknown report field '{}'", key));
}

std::optional<ReportFormat> parse_format(std::string_view s) {
    if (s == "md") return ReportFormat::md;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    return std::nullopt;
}

namespace {
std::vector<std::string_view> table_rows() {
    std::vector<std::string_view> rows{"p"};
    rows.insert(rows.end(), kReportFields.begin(), kReportFields.end());
    rows.push_back("status");
    return rows;
}
}  // namespace

std::string render_markdown(std::span<const PrimeReport> reports) {
    std::ostringstream out;
    const auto rows = table_rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out << "| " << field_label(rows[k]) << " |";
        for (const auto& r : reports) out << ' ' << report_cell(r, rows[k]) << " |";
        out << '\n';
        if (k == 0) {
            out << "|---|";
            for (std::size_t c = 0; c < reports.size(); ++c) out << "---:|";
            out << '\n';
        }
    }
    for (const auto& r : reports)
        for (const auto& n : r.notes) out << "\n- p = " << r.p << ": " << n;
    if (std::any_of(reports.begin(), reports.end(), [](const PrimeReport& r) { return !r.notes.empty(); }))
        out << '\n';
    return out.str();
}

std::string render_csv(std::span<const PrimeReport> reports) {
    std::ostringstream out;
    for (auto key : table_rows()) {
        out << csv_escape(std::string(field_label(key)));
        for (const auto& r : reports) out << ',' << csv_escape(report_cell(r, key));
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const PrimeReport& r) {
    return nlohmann::json{
        {"p", r.p},
        {"count_G", r.count_G},
        {"sigma_defined", r.sigma_defined},
        {"tau_defined", r.tau_defined},
        {"regular_defined", r.regular_defined},
        {"count_E", r.count_E},
        {"has_i", r.has_i},
        {"has_sqrt5", r.has_sqrt5},
        {"has_eps", r.has_eps},
        {"count_X_tilde", r.count_X_tilde},
        {"p3_plus_1_minus_N", r.p3_plus_1_minus_N},
        {"p_plus_p2", r.p_plus_p2},
        {"h", opt_json(r.h())},
        {"h_candidates", r.h_candidates},
        {"trace_h3", opt_json(r.trace_h3)},
        {"weil_bound_display", r.weil_bound_display},
        {"a_p", r.a_p},
        {"diff", opt_json(r.diff)},
        {"diff_over_p", opt_json(r.diff_over_p)},
        {"w_check", opt_json(r.w_check)},
        {"status", status_name(r.status)},
        {"notes", r.notes},
    };
}

PrimeReport report_from_json(const nlohmann::json& j) {
    PrimeReport r;
    r.p = j.at("p").get<std::uint32_t>();
    r.count_G = j.at("count_G").get<std::int64_t>();
    r.sigma_defined = j.at("sigma_defined").get<int>();
    r.tau_defined = j.at("tau_defined").get<int>();
    r.regular_defined = j.at("regular_defined").get<int>();
    r.count_E = j.at("count_E").get<std::int64_t>();
    r.has_i = j.at("has_i").get<bool>();
    r.has_sqrt5 = j.at("has_sqrt5").get<bool>();
    r.has_eps = j.at("has_eps").get<bool>();
    r.count_X_tilde = j.at("count_X_tilde").get<std::int64_t>();
    r.p3_plus_1_minus_N = j.at("p3_plus_1_minus_N").get<std::int64_t>();
    r.p_plus_p2 = j.at("p_plus_p2").get<std::int64_t>();
    r.h_candidates = j.at("h_candidates").get<std::vector<std::int64_t>>();
    r.trace_h3 = opt_from<std::int64_t>(j, "trace_h3");
    r.weil_bound_display = j.at("weil_bound_display").get<std::string>();
    r.a_p = j.at("a_p").get<std::int64_t>();
    r.diff = opt_from<std::int64_t>(j, "diff");
    r.diff_over_p = opt_from<std::int64_t>(j, "diff_over_p");
    r.w_check = opt_from<std::int64_t>(j, "w_check");
    const auto status = j.at("status").get<std::string>();
    if (status == "match")
        r.status = ModularityStatus::match;
    else if (status == "mismatch")
        r.status = ModularityStatus::mismatch;
    else if (status == "inconclusive")
        r.status = ModularityStatus::inconclusive;
    else
        throw std::invalid_argument(fmt::format("unknown status '{}'", status));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string render_json(std::span<const PrimeReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

std::string render(std::span<const PrimeReport> reports, ReportFormat f) {
    switch (f) {
        case ReportFormat::md: return render_markdown(reports);
        case ReportFormat::csv: return render_csv(reports);
        case ReportFormat::json: return render_json(reports);
    }
    return {};
}

std::vector<GoldenDiff> compare_with_published(const PrimeReport& r) {
    std::vector<GoldenDiff> out;
    const auto col = published_column(r.p);
    if (!col) return out;
    for (auto key : kReportFields) {
        const std::string got = report_cell(r, key);
        const std::string_view want = col->cell(key);
        if (got != want) out.push_back({r.p, std::string(key), std::string(want), got, is_known_misprint(r.p, key)});
    }
    return out;
}

}  // namespace hm
