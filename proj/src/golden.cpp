#include "hm/golden.hpp"

#include <algorithm>
#include <stdexcept>

namespace hm {

namespace {

// Published trace tables, one column per prime, cells verbatim.
const std::vector<GoldenColumn> kColumns{
    {59, {"225766", "5", "1", "0", "0", "0", "1", "0", "247360", "-41980", "3540", "12", "500", "2719.2", "500", "0", "0", ""}},
    {67, {"327706", "5", "1", "0", "0", "0", "0", "0", "355310", "-54546", "4556", "12", "126", "3290.6", "126", "0", "0", ""}},
    {71, {"407910", "5", "5", "0", "0", "0", "1", "1", "459740", "-101828", "5112", "20", "412", "3589.6", "412", "0", "0", ""}},
    {79, {"529886", "5", "1", "0", "0", "0", "1", "0", "568280", "-75240", "6320", "12", "600", "4213.1", "600", "0", "0", ""}},
    {83, {"613006", "5", "1", "0", "0", "0", "0", "0", "655170", "-83382", "6972", "12", "282", "4537.0", "282", "0", "0", ""}},
    {89, {"751756", "5", "1", "10", "180", "1", "1", "0", "897360", "-192390", "8010", "24", "-150", "5037.8", "-150", "0", "0", "0"}},
    {97, {"967966", "5", "1", "10", "170", "1", "0", "0", "1137910", "-225236", "9506", "24", "2908", "5732.1", "386", "2522", "26", "26"}},
    {101, {"1126560", "5", "5", "50", "200", "1", "1", "1", "1770940", "-740638", "10302", "72", "1106", "6090.3", "702", "404", "4", "4"}},
    {103, {"1157186", "5", "1", "0", "0", "0", "0", "0", "1221870", "-129142", "10712", "12", "-598", "3589.6", "-598", "0", "0", ""}},
    {107, {"1295146", "5", "1", "0", "0", "0", "0", "0", "1364910", "-139866", "11556", "12", "-1194", "6272.1", "-1194", "0", "0", ""}},
    {109, {"1365776", "5", "1", "10", "220", "1", "1", "0", "1583340", "-288310", "11990", "24", "-550", "6640.9", "-550", "0", "0", "0"}},
    {113, {"1517046", "5", "1", "10", "230", "1", "0", "0", "1750730", "-307832", "12882", "24", "1336", "6828.0", "1562", "-226", "-2", "-2"}},
    {127, {"2143566", "5", "1", "0", "0", "0", "0", "0", "2241610", "-193226", "16256", "12", "1846", "8587.4", "1846", "0", "0", ""}},
    {131, {"24219190", "5", "5", "0", "0", "0", "1", "1", "2596140", "-348048", "17292", "20", "-2208", "8996.2", "-2208", "0", "0", ""}},
    {137, {"2685206", "5", "1", "10", "290", "1", "0", "0", "3029350", "-457966", "18906", "24", "-4252", "9621.3", "-2334", "-1918", "-14", "-14"}},
    {139, {"2802246", "5", "1", "0", "0", "0", "1", "0", "2919840", "-234220", "19460", "12", "-700", "9832.8", "-700", "0", "0", ""}},
    {149, {"3437616", "5", "1", "10", "300", "1", "1", "0", "3842300", "-534350", "22350", "24", "2050", "10912.7", "2050", "0", "0", "0"}},
    {151, {"3669110", "5", "5", "0", "0", "0", "1", "1", "3900140", "-457188", "22952", "20", "1852", "11133.2", "1852", "0", "0", ""}},
    {157, {"4019026", "5", "1", "10", "350", "1", "0", "0", "4473070", "-603176", "24806", "24", "-7832", "11803.3", "-2494", "-5338", "-34", "-34"}},
};

struct Misprint {
    std::uint32_t p;
    std::string_view key;
};

// #G at 131 has a doubled digit (2421910); the 6p^{3/2} cells for 103..113
// are shifted one column; p^3+1-#X at 137 disagrees with its own #X.
constexpr std::array<Misprint, 6> kMisprints{{
    {131, "count_G"},
    {103, "weil_bound_display"},
    {107, "weil_bound_display"},
    {109, "weil_bound_display"},
    {113, "weil_bound_display"},
    {137, "p3_plus_1_minus_N"},
}};

}  // namespace

std::string_view field_label(std::string_view key) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, kReportFields.size() + 2> labels{{
        {"p", "p"},
        {"count_G", "#G(F_p)"},
        {"sigma_defined", "σ-nodes defined over F_p"},
        {"tau_defined", "τ-nodes defined over F_p"},
        {"regular_defined", "Other nodes defined over F_p"},
        {"count_E", "Points on E_1 ∪ E_2"},
        {"has_i", "i in F_p?"},
        {"has_sqrt5", "√5 in F_p?"},
        {"has_eps", "ε in F_p?"},
        {"count_X_tilde", "#X(F_p)"},
        {"p3_plus_1_minus_N", "p^3 + 1 - #X(F_p)"},
        {"p_plus_p2", "p^2 + p"},
        {"h", "h"},
        {"trace_h3", "tr Frob_p on H^3"},
        {"weil_bound_display", "6 p^(3/2)"},
        {"a_p", "a_p"},
        {"diff", "tr Frob_p - a_p"},
        {"diff_over_p", "(tr Frob_p - a_p)/p"},
        {"w_check", "2p + 2 - #(E_1 ∪ E_2)(F_p)"},
        {"status", "status"},
    }};
    for (const auto& [k, v] : labels)
        if (k == key) return v;
    throw std::out_of_range("unknown report field");
}

std::string_view GoldenColumn::cell(std::string_view key) const {
    for (std::size_t k = 0; k < kReportFields.size(); ++k)
        if (kReportFields[k] == key) return cells[k];
    throw std::out_of_range("unknown report field");
}

const std::vector<GoldenColumn>& published_columns() { return kColumns; }

std::optional<GoldenColumn> published_column(std::uint32_t p) {
    for (const auto& c : kColumns)
        if (c.p == p) return c;
    return std::nullopt;
}

std::vector<std::uint32_t> published_primes() {
    std::vector<std::uint32_t> out;
    for (const auto& c : kColumns) out.push_back(c.p);
    return out;
}

bool is_known_misprint(std::uint32_t p, std::string_view key) {
    return std::any_of(kMisprints.begin(), kMisprints.end(),
                       [&](const Misprint& m) { return m.p == p && m.key == key; });
}

}  // namespace hm
