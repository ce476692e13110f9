#include "hm/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace hm {

namespace {

__extension__ using i128 = __int128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

WeilSolution WeilSolution::from(std::vector<std::int64_t> c) {
    WeilSolution s;
    s.candidates = std::move(c);
    if (s.candidates.size() == 1) s.unique = s.candidates.front();
    return s;
}

ResolutionCount count_X_tilde(const PrimeContext& ctx, std::span<const CountRecord> counts, const NodeInventory& inv) {
    auto find = [&](Variety v) -> std::int64_t {
        for (const auto& r : counts)
            if (r.p == ctx.p() && r.variety == v) return static_cast<std::int64_t>(r.count);
        throw std::invalid_argument(fmt::format("missing #{} for p = {}", variety_name(v), ctx.p()));
    };
    ResolutionCount rc;
    rc.p = ctx.p();
    rc.count_G = find(Variety::G);
    rc.count_E = find(Variety::E_union);
    rc.correction_total = inv.correction_total;
    rc.count_X_tilde = rc.count_G + static_cast<std::int64_t>(ctx.p()) * rc.count_E + rc.correction_total;
    return rc;
}

std::int64_t trace_h3(std::uint32_t p, std::int64_t N, std::int64_t h) {
    const std::int64_t q = p;
    return q * q * q + 1 + h * (q + q * q) - N;
}

bool within_weil_bound(std::int64_t trace, std::uint32_t p, std::int64_t b3) {
    if (b3 < 0) return false;
    const i128 q = p;
    return i128{trace} * trace <= i128{b3} * b3 * q * q * q;
}

WeilSolution solve_h2(std::uint32_t p, std::int64_t N) {
    const std::int64_t q = p;
    const std::int64_t c = N - 1 - q * q * q;  // trace = h2 (p + p^2) - c
    // A solution has h2 (p + p^2 - 2 p^{3/2}) <= |c|, and
    // p + p^2 - 2 p^{3/2} = p (sqrt p - 1)^2 >= p (floor(sqrt p) - 1)^2.
    const auto s = static_cast<std::int64_t>(isqrt(p));
    const std::int64_t denom = q * std::max<std::int64_t>(s - 1, 1) * std::max<std::int64_t>(s - 1, 1);
    const std::int64_t hi = 69 + std::llabs(c) / denom + 1;
    std::vector<std::int64_t> out;
    for (std::int64_t h2 = 69; h2 <= hi; ++h2) {
        const std::int64_t b3 = 2 * h2 - 138;
        if (within_weil_bound(trace_h3(p, N, h2), p, b3)) out.push_back(h2);
    }
    return WeilSolution::from(std::move(out));
}

WeilSolution solve_h(const PrimeContext& ctx, std::int64_t N, std::int64_t b3) {
    const std::int64_t q = ctx.p();
    const std::int64_t pp = q + q * q;
    const std::int64_t c = N - 1 - q * q * q;
    const auto r = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(b3 * b3) * q * q * q));
    std::vector<std::int64_t> out;
    for (std::int64_t h = ceil_div(c - r, pp); h <= floor_div(c + r, pp); ++h)
        if (within_weil_bound(trace_h3(ctx.p(), N, h), ctx.p(), b3)) out.push_back(h);
    return WeilSolution::from(std::move(out));
}

std::int64_t conjectured_h(const PrimeContext& ctx) {
    if (ctx.has_i() && ctx.has_eps()) return 72;
    if (ctx.has_i()) return 24;
    if (ctx.has_eps()) return 20;
    return 12;
}

}  // namespace hm
