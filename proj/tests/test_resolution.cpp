#include <doctest.h>

#include <random>
#include <string>

#include "hm/golden.hpp"
#include "hm/node_atlas.hpp"
#include "hm/resolution.hpp"

using namespace hm;

namespace {

using i128 = __int128;

std::int64_t cell_int(const GoldenColumn& c, std::string_view key) { return std::stoll(std::string(c.cell(key))); }

std::vector<CountRecord> records(std::uint32_t p, std::uint64_t g, std::uint64_t e) {
    CountRecord rg, re;
    rg.p = re.p = p;
    rg.variety = Variety::G;
    rg.count = g;
    re.variety = Variety::E_union;
    re.count = e;
    return {rg, re};
}

ResolutionCount assemble(std::uint32_t p, std::uint64_t g, std::uint64_t e) {
    const auto ctx = make_context(p);
    const auto recs = records(p, g, e);
    return count_X_tilde(ctx, recs, summarize_nodes(enumerate_nodes(ctx), ctx));
}

// Scan a wide window directly.
std::vector<std::int64_t> brute_h(std::int64_t p, std::int64_t N, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t h = lo; h <= hi; ++h) {
        const i128 t = static_cast<i128>(p) * p * p + 1 + static_cast<i128>(h) * (p + p * p) - N;
        if (t * t <= static_cast<i128>(36) * p * p * p) out.push_back(h);
    }
    return out;
}

std::vector<std::int64_t> brute_h2_101(std::int64_t N) {
    const std::int64_t p = 101;
    std::vector<std::int64_t> out;
    for (std::int64_t h2 = 69; h2 <= 100000; ++h2) {
        const i128 h3 = 2 * h2 - 138;
        const i128 t = 1 + static_cast<i128>(p) * h2 + static_cast<i128>(p) * p * h2 + static_cast<i128>(p) * p * p - N;
        if (t * t <= h3 * h3 * p * p * p) out.push_back(h2);
    }
    return out;
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("assembling the resolved count") {
    CHECK(assemble(59, 225766, 0).count_X_tilde == 247360);
    CHECK(assemble(101, 1126560, 200).count_X_tilde == 1770940);
    CHECK(assemble(157, 4019026, 350).count_X_tilde == 4473070);
    const auto rc = assemble(89, 751756, 180);
    CHECK(rc.count_X_tilde == rc.count_G + 89 * rc.count_E + rc.correction_total);

    const auto ctx = make_context(59);
    const auto inv = summarize_nodes(enumerate_nodes(ctx), ctx);
    const auto only_g = std::vector<CountRecord>{records(59, 225766, 0)[0]};
    CHECK_THROWS_AS(count_X_tilde(ctx, only_g, inv), std::invalid_argument);
    CHECK_THROWS_AS(count_X_tilde(ctx, records(61, 1, 0), inv), std::invalid_argument);
}

TEST_CASE("h^2 squeeze at 101") {
    const auto s = solve_h2_at_101(1770940);
    CHECK(s.candidates == std::vector<std::int64_t>{72});
    CHECK(s.unique == 72);
    CHECK(2 * *s.unique - 138 == 6);

    CHECK(solve_h2_at_101(0).candidates.empty());
    CHECK_FALSE(solve_h2_at_101(0).unique);

    // at N = 101^3 + 1 every h2 >= 69 leaves a trace 10302 h2 that outgrows (2 h2 - 138) 101^1.5
    const std::int64_t n = 101LL * 101 * 101 + 1;
    CHECK(solve_h2_at_101(n).candidates == brute_h2_101(n));
    CHECK(solve_h2_at_101(n).candidates.empty());

    std::mt19937_64 rng(9);
    for (int k = 0; k < 1000; ++k) {
        const std::int64_t N = 1000000 + static_cast<std::int64_t>(rng() % 2000000);
        const auto got = solve_h2_at_101(N);
        CHECK(got.candidates == brute_h2_101(N));
        CHECK(got.unique.has_value() == (got.candidates.size() == 1));
    }
}

TEST_CASE("h squeeze examples") {
    CHECK(solve_h(make_context(59), 247360).candidates == std::vector<std::int64_t>{12});
    CHECK(solve_h(make_context(71), 459740).candidates == std::vector<std::int64_t>{20});
    CHECK(solve_h(make_context(101), 1770940).unique == 72);
}

TEST_CASE("h squeeze matches a direct scan") {
    std::mt19937_64 rng(10);
    for (std::int64_t p : {7, 11, 13, 59, 61, 101, 157}) {
        const auto ctx = make_context(p);
        const std::int64_t base = p * p * p;
        for (int k = 0; k < 300; ++k) {
            const std::int64_t N = base / 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(4 * base));
            CHECK(solve_h(ctx, N).candidates == brute_h(p, N, -10000, 10000));
        }
    }
}

TEST_CASE("traces") {
    CHECK(trace_h3(59, 247360, 12) == 500);
    CHECK(trace_h3(101, 1770940, 72) == 1106);
    CHECK(trace_h3(131, 2596140, 20) == -2208);
    CHECK(within_weil_bound(500, 59));
    CHECK_FALSE(within_weil_bound(2720, 59));
    CHECK(within_weil_bound(2719, 59));
    CHECK(within_weil_bound(-2719, 59));
}

TEST_CASE("conjectured pattern") {
    CHECK(conjectured_h(make_context(59)) == 12);
    CHECK(conjectured_h(make_context(71)) == 20);
    CHECK(conjectured_h(make_context(89)) == 24);
    CHECK(conjectured_h(make_context(101)) == 72);
}

TEST_CASE("every tabulated column: unique h, pattern, Weil bound, parity") {
    for (const auto& col : published_columns()) {
        const auto ctx = make_context(col.p);
        const std::int64_t N = cell_int(col, "count_X_tilde");
        const auto s = solve_h(ctx, N);
        REQUIRE_MESSAGE(s.unique, "p = " << col.p);
        CHECK(*s.unique == cell_int(col, "h"));
        CHECK(*s.unique == conjectured_h(ctx));
        const auto t = trace_h3(col.p, N, *s.unique);
        CHECK(t == cell_int(col, "trace_h3"));
        CHECK(within_weil_bound(t, col.p));
        CHECK(t % 2 == 0);
        CHECK(N % 2 == 0);
    }
}

TEST_CASE("p = 61 is ambiguous") {
    const auto ctx = make_context(61);
    const auto g = count_G(ctx, default_threads());
    const auto e = count_E_union(ctx, 1);
    const std::vector<CountRecord> recs{g, e};
    const auto rc = count_X_tilde(ctx, recs, summarize_nodes(enumerate_nodes(ctx), ctx));
    const auto s = solve_h(ctx, rc.count_X_tilde);
    CHECK(s.candidates.size() >= 2);
    CHECK_FALSE(s.unique);
    CHECK(s.candidates == brute_h(61, rc.count_X_tilde, -10000, 10000));
    CHECK(rc.count_X_tilde % 2 == 0);
}

}
