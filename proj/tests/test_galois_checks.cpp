#include <doctest.h>

#include <set>
#include <string>

#include "hm/galois_checks.hpp"
#include "hm/golden.hpp"
#include "oracles.hpp"

using namespace hm;

namespace {

std::int64_t cell_int(const GoldenColumn& c, std::string_view key) { return std::stoll(std::string(c.cell(key))); }

ResolutionCount rc_from(const GoldenColumn& col) {
    ResolutionCount rc;
    rc.p = col.p;
    rc.count_G = cell_int(col, "count_G");
    rc.count_E = cell_int(col, "count_E");
    rc.count_X_tilde = cell_int(col, "count_X_tilde");
    return rc;
}

}  // namespace

TEST_SUITE("galois_checks") {

TEST_CASE("Frobenius images") {
    CHECK(frobenius_image(101) == FrobImage{1, -1, 1});
    CHECK(frobenius_image(67) == FrobImage{-1, -1, -1});
    CHECK(frobenius_image(41).is_identity());
    CHECK_THROWS_AS(frobenius_image(2), InvalidPrime);
    CHECK_THROWS_AS(frobenius_image(5), InvalidPrime);
    CHECK_THROWS_AS(frobenius_image(9), InvalidPrime);
    CHECK(frobenius_image(3) == FrobImage{-1, -1, -1});
}

TEST_CASE("images depend only on p mod 40") {
    for (std::int64_t p = 3; p < 1000; ++p) {
        if (p == 5 || !oracle::is_prime_trial(p)) continue;
        const auto img = frobenius_image(static_cast<std::uint64_t>(p));
        const auto sq = [&](std::int64_t a) { return oracle::is_square_bruteforce(a, p) ? 1 : -1; };
        CHECK(img == FrobImage{sq(-1), sq(2), sq(5)});
        CHECK(img == frobenius_image_table(static_cast<unsigned>(p % 40)));
    }
    CHECK(non_identity_classes().size() == 7);
}

TEST_CASE("Livne set coverage") {
    const auto T = livne_set();
    CHECK(T == std::vector<std::uint64_t>{67, 71, 101, 103, 113, 131, 157});
    const auto full = verify_T_coverage(T);
    CHECK(full.covered);
    CHECK(full.classes_hit == 7);
    CHECK(full.identity.empty());

    std::vector<std::uint64_t> without67(T.begin() + 1, T.end());
    const auto partial = verify_T_coverage(without67);
    CHECK_FALSE(partial.covered);
    CHECK(partial.missing == std::vector<FrobImage>{FrobImage{-1, -1, -1}});

    auto with41 = T;
    with41.push_back(41);
    const auto extra = verify_T_coverage(with41);
    CHECK(extra.covered);
    CHECK(extra.identity == std::vector<std::uint64_t>{41});

    // images of T are pairwise distinct
    std::set<FrobImage> imgs;
    for (auto p : T) imgs.insert(frobenius_image(p));
    CHECK(imgs.size() == 7);
}

TEST_CASE("W trace") {
    CHECK(trace_W(make_context(97), 170) == 2522);
    CHECK(trace_W(make_context(103), 0) == 0);
    CHECK(trace_W(make_context(89), 180) == 0);
    CHECK_THROWS(trace_W(make_context(103), 10));
}

TEST_CASE("parity") {
    CHECK(parity_check(59, 247360));
    CHECK(parity_check(101, 1770940));
    CHECK(parity_check(89, 897360));
    CHECK_FALSE(parity_check(89, 897361));
}

TEST_CASE("modularity rows for every tabulated column") {
    for (const auto& col : published_columns()) {
        const auto ctx = make_context(col.p);
        auto rc = rc_from(col);
        const WeilSolution h = WeilSolution::from({cell_int(col, "h")});
        const auto row = modularity_row(ctx, rc, h, cell_int(col, "a_p"));
        CHECK(row.match());
        REQUIRE(row.trace_h3);
        REQUIRE(row.trace_V);
        CHECK(*row.trace_V == *row.trace_h3 - row.trace_W);
        CHECK(*row.trace_V == row.a_p);
        CHECK(row.trace_W == cell_int(col, "diff"));
        if (ctx.p_mod_4() == 3) CHECK(*row.trace_V == *row.trace_h3);
    }
}

TEST_CASE("modularity row statuses") {
    const auto ctx = make_context(157);
    ResolutionCount rc;
    rc.p = 157;
    rc.count_E = 350;
    rc.count_X_tilde = 4473070;
    const auto ok = modularity_row(ctx, rc, WeilSolution::from({24}), -2494);
    CHECK(ok.status == ModularityStatus::match);
    CHECK(*ok.trace_h3 == -7832);
    CHECK(*ok.trace_V == -2494);
    CHECK(modularity_row(ctx, rc, WeilSolution::from({24}), -2492).status == ModularityStatus::mismatch);
    const auto amb = modularity_row(ctx, rc, WeilSolution::from({23, 24}), -2494);
    CHECK(amb.status == ModularityStatus::inconclusive);
    CHECK_FALSE(amb.trace_h3);
    CHECK(status_name(ModularityStatus::inconclusive) == "inconclusive");
}

}
