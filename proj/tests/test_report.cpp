#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "hm/golden.hpp"
#include "hm/report.hpp"

using namespace hm;

namespace {

std::int64_t cell_int(const GoldenColumn& c, std::string_view key) { return std::stoll(std::string(c.cell(key))); }

std::vector<CountRecord> counts_of(std::uint32_t p, std::uint64_t g, std::uint64_t e) {
    CountRecord rg, re;
    rg.p = re.p = p;
    rg.variety = Variety::G;
    rg.count = g;
    re.variety = Variety::E_union;
    re.count = e;
    return {rg, re};
}

// Column assembled from the tabulated G and E counts, with the p = 131 G cell corrected.
PrimeReport from_table(const GoldenColumn& col, const SeriesCoeffs& s) {
    const std::uint64_t g = is_known_misprint(col.p, "count_G") ? 2421910 : cell_int(col, "count_G");
    const auto recs = counts_of(col.p, g, cell_int(col, "count_E"));
    return analyze_prime(make_context(col.p), recs, s);
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hm_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("bound display") {
    CHECK(weil_bound_display(59) == "2719.2");
    CHECK(weil_bound_display(101) == "6090.3");
    CHECK(weil_bound_display(83) == "4537.0");
    CHECK(weil_bound_display(7, 1) == "18.6");  // 7^1.5 = 18.52..., rounded up
    CHECK(weil_bound_display(4, 1) == "8.0");   // exact
}

TEST_CASE("fixture is internally consistent") {
    CHECK(published_columns().size() == 19);
    CHECK(published_primes().front() == 59);
    CHECK(published_primes().back() == 157);
    CHECK_FALSE(published_column(61));
    for (const auto& col : published_columns()) {
        const std::int64_t p = col.p;
        const std::int64_t N = cell_int(col, "count_X_tilde");
        if (!is_known_misprint(col.p, "p3_plus_1_minus_N"))
            CHECK_MESSAGE(cell_int(col, "p3_plus_1_minus_N") == p * p * p + 1 - N, "p = " << p);
        CHECK(cell_int(col, "p_plus_p2") == p + p * p);
        CHECK(cell_int(col, "trace_h3") == p * p * p + 1 + cell_int(col, "h") * (p + p * p) - N);
        CHECK(cell_int(col, "diff") == cell_int(col, "trace_h3") - cell_int(col, "a_p"));
        CHECK(cell_int(col, "diff_over_p") * p == cell_int(col, "diff"));
        CHECK(cell_int(col, "has_i") == (p % 4 == 1));
        CHECK(cell_int(col, "has_eps") == (p % 5 == 1));
        if (p % 4 == 1)
            CHECK(cell_int(col, "w_check") == 2 * p + 2 - cell_int(col, "count_E"));
        else
            CHECK(col.cell("w_check").empty());
    }
}

TEST_CASE("columns rebuilt from tabulated counts match except flagged cells") {
    const auto s = expand_f(200);
    for (const auto& col : published_columns()) {
        const auto r = from_table(col, s);
        CHECK(r.status == ModularityStatus::match);
        CHECK(r.notes.empty());
        for (const auto& d : compare_with_published(r)) CHECK_MESSAGE(d.known_misprint, "p = " << d.p << " " << d.key);
    }
    const auto r131 = from_table(*published_column(131), s);
    const auto d = compare_with_published(r131);
    REQUIRE(d.size() == 1);
    CHECK(d[0].key == "count_G");
    CHECK(d[0].computed == "2421910");
    CHECK(d[0].published == "24219190");
}

TEST_CASE("a wrong count is reported as a real mismatch") {
    const auto s = expand_f(200);
    const auto recs = counts_of(59, 225768, 0);
    const auto r = analyze_prime(make_context(59), recs, s);
    const auto d = compare_with_published(r);
    CHECK_FALSE(d.empty());
    CHECK(std::none_of(d.begin(), d.end(), [](const GoldenDiff& x) { return x.known_misprint; }));
}

TEST_CASE("rendering and JSON round trip") {
    const auto s = expand_f(200);
    std::vector<PrimeReport> rs;
    for (std::uint32_t p : {59u, 101u, 131u}) rs.push_back(from_table(*published_column(p), s));
    rs.push_back(run_prime(make_context(13), 1, nullptr, s));

    const auto md = render(rs, ReportFormat::md);
    CHECK(md.find("| #G(F_p) | 225766 | 1126560 | 2421910 |") != std::string::npos);
    CHECK(md.find("{23,24,25}") != std::string::npos);
    CHECK(md.find("inconclusive") != std::string::npos);

    const auto csv = render(rs, ReportFormat::csv);
    CHECK(csv.find("6 p^(3/2),2719.2,6090.3,8996.2,") != std::string::npos);
    CHECK(csv.find("\"{23,24,25}\"") != std::string::npos);

    const auto j = nlohmann::json::parse(render(rs, ReportFormat::json));
    REQUIRE(j.size() == rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(report_from_json(j[k]) == rs[k]);
    CHECK(j[3]["h"].is_null());

    CHECK(parse_format("csv") == ReportFormat::csv);
    CHECK_FALSE(parse_format("xml"));
    CHECK_THROWS(report_cell(rs[0], "nonsense"));
}

TEST_CASE("cache store, save, load") {
    const auto path = temp_path("cache.json");
    ResultCache c;
    CHECK_FALSE(c.dirty());
    c.store(59, Variety::G, 225766);
    c.store(59, Variety::E_union, 0);
    CHECK(c.dirty());
    CHECK(c.lookup(59, Variety::G) == 225766u);
    CHECK_FALSE(c.lookup(59, Variety::F));
    c.save(path);

    std::vector<std::string> warnings;
    const auto back = ResultCache::load(path, &warnings);
    CHECK(warnings.empty());
    CHECK(back.lookup(59, Variety::G) == 225766u);
    CHECK(back.lookup(59, Variety::E_union) == 0u);
    CHECK(back.entries().size() == 2);
    CHECK_FALSE(back.dirty());

    const auto j = back.to_json();
    CHECK(j["version"] == 1);
    CHECK(j["counts"]["59"]["G"] == 225766);
    std::filesystem::remove(path);
}

TEST_CASE("bad caches are ignored with a warning") {
    const auto path = temp_path("bad.json");
    for (const std::string body : {"{not json", R"({"version":2,"counts":{}})", R"({"version":1,"counts":{"7":{"Q":1}}})"}) {
        std::ofstream(path) << body;
        std::vector<std::string> warnings;
        const auto c = ResultCache::load(path, &warnings);
        CHECK(warnings.size() == 1);
        CHECK(c.entries().empty());
    }
    std::filesystem::remove(path);
    std::vector<std::string> warnings;
    CHECK(ResultCache::load(path, &warnings).entries().empty());
    CHECK(warnings.empty());
}

TEST_CASE("cache is transparent and results are thread-independent") {
    const auto s = expand_f(200);
    std::vector<PrimeReport> plain, cached, warm, threaded;
    ResultCache cache;
    for (std::int64_t p : {13, 17, 29, 31}) {
        const auto ctx = make_context(p);
        plain.push_back(run_prime(ctx, 1, nullptr, s));
        cached.push_back(run_prime(ctx, 1, &cache, s));
        warm.push_back(run_prime(ctx, 1, &cache, s));
        threaded.push_back(run_prime(ctx, 4, nullptr, s));
    }
    for (auto f : {ReportFormat::md, ReportFormat::csv, ReportFormat::json}) {
        CHECK(render(plain, f) == render(cached, f));
        CHECK(render(plain, f) == render(warm, f));
        CHECK(render(plain, f) == render(threaded, f));
    }
    CHECK(obtain_count(Variety::G, make_context(13), 1, &cache).method == CountMethod::cached);
}

}
