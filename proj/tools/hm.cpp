// hm: point counts, node bookkeeping and Frobenius-trace tables for the
// resolved Horrocks-Mumford threefold.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hm/cache.hpp"
#include "hm/chern.hpp"
#include "hm/eta_forms.hpp"
#include "hm/galois_checks.hpp"
#include "hm/golden.hpp"
#include "hm/node_atlas.hpp"
#include "hm/point_count.hpp"
#include "hm/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hm::PrimeContext context_for(std::int64_t p) {
    try {
        return hm::make_context(p);
    } catch (const hm::InvalidPrime&) {
        throw BadInput(fmt::format("p = {}: not an odd prime ≠ 5 (need a prime 7 <= p < 2^20)", p));
    }
}

std::optional<hm::ResultCache> open_cache(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::vector<std::string> warnings;
    auto cache = hm::ResultCache::load(path, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return cache;
}

void close_cache(const std::optional<hm::ResultCache>& cache, const std::string& path) {
    if (cache && cache->dirty()) cache->save(path);
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

int cmd_count(const std::string& variety, std::int64_t p, unsigned threads, const std::string& cache_path) {
    const auto v = hm::parse_variety(variety);
    if (!v) throw BadInput(fmt::format("unknown variety '{}' (expected g, f, e, e1, e2)", variety));
    const auto ctx = context_for(p);
    if (ctx.p() >= hm::kCountPrimeBound) throw BadInput(fmt::format("p = {} above the counting bound 2^16", p));
    if ((*v == hm::Variety::E1 || *v == hm::Variety::E2) && !ctx.has_i())
        throw BadInput(fmt::format("E1/E2 are not defined over F_{} (p = 3 mod 4)", p));
    auto cache = open_cache(cache_path);
    const auto rec = hm::obtain_count(*v, ctx, threads, cache ? &*cache : nullptr);
    close_cache(cache, cache_path);
    fmt::print("#{}(F_{}) = {}  [{}, {:.3f} s]\n", hm::variety_name(rec.variety), rec.p, rec.count,
               rec.method == hm::CountMethod::cached ? "cached" : "computed", rec.elapsed.count());
    return kOk;
}

int cmd_report(const std::vector<std::int64_t>& primes_in, const std::string& format, bool golden,
               const std::string& cache_path, bool verify_cache, unsigned threads) {
    const auto fmt_kind = hm::parse_format(format);
    if (!fmt_kind) throw BadInput(fmt::format("unknown format '{}' (expected md, csv, json)", format));

    std::vector<std::int64_t> primes = primes_in;
    if (primes.empty())
        for (auto p : hm::published_primes()) primes.push_back(p);
    std::vector<hm::PrimeContext> ctxs;
    for (auto p : primes) {
        auto ctx = context_for(p);
        if (ctx.p() >= hm::kCountPrimeBound) throw BadInput(fmt::format("p = {} above the counting bound 2^16", p));
        ctxs.push_back(ctx);
    }

    auto cache = open_cache(cache_path);
    int rc = kOk;
    if (verify_cache && cache) {
        for (const auto& ctx : ctxs) {
            for (auto v : {hm::Variety::G, hm::Variety::E_union}) {
                const auto hit = cache->lookup(ctx.p(), v);
                if (!hit) continue;
                const auto fresh = hm::count_variety(v, ctx, threads).count;
                if (fresh != *hit) {
                    std::cerr << fmt::format("cache mismatch: #{}(F_{}) cached {} recomputed {}\n",
                                             hm::variety_name(v), ctx.p(), *hit, fresh);
                    cache->store(ctx.p(), v, fresh);
                    rc = kMismatch;
                }
            }
        }
    }

    std::uint32_t pmax = 0;
    for (const auto& c : ctxs) pmax = std::max(pmax, c.p());
    const auto series = hm::expand_f(static_cast<int>(std::max<std::uint32_t>(pmax, 25)));

    std::vector<hm::PrimeReport> reports;
    for (const auto& ctx : ctxs) reports.push_back(hm::run_prime(ctx, threads, cache ? &*cache : nullptr, series));
    close_cache(cache, cache_path);

    std::cout << hm::render(reports, *fmt_kind);

    if (golden) {
        for (const auto& r : reports) {
            if (!hm::published_column(r.p)) {
                std::cerr << fmt::format("golden: p = {} is not tabulated, skipped\n", r.p);
                continue;
            }
            for (const auto& d : hm::compare_with_published(r)) {
                std::cerr << fmt::format("golden: p = {} {}: published {} computed {}{}\n", d.p, d.key,
                                         d.published.empty() ? "(blank)" : d.published, d.computed,
                                         d.known_misprint ? " [known misprint]" : "");
                if (!d.known_misprint) rc = kMismatch;
            }
        }
        if (rc == kOk) std::cerr << "golden: all tabulated cells agree\n";
    }
    return rc;
}

int cmd_modularity(const std::vector<std::int64_t>& primes, bool check_T, unsigned threads,
                   const std::string& cache_path) {
    int rc = kOk;
    if (check_T) {
        const auto T = hm::livne_set();
        const auto cov = hm::verify_T_coverage(T);
        fmt::print("T = {{{}}}: {}/7 classes covered\n", fmt::join(T, ", "), cov.classes_hit);
        for (const auto& m : cov.missing)
            fmt::print("  missing ({}, {}, {})\n", sign_str(m.chi_minus1), sign_str(m.chi_2), sign_str(m.chi_5));
        if (!cov.covered) rc = kMismatch;
    }
    if (!primes.empty()) {
        std::vector<hm::PrimeContext> ctxs;
        for (auto p : primes) ctxs.push_back(context_for(p));
        std::uint32_t pmax = 25;
        for (const auto& c : ctxs) pmax = std::max(pmax, c.p());
        const auto series = hm::expand_f(static_cast<int>(pmax));
        auto cache = open_cache(cache_path);
        fmt::print("{:>5} {:>9} {:>9} {:>9} {:>9}  {}\n", "p", "tr H^3", "tr W", "tr V", "a_p", "status");
        for (const auto& ctx : ctxs) {
            const auto r = hm::run_prime(ctx, threads, cache ? &*cache : nullptr, series);
            const auto tw = hm::trace_W(ctx, r.count_E);
            const auto tv = r.trace_h3 ? fmt::format("{}", *r.trace_h3 - tw) : std::string("?");
            const auto img = hm::frobenius_image(ctx.p());
            fmt::print("{:>5} {:>9} {:>9} {:>9} {:>9}  {}  Frob=({}, {}, {})\n", ctx.p(),
                       r.trace_h3 ? fmt::format("{}", *r.trace_h3) : "?", tw, tv, r.a_p, hm::status_name(r.status),
                       sign_str(img.chi_minus1), sign_str(img.chi_2), sign_str(img.chi_5));
            if (r.status == hm::ModularityStatus::mismatch) rc = kMismatch;
        }
        close_cache(cache, cache_path);
    }
    if (!check_T && primes.empty()) throw BadInput("modularity needs --primes or --check-T");
    return rc;
}

int cmd_nodes(std::int64_t p, bool verify) {
    const auto ctx = context_for(p);
    const auto nodes = hm::enumerate_nodes(ctx);
    const auto inv = hm::summarize_nodes(nodes, ctx);
    fmt::print("p = {} (p mod 20 = {}): i {}, eps {}, sqrt5 {}\n", ctx.p(), ctx.p_mod_20(), ctx.has_i() ? "yes" : "no",
               ctx.has_eps() ? "yes" : "no", ctx.has_sqrt5() ? "yes" : "no");
    fmt::print("defined: sigma {}, tau {}, regular {}\n", inv.sigma_defined, inv.tau_defined, inv.regular_defined);
    fmt::print("rational rulings: sigma {}, tau {}, regular {}\n", inv.sigma_rational, inv.tau_rational,
               inv.regular_rational);
    fmt::print("blowup correction: {}\n", inv.correction_total);

    int singular = 0;
    if (verify) {
        for (const auto& n : nodes) {
            if (!n.defined) continue;
            const bool ok = hm::verify_node_singular(n, ctx);
            singular += ok;
            const auto& [x, z] = *n.coords;
            fmt::print("  {:<7} k={} s={} j={}  x=({})  z=({})  {}  rulings {}\n", hm::node_class_name(n.node_class),
                       n.orbit.shift, sign_str(n.orbit.sign), n.orbit.power, fmt::join(x.coords(), ":"),
                       fmt::join(z.coords(), ":"), ok ? "singular" : "NOT SINGULAR",
                       *n.ruling_rational ? "rational" : "conjugate");
        }
    }
    fmt::print("{} nodes", inv.defined_total());
    if (verify) fmt::print(", {} singular-verified", singular);
    fmt::print(", {} rulings rational\n", inv.rational_total());
    const bool tally_ok = inv.defined_total() == hm::expected_defined_nodes(ctx);
    if (!tally_ok) fmt::print("definedness tally disagrees with the p mod 20 rule ({})\n", hm::expected_defined_nodes(ctx));
    return (verify && singular != inv.defined_total()) || !tally_ok ? kMismatch : kOk;
}

int cmd_form(std::optional<int> upto, std::optional<int> coeff) {
    if (!upto && !coeff) throw BadInput("form needs --upto N or --coeff n");
    const int n = std::max({upto.value_or(0), coeff.value_or(0), 25});
    if (n > hm::kMaxSeriesLength || upto.value_or(1) < 1 || coeff.value_or(1) < 1)
        throw BadInput(fmt::format("coefficient index must lie in [1, {}]", hm::kMaxSeriesLength));
    const auto s = hm::expand_f(n);
    if (coeff) fmt::print("a_{} = {}\n", *coeff, s[*coeff]);
    if (upto) {
        for (int k = 1; k <= *upto; ++k) fmt::print("{} {}\n", k, s[k]);
    }
    const auto hecke = hm::hecke_checks(s);
    const auto parity = hm::ap_parity(s);
    if (!hecke.empty() || !parity.ok()) {
        std::cerr << fmt::format("form checks failed: {} Hecke violations, {} odd a_p\n", hecke.size(),
                                 parity.odd.size());
        return kMismatch;
    }
    return kOk;
}

int cmd_chern() {
    const auto c3 = hm::chern_total().degree_part(3);
    const auto chi = hm::euler_characteristic();
    fmt::print("c3(X') = {}\n", c3.to_string());
    fmt::print("χ(X') = {}, χ(X̃) = {}\n", chi.chi_smooth, chi.chi_resolved);
    fmt::print("2h^2 - h^3 = {}\n", hm::betti_relation(chi.chi_resolved));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts and Frobenius traces for the resolved Horrocks-Mumford threefold"};
    app.require_subcommand(1);
    unsigned threads = hm::default_threads();
    std::string cache_path;

    auto* count = app.add_subcommand("count", "Count F_p-points on G, F, E, E1 or E2");
    std::string variety = "g";
    std::int64_t count_p = 0;
    count->add_option("--variety", variety, "g | f | e | e1 | e2")->required();
    count->add_option("--prime", count_p, "prime p")->required();
    count->add_option("--threads", threads, "worker threads");
    count->add_option("--cache", cache_path, "JSON count cache");

    auto* report = app.add_subcommand("report", "Trace tables for a list of primes");
    std::vector<std::int64_t> report_primes;
    std::string format = "md";
    bool golden = false, verify_cache = false;
    report->add_option("--primes", report_primes, "comma-separated primes (default: the tabulated ones)")
        ->delimiter(',');
    report->add_option("--format", format, "md | csv | json");
    report->add_flag("--golden", golden, "compare with the published tables");
    report->add_option("--cache", cache_path, "JSON count cache");
    report->add_flag("--verify-cache", verify_cache, "recompute cached counts and compare");
    report->add_option("--threads", threads, "worker threads");

    auto* modularity = app.add_subcommand("modularity", "Compare tr V with a_p; check the set T");
    std::vector<std::int64_t> mod_primes;
    bool check_T = false;
    modularity->add_option("--primes", mod_primes, "comma-separated primes")->delimiter(',');
    modularity->add_flag("--check-T", check_T, "check Frobenius coverage of (Z/2)^3 by T");
    modularity->add_option("--threads", threads, "worker threads");
    modularity->add_option("--cache", cache_path, "JSON count cache");

    auto* nodes = app.add_subcommand("nodes", "Node inventory over F_p");
    std::int64_t nodes_p = 0;
    bool verify = false;
    nodes->add_option("--prime", nodes_p, "prime p")->required();
    nodes->add_flag("--verify", verify, "check each defined node with the rank criterion");

    auto* form = app.add_subcommand("form", "Coefficients of (eta(q) eta(q^5))^4");
    std::optional<int> upto, coeff;
    form->add_option("--upto", upto, "print a_1..a_N");
    form->add_option("--coeff", coeff, "print a_n");

    auto* chern = app.add_subcommand("chern", "Chern class c3 and Euler characteristics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    if (threads == 0) threads = 1;

    try {
        if (*count) return cmd_count(variety, count_p, threads, cache_path);
        if (*report) return cmd_report(report_primes, format, golden, cache_path, verify_cache, threads);
        if (*modularity) return cmd_modularity(mod_primes, check_T, threads, cache_path);
        if (*nodes) return cmd_nodes(nodes_p, verify);
        if (*form) return cmd_form(upto, coeff);
        if (*chern) return cmd_chern();
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kBadInput;
}
