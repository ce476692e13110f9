#include "hm/galois_checks.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace hm {

FrobImage frobenius_image(std::uint64_t p) {
    if (p == 2 || p == 5 || !is_prime(p))
        throw InvalidPrime(fmt::format("{} is not a prime of good reduction", p));
    return {legendre(-1, p), legendre(2, p), legendre(5, p)};
}

FrobImage frobenius_image_table(unsigned residue) {
    switch (residue % 40) {
        case 3: case 27: return {-1, -1, -1};
        case 7: case 23: return {-1, 1, -1};
        case 11: case 19: return {-1, -1, 1};
        case 13: case 37: return {1, -1, -1};
        case 17: case 33: return {1, 1, -1};
        case 21: case 29: return {1, -1, 1};
        case 31: case 39: return {-1, 1, 1};
        case 1: case 9: return {1, 1, 1};
        default: throw std::invalid_argument(fmt::format("residue {} mod 40 is not a unit", residue % 40));
    }
}

std::vector<FrobImage> non_identity_classes() {
    std::vector<FrobImage> out;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) {
                FrobImage f{a, b, c};
                if (!f.is_identity()) out.push_back(f);
            }
    return out;
}

CoverageReport verify_T_coverage(std::span<const std::uint64_t> T) {
    CoverageReport rep;
    std::set<FrobImage> hit;
    for (auto p : T) {
        const FrobImage f = frobenius_image(p);
        if (f.is_identity())
            rep.identity.push_back(p);
        else
            hit.insert(f);
    }
    for (const auto& f : non_identity_classes())
        if (!hit.contains(f)) rep.missing.push_back(f);
    rep.classes_hit = hit.size();
    rep.covered = rep.missing.empty();
    return rep;
}

std::vector<std::uint64_t> livne_set() { return {67, 71, 101, 103, 113, 131, 157}; }

std::int64_t trace_W(const PrimeContext& ctx, std::int64_t count_E) {
    const std::int64_t p = ctx.p();
    if (ctx.p_mod_4() == 3) {
        if (count_E != 0) throw std::invalid_argument(fmt::format("#E = {} but p = {} is 3 mod 4", count_E, p));
        return 0;
    }
    return p * (2 * p + 2 - count_E);
}

std::string_view status_name(ModularityStatus s) {
    switch (s) {
        case ModularityStatus::match: return "match";
        case ModularityStatus::mismatch: return "mismatch";
        case ModularityStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

ModularityRow modularity_row(const PrimeContext& ctx, const ResolutionCount& rc, const WeilSolution& h,
                             std::int64_t a_p) {
    ModularityRow row;
    row.p = ctx.p();
    row.h_candidates = h.candidates;
    row.trace_W = trace_W(ctx, rc.count_E);
    row.a_p = a_p;
    if (!h.unique) {
        row.status = ModularityStatus::inconclusive;
        return row;
    }
    row.trace_h3 = trace_h3(ctx.p(), rc.count_X_tilde, *h.unique);
    row.trace_V = *row.trace_h3 - row.trace_W;
    row.status = *row.trace_V == a_p ? ModularityStatus::match : ModularityStatus::mismatch;
    return row;
}

bool parity_check(std::uint32_t /*p*/, std::int64_t N) { return N % 2 == 0; }

}  // namespace hm
