#ifndef HM_RESOLUTION_HPP
#define HM_RESOLUTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hm/fp_arith.hpp"
#include "hm/node_atlas.hpp"
#include "hm/point_count.hpp"

namespace hm {

/// #X~(F_p) = #G + p #E + sum of blowup corrections.
struct ResolutionCount {
    std::uint32_t p = 0;
    std::int64_t count_G = 0;
    std::int64_t count_E = 0;
    std::int64_t correction_total = 0;
    std::int64_t count_X_tilde = 0;
};

/// Integer solutions of a Weil-bound squeeze.
struct WeilSolution {
    std::vector<std::int64_t> candidates;
    /// Present iff exactly one candidate.
    std::optional<std::int64_t> unique;

    static WeilSolution from(std::vector<std::int64_t> c);
};

/// `counts` must hold G and E_union records for ctx.p(); throws
/// std::invalid_argument otherwise.
ResolutionCount count_X_tilde(const PrimeContext& ctx, std::span<const CountRecord> counts, const NodeInventory& inv);

/// p^3 + 1 + h (p + p^2) - N: trace of Frobenius on H^3 when H^2 has trace hp.
std::int64_t trace_h3(std::uint32_t p, std::int64_t N, std::int64_t h);

/// All h2 >= 69 with (1 + p h2 + p^2 h2 + p^3 - N)^2 <= (2 h2 - 138)^2 p^3,
/// i.e. |tr H^3| <= b3 p^{3/2} with b3 = 2 b2 - 138.
WeilSolution solve_h2(std::uint32_t p, std::int64_t N);
inline WeilSolution solve_h2_at_101(std::int64_t N) { return solve_h2(101, N); }

/// All h with (p^3 + 1 + h (p + p^2) - N)^2 <= b3^2 p^3.
WeilSolution solve_h(const PrimeContext& ctx, std::int64_t N, std::int64_t b3 = 6);

/// h in {12, 20, 24, 72} as predicted from whether i and epsilon lie in F_p.
std::int64_t conjectured_h(const PrimeContext& ctx);

/// |trace| <= b3 p^{3/2}, compared as squares.
bool within_weil_bound(std::int64_t trace, std::uint32_t p, std::int64_t b3 = 6);

}  // namespace hm

#endif  // HM_RESOLUTION_HPP
