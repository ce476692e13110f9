#ifndef HM_POINT_COUNT_HPP
#define HM_POINT_COUNT_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hm/fp_arith.hpp"
#include "hm/varieties.hpp"

namespace hm {

enum class Variety { G, F, E_union, E1, E2 };

std::string_view variety_name(Variety v);
/// Accepts the cache keys (G, F, E, E1, E2) case-insensitively.
std::optional<Variety> parse_variety(std::string_view s);

enum class CountMethod { computed, cached };

struct CountRecord {
    std::uint32_t p = 0;
    Variety variety = Variety::G;
    std::uint64_t count = 0;
    std::chrono::duration<double> elapsed{0};
    CountMethod method = CountMethod::computed;
};

/// #P^4(F_p) = p^4 + p^3 + p^2 + p + 1.
std::uint64_t projective_size(std::uint32_t p);

/// Counting keeps p^4 inside 64 bits.
inline constexpr std::uint32_t kCountPrimeBound = 1u << 16;

/// A homogeneous form on five coordinates.
using FormEvaluator = std::function<Residue(const Coords&)>;

/// Forms of one common degree, all required to vanish.
struct FormSystem {
    int degree = 0;
    std::vector<FormEvaluator> forms;
};

/// Number of points of P^4(F_p) where every form in the system vanishes.
///
/// The points are walked stratum by stratum (leading coordinate 1, earlier
/// ones 0). Along each line in the last coordinate the first form is a
/// univariate polynomial of degree <= `degree`; it is sampled at degree+1
/// points and stepped with forward differences, and the remaining forms are
/// only evaluated where the first one vanishes. Threads split the first free
/// coordinate of the leading stratum; partial counts are summed, so the
/// result does not depend on `threads`.
///
/// Throws InvalidPrime if p >= 2^16, std::invalid_argument on a bad system.
std::uint64_t count_common_zeros(const FormSystem& system, const PrimeContext& ctx, unsigned threads);

/// Single form.
CountRecord count_hypersurface(const FormEvaluator& form, int degree, Variety tag, const PrimeContext& ctx,
                               unsigned threads);

CountRecord count_G(const PrimeContext& ctx, unsigned threads);
CountRecord count_F(const PrimeContext& ctx, unsigned threads);

/// #E1(F_p) + #E2(F_p); zero without enumeration when p = 3 mod 4.
CountRecord count_E_union(const PrimeContext& ctx, unsigned threads);

/// One branch. Throws Unavailable when p = 3 mod 4.
CountRecord count_E_single(const PrimeContext& ctx, Branch branch, unsigned threads = 1);

CountRecord count_variety(Variety v, const PrimeContext& ctx, unsigned threads);

/// hardware_concurrency(), at least 1.
unsigned default_threads();

}  // namespace hm

#endif  // HM_POINT_COUNT_HPP
