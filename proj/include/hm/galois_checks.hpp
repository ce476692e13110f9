#ifndef HM_GALOIS_CHECKS_HPP
#define HM_GALOIS_CHECKS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hm/fp_arith.hpp"
#include "hm/resolution.hpp"

namespace hm {

/// Image of Frob_p in Gal(Q(i, sqrt2, sqrt5)/Q) = (Z/2)^3, as the Legendre
/// symbols ((-1/p), (2/p), (5/p)).
struct FrobImage {
    int chi_minus1 = 1;
    int chi_2 = 1;
    int chi_5 = 1;

    bool is_identity() const { return chi_minus1 == 1 && chi_2 == 1 && chi_5 == 1; }
    friend auto operator<=>(const FrobImage&, const FrobImage&) = default;
};

/// Direct Legendre computation. Throws InvalidPrime for p in {2, 5} or
/// non-prime p.
FrobImage frobenius_image(std::uint64_t p);

/// The mod-40 lookup table; `residue` must be odd and prime to 5.
FrobImage frobenius_image_table(unsigned residue);

/// The seven non-identity elements of (Z/2)^3.
std::vector<FrobImage> non_identity_classes();

struct CoverageReport {
    bool covered = false;
    std::size_t classes_hit = 0;          // out of 7
    std::vector<FrobImage> missing;
    std::vector<std::uint64_t> identity;  // members with trivial image
};

/// Do the Frobenius images of T hit every non-identity class?
CoverageReport verify_T_coverage(std::span<const std::uint64_t> T);

/// The set used for the comparison: {67, 71, 101, 103, 113, 131, 157}.
std::vector<std::uint64_t> livne_set();

/// Trace on W: p (2p + 2 - #E) for p = 1 mod 4, else 0.
/// Throws std::invalid_argument for #E != 0 when p = 3 mod 4.
std::int64_t trace_W(const PrimeContext& ctx, std::int64_t count_E);

enum class ModularityStatus { match, mismatch, inconclusive };
std::string_view status_name(ModularityStatus s);

struct ModularityRow {
    std::uint32_t p = 0;
    std::vector<std::int64_t> h_candidates;
    std::optional<std::int64_t> trace_h3;  // absent when h is ambiguous
    std::int64_t trace_W = 0;
    std::optional<std::int64_t> trace_V;
    std::int64_t a_p = 0;
    ModularityStatus status = ModularityStatus::inconclusive;
    bool match() const { return status == ModularityStatus::match; }
};

/// trace_V = trace_h3 - trace_W compared with a_p. An ambiguous or empty
/// Weil solution gives the inconclusive status.
ModularityRow modularity_row(const PrimeContext& ctx, const ResolutionCount& rc, const WeilSolution& h,
                             std::int64_t a_p);

/// #X~(F_p) even; equivalent to an even H^3 trace for odd p.
bool parity_check(std::uint32_t p, std::int64_t N);

}  // namespace hm

#endif  // HM_GALOIS_CHECKS_HPP
