#ifndef HM_VARIETIES_HPP
#define HM_VARIETIES_HPP

#include <array>
#include <cstdint>

#include "hm/fp_arith.hpp"

namespace hm {

/// Homogeneous coordinates on P^4, not necessarily canonical.
using Coords = std::array<Residue, 5>;

/// A point of P^4(F_p) in canonical form: first nonzero coordinate is 1.
class ProjPoint5 {
public:
    /// Throws std::invalid_argument for the zero vector.
    static ProjPoint5 canonical(const Coords& c, const PrimeContext& ctx);
    static ProjPoint5 from_ints(const std::array<std::int64_t, 5>& c, const PrimeContext& ctx);

    const Coords& coords() const noexcept { return coords_; }
    Residue operator[](std::size_t k) const { return coords_[k]; }

    friend bool operator==(const ProjPoint5&, const ProjPoint5&) = default;
    friend auto operator<=>(const ProjPoint5&, const ProjPoint5&) = default;

private:
    explicit ProjPoint5(const Coords& c) : coords_(c) {}
    Coords coords_;
};

/// (lambda : mu) on P^1, canonicalized the same way.
class CurveParam {
public:
    static CurveParam canonical(Residue lambda, Residue mu, const PrimeContext& ctx);
    Residue lambda() const noexcept { return lambda_; }
    Residue mu() const noexcept { return mu_; }
    friend bool operator==(const CurveParam&, const CurveParam&) = default;

private:
    CurveParam(Residue l, Residue m) : lambda_(l), mu_(m) {}
    Residue lambda_;
    Residue mu_;
};

enum class Branch { E1 = 1, E2 = 2 };

/// The quintic F = det M(x) / 2, the image of X in P^4(x):
///   sum_i x_i^3 x_{i+1} x_{i+4} - x_i^3 x_{i+2} x_{i+3}
///         + x_i x_{i+1}^2 x_{i+4}^2 - x_i x_{i+2}^2 x_{i+3}^2.
Residue eval_F(const Coords& x, const PrimeContext& ctx);

/// The same monomials with signs (+, +, -, -). Commonly quoted for F, but not
/// proportional to det M(x); kept for comparison only.
Residue eval_F_displayed(const Coords& x, const PrimeContext& ctx);

/// The quintic G = det L(z) / 2, signs (+, -, -, +).
Residue eval_G(const Coords& z, const PrimeContext& ctx);

/// M(x) with X = { M(x) z = 0 }.
FpMatrix build_M(const Coords& x, const PrimeContext& ctx);
/// L(z) with X = { L(z) x = 0 }.
FpMatrix build_L(const Coords& z, const PrimeContext& ctx);

/// The five bilinear forms (M(x) z)_r.
std::array<Residue, 5> bilinear_forms(const Coords& x, const Coords& z, const PrimeContext& ctx);

/// (x, z) lies on the complete intersection X.
bool on_X(const Coords& x, const Coords& z, const PrimeContext& ctx);

/// Quadrics cutting out E1 (+i) or E2 (-i):
///   (+-i) z_k^2 + z_{k+1} z_{k+4} + z_{k+2} z_{k+3},  k = 0..4.
/// Throws Unavailable when p = 3 mod 4.
std::array<Residue, 5> eval_E(const Coords& z, Branch branch, const PrimeContext& ctx);

/// The elliptic normal curve family:
///   q_k = -lambda mu z_k^2 - mu^2 z_{k+1} z_{k+4} + lambda^2 z_{k+2} z_{k+3}.
std::array<Residue, 5> eval_E_family(const Coords& z, const CurveParam& par, const PrimeContext& ctx);

/// Constants with det M(x) = c_F F(x) and det L(z) = c_G G(z) over F_p.
struct DetCalibration {
    Residue c_F;
    Residue c_G;
};

/// Fits both constants at one point each and confirms them on `samples`
/// random points. Throws std::logic_error if any sample disagrees.
DetCalibration calibrate_determinants(const PrimeContext& ctx, int samples = 100,
                                      std::uint64_t seed = 0x5eed);

/// Cyclic shift (sigma^k v)_t = v_{t+k}.
Coords shift(const Coords& v, int k);
/// Diagonal Heisenberg action (tau^j v)_t = eps^{j t} v_t.
Coords tau_power(const Coords& v, int j, const PrimeContext& ctx);

}  // namespace hm

#endif  // HM_VARIETIES_HPP
