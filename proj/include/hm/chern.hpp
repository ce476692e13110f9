#ifndef HM_CHERN_HPP
#define HM_CHERN_HPP

#include <array>
#include <cstdint>
#include <string>

namespace hm {

/// Z[X, Y] / (X^5, Y^5): the cohomology ring of P^4 x P^4.
class TruncPoly2 {
public:
    static constexpr int kSize = 5;

    TruncPoly2() = default;
    static TruncPoly2 constant(std::int64_t c);
    static TruncPoly2 X();
    static TruncPoly2 Y();
    static TruncPoly2 monomial(int a, int b, std::int64_t c = 1);

    std::int64_t coeff(int a, int b) const;
    void set(int a, int b, std::int64_t c);

    /// Homogeneous part of total degree d.
    TruncPoly2 degree_part(int d) const;
    TruncPoly2 pow(unsigned e) const;

    TruncPoly2& operator+=(const TruncPoly2& o);
    TruncPoly2& operator-=(const TruncPoly2& o);
    friend TruncPoly2 operator+(TruncPoly2 a, const TruncPoly2& b) { return a += b; }
    friend TruncPoly2 operator-(TruncPoly2 a, const TruncPoly2& b) { return a -= b; }
    friend TruncPoly2 operator*(const TruncPoly2& a, const TruncPoly2& b);
    friend TruncPoly2 operator*(std::int64_t k, const TruncPoly2& a);
    friend bool operator==(const TruncPoly2&, const TruncPoly2&) = default;

    std::string to_string() const;

private:
    std::array<std::array<std::int64_t, kSize>, kSize> c_{};
};

/// (1+X)^5 (1+Y)^5 (1-X-Y)^5.
TruncPoly2 chern_total();

struct EulerCharacteristics {
    std::int64_t chi_smooth;    // X^4 Y^4 coefficient of c_3 (1+X+Y)^5
    std::int64_t chi_resolved;  // chi_smooth + 60 chi(P^1 x P^1)
};

EulerCharacteristics euler_characteristic();

/// 2 b2 - b3 for a Calabi-Yau threefold with the given Euler characteristic:
/// chi = 2 + 2 b2 - b3.
inline std::int64_t betti_relation(std::int64_t chi) { return chi - 2; }

}  // namespace hm

#endif  // HM_CHERN_HPP
