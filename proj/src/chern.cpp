#include "hm/chern.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace hm {

namespace {
void check_exponents(int a, int b) {
    if (a < 0 || b < 0) throw std::out_of_range("TruncPoly2: negative exponent");
}
}  // namespace

TruncPoly2 TruncPoly2::constant(std::int64_t c) { return monomial(0, 0, c); }
TruncPoly2 TruncPoly2::X() { return monomial(1, 0); }
TruncPoly2 TruncPoly2::Y() { return monomial(0, 1); }

TruncPoly2 TruncPoly2::monomial(int a, int b, std::int64_t c) {
    TruncPoly2 t;
    t.set(a, b, c);
    return t;
}

std::int64_t TruncPoly2::coeff(int a, int b) const {
    check_exponents(a, b);
    if (a >= kSize || b >= kSize) return 0;
    return c_[a][b];
}

void TruncPoly2::set(int a, int b, std::int64_t c) {
    check_exponents(a, b);
    if (a >= kSize || b >= kSize) return;  // X^5 = Y^5 = 0
    c_[a][b] = c;
}

TruncPoly2 TruncPoly2::degree_part(int d) const {
    TruncPoly2 t;
    for (int a = 0; a < kSize; ++a) {
        const int b = d - a;
        if (b >= 0 && b < kSize) t.c_[a][b] = c_[a][b];
    }
    return t;
}

TruncPoly2 TruncPoly2::pow(unsigned e) const {
    TruncPoly2 r = constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

TruncPoly2& TruncPoly2::operator+=(const TruncPoly2& o) {
    for (int a = 0; a < kSize; ++a)
        for (int b = 0; b < kSize; ++b) c_[a][b] += o.c_[a][b];
    return *this;
}

TruncPoly2& TruncPoly2::operator-=(const TruncPoly2& o) {
    for (int a = 0; a < kSize; ++a)
        for (int b = 0; b < kSize; ++b) c_[a][b] -= o.c_[a][b];
    return *this;
}

TruncPoly2 operator*(const TruncPoly2& x, const TruncPoly2& y) {
    TruncPoly2 r;
    constexpr int n = TruncPoly2::kSize;
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < n; ++b1) {
            if (x.c_[a1][b1] == 0) continue;
            for (int a2 = 0; a1 + a2 < n; ++a2)
                for (int b2 = 0; b1 + b2 < n; ++b2) r.c_[a1 + a2][b1 + b2] += x.c_[a1][b1] * y.c_[a2][b2];
        }
    return r;
}

TruncPoly2 operator*(std::int64_t k, const TruncPoly2& x) { return TruncPoly2::constant(k) * x; }

std::string TruncPoly2::to_string() const {
    std::string out;
    for (int d = 0; d <= 2 * (kSize - 1); ++d) {
        for (int a = d < kSize ? d : kSize - 1; a >= 0 && d - a < kSize; --a) {
            const std::int64_t c = c_[a][d - a];
            if (c == 0) continue;
            const int b = d - a;
            std::string mono;
            if (a > 0) mono += a == 1 ? "X" : fmt::format("X^{}", a);
            if (b > 0) mono += b == 1 ? "Y" : fmt::format("Y^{}", b);
            const std::int64_t mag = c < 0 ? -c : c;
            std::string term = mono.empty() ? fmt::format("{}", mag) : (mag == 1 ? mono : fmt::format("{}{}", mag, mono));
            if (out.empty())
                out = c < 0 ? "-" + term : term;
            else
                out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

TruncPoly2 chern_total() {
    const TruncPoly2 one = TruncPoly2::constant(1);
    const TruncPoly2 X = TruncPoly2::X(), Y = TruncPoly2::Y();
    return (one + X).pow(5) * (one + Y).pow(5) * (one - X - Y).pow(5);
}

EulerCharacteristics euler_characteristic() {
    const TruncPoly2 one = TruncPoly2::constant(1);
    const TruncPoly2 c3 = chern_total().degree_part(3);
    const TruncPoly2 top = c3 * (one + TruncPoly2::X() + TruncPoly2::Y()).pow(5);
    const std::int64_t chi = top.coeff(4, 4);
    return {chi, chi + 60 * 4};
}

}  // namespace hm
