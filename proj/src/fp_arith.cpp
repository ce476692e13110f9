#include "hm/fp_arith.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <fmt/format.h>

namespace hm {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return r;
}

// Reduces a copy of m to row echelon form; returns pivot columns and the
// determinant sign/product bookkeeping for square inputs.
struct Echelon {
    std::vector<Residue> data;
    std::vector<std::size_t> pivots;
    Residue det_factor = 1;
};

Echelon echelon(const FpMatrix& m, bool reduced) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::uint32_t p = m.modulus();
    Echelon e;
    e.data.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) e.data[r * cols + c] = m(r, c);
    auto at = [&](std::size_t r, std::size_t c) -> Residue& { return e.data[r * cols + c]; };
    auto inv = [p](Residue a) { return static_cast<Residue>(powmod64(a, p - 2, p)); };

    u64 det = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(piv, c), at(row, c));
            det = (p - det) % p;
        }
        const Residue pv = at(row, col);
        det = det * pv % p;
        const Residue pinv = inv(pv);
        for (std::size_t c = col; c < cols; ++c) at(row, c) = static_cast<Residue>(u64{at(row, c)} * pinv % p);
        for (std::size_t r = reduced ? 0 : row + 1; r < rows; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const u64 f = at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                at(r, c) = static_cast<Residue>((at(r, c) + (p - f) * at(row, c)) % p);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.det_factor = static_cast<Residue>(det);
    return e;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // First twelve primes as witnesses suffice below 2^64.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    return powmod64(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

PrimeContext::PrimeContext(std::int64_t p) {
    if (p < 7 || static_cast<u64>(p) >= kPrimeBound || !is_prime(static_cast<u64>(p))) {
        throw InvalidPrime(fmt::format("{} is not an odd prime ≠ 5 in [7, 2^20)", p));
    }
    p_ = static_cast<std::uint32_t>(p);

    if (p_ % 4 == 1) {
        auto r = sqrt_mod(p_ - 1, *this);
        i_root_ = r;
    }
    if (p_ % 5 == 1) {
        // Any a with a^((p-1)/5) != 1 yields a primitive fifth root g; the
        // others are its powers.
        for (Residue a = 2;; ++a) {
            Residue g = pow(a, (p_ - 1) / 5);
            if (g != 1) {
                Residue best = g, cur = g;
                for (int k = 0; k < 3; ++k) {
                    cur = mul(cur, g);
                    best = std::min(best, cur);
                }
                eps_root_ = best;
                break;
            }
        }
    }
    sqrt5_ = sqrt_mod(5 % p_, *this);
}

Residue PrimeContext::pow(Residue base, std::uint64_t e) const noexcept {
    return static_cast<Residue>(powmod64(base, e, p_));
}

Residue PrimeContext::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

Residue PrimeContext::i() const {
    if (!i_root_) throw Unavailable(fmt::format("i is not in F_{} (p = {} mod 4)", p_, p_ % 4));
    return *i_root_;
}

Residue PrimeContext::eps() const {
    if (!eps_root_) throw Unavailable(fmt::format("no fifth root of unity in F_{}", p_));
    return *eps_root_;
}

std::optional<Residue> sqrt_mod(Residue a, const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    a %= p;
    if (a == 0) return Residue{0};
    if (legendre(a, p) != 1) return std::nullopt;

    Residue r;
    if (p % 4 == 3) {
        r = ctx.pow(a, (p + 1) / 4);
    } else {
        // Tonelli-Shanks.
        std::uint32_t q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        Residue z = 2;
        while (legendre(z, p) != -1) ++z;
        unsigned m = s;
        Residue c = ctx.pow(z, q);
        Residue t = ctx.pow(a, q);
        r = ctx.pow(a, (q + 1) / 2);
        while (t != 1) {
            unsigned k = 0;
            Residue t2 = t;
            while (t2 != 1) {
                t2 = ctx.mul(t2, t2);
                ++k;
            }
            Residue b = c;
            for (unsigned j = 0; j + k + 1 < m; ++j) b = ctx.mul(b, b);
            m = k;
            c = ctx.mul(b, b);
            t = ctx.mul(t, c);
            r = ctx.mul(r, b);
        }
    }
    return std::min(r, ctx.neg(r));
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), p_(modulus), data_(rows * cols, 0) {
    if (rows > kMaxDim || cols > kMaxDim) throw std::invalid_argument("FpMatrix: dimension above 16");
    if (modulus < 2) throw std::invalid_argument("FpMatrix: modulus below 2");
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
                   std::span<const std::int64_t> entries)
    : FpMatrix(rows, cols, modulus) {
    if (entries.size() != rows * cols) throw std::invalid_argument("FpMatrix: entry count mismatch");
    for (std::size_t k = 0; k < entries.size(); ++k) set(k / cols, k % cols, entries[k]);
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    std::int64_t v = value % static_cast<std::int64_t>(p_);
    if (v < 0) v += p_;
    data_.at(r * cols_ + c) = static_cast<Residue>(v);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t modulus) {
    FpMatrix m(n, n, modulus);
    for (std::size_t k = 0; k < n; ++k) m.set(k, k, 1);
    return m;
}

FpMatrix FpMatrix::hconcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw std::invalid_argument("hconcat: shape or modulus mismatch");
    FpMatrix m(a.rows(), a.cols() + b.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, a.cols() + c, b(r, c));
    }
    return m;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const {
    if (v.size() != cols_) throw std::invalid_argument("FpMatrix::apply: length mismatch");
    std::vector<Residue> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        u64 acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + u64{(*this)(r, c)} * (v[c] % p_)) % p_;
        out[r] = static_cast<Residue>(acc);
    }
    return out;
}

std::size_t matrix_rank(const FpMatrix& m) { return echelon(m, false).pivots.size(); }

Residue determinant(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Echelon e = echelon(m, false);
    return e.pivots.size() == m.rows() ? e.det_factor : 0;
}

std::vector<std::vector<Residue>> null_space(const FpMatrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t cols = m.cols();
    Echelon e = echelon(m, true);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Residue>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Residue> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            Residue entry = e.data[k * cols + free];
            v[e.pivots[k]] = entry == 0 ? 0 : p - entry;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hm
