// Slow, independent reference implementations used only by tests.
// Nothing here calls into the library's arithmetic or counting code.
#ifndef HM_TESTS_ORACLES_HPP
#define HM_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Vec5 = std::array<i64, 5>;

inline i64 md(i64 a, i64 p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline i64 pow_slow(i64 a, i64 e, i64 p) {
    i64 r = 1 % p;
    a = md(a, p);
    for (i64 k = 0; k < e; ++k) r = r * a % p;
    return r;
}

inline bool is_square_bruteforce(i64 a, i64 p) {
    a = md(a, p);
    for (i64 r = 0; r < p; ++r)
        if (r * r % p == a) return true;
    return false;
}

// Expansion of the determinantal quintic as a list of 20 monomials.
inline i64 G_expanded(const Vec5& z, i64 p) {
    auto m = [&](int a, int b, int c, int d, int e) {
        return md(z[a] * z[b] % p * z[c] % p * z[d] % p * z[e], p);
    };
    i64 plus = m(0, 0, 0, 1, 4) + m(1, 1, 1, 2, 0) + m(2, 2, 2, 3, 1) + m(3, 3, 3, 4, 2) + m(4, 4, 4, 0, 3) +
               m(0, 2, 2, 3, 3) + m(1, 3, 3, 4, 4) + m(2, 4, 4, 0, 0) + m(3, 0, 0, 1, 1) + m(4, 1, 1, 2, 2);
    i64 minus = m(0, 1, 1, 4, 4) + m(1, 2, 2, 0, 0) + m(2, 3, 3, 1, 1) + m(3, 4, 4, 2, 2) + m(4, 0, 0, 3, 3) +
                m(0, 0, 0, 2, 3) + m(1, 1, 1, 3, 4) + m(2, 2, 2, 4, 0) + m(3, 3, 3, 0, 1) + m(4, 4, 4, 1, 2);
    return md(plus - minus, p);
}

// Half the determinant of M(x), expanded by hand into its 20 monomials.
inline i64 F_expanded(const Vec5& x, i64 p) {
    auto m = [&](int a, int b, int c, int d, int e) {
        return md(x[a] * x[b] % p * x[c] % p * x[d] % p * x[e], p);
    };
    i64 plus = m(0, 0, 0, 1, 4) + m(1, 1, 1, 2, 0) + m(2, 2, 2, 3, 1) + m(3, 3, 3, 4, 2) + m(4, 4, 4, 0, 3) +
               m(0, 1, 1, 4, 4) + m(1, 2, 2, 0, 0) + m(2, 3, 3, 1, 1) + m(3, 4, 4, 2, 2) + m(4, 0, 0, 3, 3);
    i64 minus = m(0, 0, 0, 2, 3) + m(1, 1, 1, 3, 4) + m(2, 2, 2, 4, 0) + m(3, 3, 3, 0, 1) + m(4, 4, 4, 1, 2) +
                m(0, 2, 2, 3, 3) + m(1, 3, 3, 4, 4) + m(2, 4, 4, 0, 0) + m(3, 0, 0, 1, 1) + m(4, 1, 1, 2, 2);
    return md(plus - minus, p);
}

// Five quadrics with parameter y; with y^2 = -1 these cut out one elliptic branch.
inline bool on_E_param(const Vec5& z, i64 y, i64 p) {
    for (int k = 0; k < 5; ++k) {
        const i64 v = -y * z[k] * z[k] - z[(k + 1) % 5] * z[(k + 4) % 5] + y * y % p * z[(k + 2) % 5] % p * z[(k + 3) % 5];
        if (md(v, p) != 0) return false;
    }
    return true;
}

// Every point of P^4(F_p) once: iterate all nonzero vectors, keep those whose
// first nonzero entry is 1.
inline void for_each_projective(i64 p, const std::function<void(const Vec5&)>& f) {
    Vec5 v{};
    const i64 total = p * p * p * p * p;
    for (i64 idx = 1; idx < total; ++idx) {
        i64 t = idx;
        for (int k = 4; k >= 0; --k) {
            v[k] = t % p;
            t /= p;
        }
        auto it = std::find_if(v.begin(), v.end(), [](i64 c) { return c != 0; });
        if (*it == 1) f(v);
    }
}

inline std::uint64_t count_naive(i64 p, const std::function<bool(const Vec5&)>& pred) {
    std::uint64_t n = 0;
    for_each_projective(p, [&](const Vec5& v) { n += pred(v) ? 1 : 0; });
    return n;
}

// Leibniz expansion.
inline i64 det_leibniz(const std::vector<std::vector<i64>>& a, i64 p) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    i64 total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        i64 term = 1;
        for (std::size_t i = 0; i < n; ++i) term = term * md(a[i][perm[i]], p) % p;
        total = md(total + (inversions % 2 ? -term : term), p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        f(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const std::vector<std::vector<i64>>& a, i64 p) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        bool found = false;
        subsets(rows, k, [&](const std::vector<std::size_t>& rs) {
            if (found) return;
            subsets(cols, k, [&](const std::vector<std::size_t>& cs) {
                if (found) return;
                std::vector<std::vector<i64>> m(k, std::vector<i64>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rs[i]][cs[j]];
                found = det_leibniz(m, p) != 0;
            });
        });
        if (found) return k;
    }
    return 0;
}

// prod (1-q^k) from the pentagonal number theorem.
inline std::vector<i64> euler_pentagonal(std::size_t len) {
    std::vector<i64> e(len, 0);
    const i64 n = static_cast<i64>(len);
    if (n > 0) e[0] = 1;
    for (i64 m = 1; m * (3 * m - 1) / 2 < n; ++m) {
        const i64 sign = m % 2 ? -1 : 1;
        e[m * (3 * m - 1) / 2] += sign;
        if (m * (3 * m + 1) / 2 < n) e[m * (3 * m + 1) / 2] += sign;
    }
    return e;
}

// prod (1-q^k)^3 from Jacobi's identity.
inline std::vector<i64> euler_cube_jacobi(std::size_t len) {
    std::vector<i64> c(len, 0);
    for (i64 m = 0; m * (m + 1) / 2 < static_cast<i64>(len); ++m) c[m * (m + 1) / 2] = (m % 2 ? -1 : 1) * (2 * m + 1);
    return c;
}

inline std::vector<i64> mul_trunc(const std::vector<i64>& a, const std::vector<i64>& b, std::size_t len) {
    std::vector<i64> c(len, 0);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Coefficients a_1..a_n (index 0 unused) of q prod (1-q^k)^4 (1-q^{5k})^4.
inline std::vector<i64> eta_product_coeffs(std::size_t n) {
    const auto e4 = mul_trunc(euler_pentagonal(n), euler_cube_jacobi(n), n);
    std::vector<i64> e4_5(n, 0);
    for (std::size_t k = 0; 5 * k < n; ++k) e4_5[5 * k] = e4[k];
    const auto prod = mul_trunc(e4, e4_5, n);
    std::vector<i64> a(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) a[k + 1] = prod[k];
    return a;
}

inline bool is_prime_trial(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace oracle

#endif  // HM_TESTS_ORACLES_HPP
