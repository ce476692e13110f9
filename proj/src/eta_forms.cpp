#include "hm/eta_forms.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "hm/fp_arith.hpp"

namespace hm {

namespace {

using u64 = std::uint64_t;

std::vector<std::int64_t> to_signed(const std::vector<u64>& v) {
    std::vector<std::int64_t> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = static_cast<std::int64_t>(v[k]);
    return out;
}

// series *= (1 - q^m)^e for e in {2, 4}, in place; descending n reads only
// untouched lower entries.
void apply_binomial(std::vector<u64>& s, std::size_t m, int e) {
    const std::size_t len = s.size();
    if (e == 4) {
        for (std::size_t n = len; n-- > m;) {
            u64 v = s[n] - 4 * s[n - m];
            if (n >= 2 * m) v += 6 * s[n - 2 * m];
            if (n >= 3 * m) v -= 4 * s[n - 3 * m];
            if (n >= 4 * m) v += s[n - 4 * m];
            s[n] = v;
        }
    } else {
        for (std::size_t n = len; n-- > m;) {
            u64 v = s[n] - 2 * s[n - m];
            if (n >= 2 * m) v += s[n - 2 * m];
            s[n] = v;
        }
    }
}

std::vector<u64> euler_power(std::size_t len, std::size_t step, int e) {
    std::vector<u64> s(len, 0);
    if (len == 0) return s;
    s[0] = 1;
    for (std::size_t m = step; m < len; m += step) apply_binomial(s, m, e);
    return s;
}

bool is_small_prime(int n) { return n >= 2 && is_prime(static_cast<std::uint64_t>(n)); }

}  // namespace

SeriesCoeffs::SeriesCoeffs(int n_max, std::vector<std::int64_t> a) : n_max_(n_max), a_(std::move(a)) {
    if (static_cast<int>(a_.size()) != n_max_ + 1) throw std::invalid_argument("SeriesCoeffs: length mismatch");
}

std::int64_t SeriesCoeffs::operator[](int n) const {
    if (n < 1 || n > n_max_) throw std::out_of_range(fmt::format("a_{} outside 1..{}", n, n_max_));
    return a_[n];
}

std::vector<std::int64_t> euler_power4(std::size_t len, std::size_t step) {
    return to_signed(euler_power(len, step, 4));
}

std::vector<std::int64_t> euler_power4_by_squaring(std::size_t len, std::size_t step) {
    const std::vector<u64> sq = euler_power(len, step, 2);
    std::vector<u64> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (sq[i] == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) out[i + j] += sq[i] * sq[j];
    }
    return to_signed(out);
}

SeriesCoeffs expand_f(int n_max) {
    if (n_max < 1 || n_max > kMaxSeriesLength)
        throw std::invalid_argument(fmt::format("n_max = {} outside [1, {}]", n_max, kMaxSeriesLength));
    // f = q * P(q) with P = prod (1-q^k)^4 (1-q^{5k})^4, so a_n = P_{n-1}.
    const auto len = static_cast<std::size_t>(n_max);
    std::vector<u64> s = euler_power(len, 1, 4);
    for (std::size_t m = 5; m < len; m += 5) apply_binomial(s, m, 4);
    std::vector<std::int64_t> a(len + 1, 0);
    for (std::size_t n = 1; n <= len; ++n) a[n] = static_cast<std::int64_t>(s[n - 1]);
    return SeriesCoeffs(n_max, std::move(a));
}

std::vector<HeckeViolation> hecke_checks(const SeriesCoeffs& s) {
    const int n_max = s.n_max();
    if (n_max < 25) throw std::invalid_argument("hecke_checks needs n_max >= 25");
    std::vector<HeckeViolation> bad;
    for (int m = 2; m <= n_max; ++m) {
        for (int n = m + 1; static_cast<long>(m) * n <= n_max; ++n) {
            if (std::gcd(m, n) != 1) continue;
            const std::int64_t want = s[m] * s[n];
            if (s[m * n] != want) bad.push_back({"mult", m, n, want, s[m * n]});
        }
    }
    for (int p = 2; p * p <= n_max; ++p) {
        if (!is_small_prime(p)) continue;
        const std::int64_t ap = s[p];
        const std::int64_t cube = static_cast<std::int64_t>(p) * p * p;
        const std::int64_t want = p == 5 ? ap * ap : ap * ap - cube;
        if (s[p * p] != want) bad.push_back({"prime-square", p, p, want, s[p * p]});
    }
    return bad;
}

ParityReport ap_parity(const SeriesCoeffs& s) {
    ParityReport r;
    for (int p = 3; p <= s.n_max(); ++p) {
        if (p == 5 || !is_small_prime(p)) continue;
        r.checked.push_back(p);
        if (s[p] % 2 != 0) r.odd.push_back(p);
    }
    return r;
}

std::vector<int> ramanujan_violations(const SeriesCoeffs& s) {
    std::vector<int> bad;
    for (int p = 2; p <= s.n_max(); ++p) {
        if (!is_small_prime(p)) continue;
        __extension__ const __int128 ap = s[p];
        __extension__ const __int128 q = p;
        if (ap * ap > 4 * q * q * q) bad.push_back(p);
    }
    return bad;
}

}  // namespace hm
