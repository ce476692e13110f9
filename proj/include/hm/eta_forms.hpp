#ifndef HM_ETA_FORMS_HPP
#define HM_ETA_FORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hm {

/// q-expansion coefficients a_1..a_{n_max} of f = (eta(q) eta(q^5))^4,
/// the weight-4 newform of level 5.
class SeriesCoeffs {
public:
    SeriesCoeffs(int n_max, std::vector<std::int64_t> a);

    int n_max() const noexcept { return n_max_; }
    /// a_n for 1 <= n <= n_max; throws std::out_of_range otherwise.
    std::int64_t operator[](int n) const;
    const std::vector<std::int64_t>& raw() const noexcept { return a_; }

private:
    int n_max_;
    std::vector<std::int64_t> a_;  // a_[n], a_[0] = 0
};

inline constexpr int kMaxSeriesLength = 100000;

/// Throws std::invalid_argument unless 1 <= n_max <= 10^5.
SeriesCoeffs expand_f(int n_max);

/// prod_{k>=1} (1 - q^{step k})^4 truncated to `len` coefficients, one
/// factor at a time through 1 - 4t + 6t^2 - 4t^3 + t^4.
///
/// Arithmetic is modulo 2^64: partial products overflow, the truncated
/// final series does not, and reduction mod 2^64 commutes with the ring
/// operations, so the signed reinterpretation is exact.
std::vector<std::int64_t> euler_power4(std::size_t len, std::size_t step = 1);

/// Same series by squaring prod (1 - q^{step k})^2 with a dense convolution.
std::vector<std::int64_t> euler_power4_by_squaring(std::size_t len, std::size_t step = 1);

struct HeckeViolation {
    std::string relation;  // "mult" or "prime-square"
    int m = 0;
    int n = 0;
    std::int64_t expected = 0;
    std::int64_t actual = 0;
};

/// Checks a_{mn} = a_m a_n for coprime m, n and a_{p^2} = a_p^2 - p^3
/// (a_{25} = a_5^2 at the level). Needs n_max >= 25.
std::vector<HeckeViolation> hecke_checks(const SeriesCoeffs& s);

struct ParityReport {
    std::vector<int> checked;  // primes p != 2, 5
    std::vector<int> odd;      // those with a_p odd
    bool ok() const { return odd.empty(); }
};

ParityReport ap_parity(const SeriesCoeffs& s);

/// a_p^2 <= 4 p^3 for every prime p <= n_max; returns the offenders.
std::vector<int> ramanujan_violations(const SeriesCoeffs& s);

}  // namespace hm

#endif  // HM_ETA_FORMS_HPP
