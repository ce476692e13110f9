#ifndef HM_FP_ARITH_HPP
#define HM_FP_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hm {

/// An element of F_p stored as its least nonnegative representative.
using Residue = std::uint32_t;

/// Raised for a modulus that is not an odd prime in the supported range.
class InvalidPrime : public std::invalid_argument {
public:
    explicit InvalidPrime(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation needs a root (i, epsilon, ...) that F_p lacks,
/// or a precondition on the residue class of p fails.
class Unavailable : public std::runtime_error {
public:
    explicit Unavailable(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// Validated prime 7 <= p < 2^20 together with the roots of unity and square
/// roots the rest of the toolkit asks about. Immutable once built.
class PrimeContext {
public:
    static constexpr std::uint64_t kPrimeBound = std::uint64_t{1} << 20;

    /// Throws InvalidPrime for composite p, p < 7, or p >= 2^20.
    explicit PrimeContext(std::int64_t p);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue base, std::uint64_t e) const noexcept;
    /// Throws std::domain_error on zero.
    Residue inv(Residue a) const;

    const std::optional<Residue>& i_root() const noexcept { return i_root_; }
    const std::optional<Residue>& eps_root() const noexcept { return eps_root_; }
    const std::optional<Residue>& sqrt5() const noexcept { return sqrt5_; }
    bool has_i() const noexcept { return i_root_.has_value(); }
    bool has_eps() const noexcept { return eps_root_.has_value(); }
    bool has_sqrt5() const noexcept { return sqrt5_.has_value(); }

    /// The root itself, or Unavailable.
    Residue i() const;
    Residue eps() const;

    unsigned p_mod_4() const noexcept { return p_ % 4; }
    unsigned p_mod_5() const noexcept { return p_ % 5; }
    unsigned p_mod_20() const noexcept { return p_ % 20; }
    unsigned p_mod_40() const noexcept { return p_ % 40; }

private:
    std::uint32_t p_;
    std::optional<Residue> i_root_;
    std::optional<Residue> eps_root_;
    std::optional<Residue> sqrt5_;
};

inline PrimeContext make_context(std::int64_t p) { return PrimeContext(p); }

/// Legendre symbol (a/p) by Euler's criterion. p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Smaller of the two square roots of a, or nullopt for a non-residue.
std::optional<Residue> sqrt_mod(Residue a, const PrimeContext& ctx);

/// Dense row-major matrix over F_p, at most 16 x 16.
class FpMatrix {
public:
    static constexpr std::size_t kMaxDim = 16;

    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);
    /// Entries are reduced on the way in.
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
             std::span<const std::int64_t> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    static FpMatrix identity(std::size_t n, std::uint32_t modulus);
    /// [a | b], same row count.
    static FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b);

    /// M v for a column vector of length cols().
    std::vector<Residue> apply(std::span<const Residue> v) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<Residue> data_;
};

/// Rank by Gaussian elimination with modular inverses.
std::size_t matrix_rank(const FpMatrix& m);

/// Determinant of a square matrix.
Residue determinant(const FpMatrix& m);

/// Basis of the right kernel { v : M v = 0 }.
std::vector<std::vector<Residue>> null_space(const FpMatrix& m);

}  // namespace hm

#endif  // HM_FP_ARITH_HPP
