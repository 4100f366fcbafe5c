#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sdf::modarith {

inline constexpr std::uint64_t kMaxModulus = 0x7fffffffffffffffULL;
/// Above this bound the default strategy switches from trial division to Pollard rho.
inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; a and m must be coprime.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// Reduces a signed value into [0, m).
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::uint64_t p);

/// Smallest positive quadratic non-residue modulo the odd prime p.
std::uint64_t least_nonresidue(std::uint64_t p);

/// Full prime factorization (with multiplicity, ascending).
using FactorStrategy = std::function<std::vector<std::uint64_t>(std::uint64_t)>;

std::vector<std::uint64_t> factor_trial_division(std::uint64_t n);
std::vector<std::uint64_t> factor_pollard_rho(std::uint64_t n);
/// Trial division up to kTrialDivisionLimit, Pollard rho beyond.
std::vector<std::uint64_t> factor_default(std::uint64_t n);

/// An odd squarefree modulus m = p_1 * ... * p_n with p_1 < ... < p_n.
class Modulus {
public:
    /// Validates that `primes` is a strictly increasing list of odd primes.
    static Modulus from_primes(std::vector<std::uint64_t> primes);

    std::uint64_t value() const noexcept { return m_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    std::size_t n() const noexcept { return primes_.size(); }
    std::uint64_t prime(std::size_t j) const { return primes_.at(j); }

    bool all_primes_1_mod_4() const noexcept;
    bool all_primes_3_mod_4() const noexcept;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.m_ == b.m_; }

private:
    Modulus(std::uint64_t m, std::vector<std::uint64_t> primes) : m_(m), primes_(std::move(primes)) {}

    std::uint64_t m_;
    std::vector<std::uint64_t> primes_;
};

Modulus factor_squarefree(std::uint64_t m, const FactorStrategy& strategy = factor_default);

/// Largest odd divisor of m.
std::uint64_t drop_even_part(std::uint64_t m);

struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

struct CrtComponent {
    std::uint64_t residue;
    std::uint64_t prime;
};

/// Unique x modulo prod(prime) with x = residue (mod prime) for every component.
/// The moduli only need to be pairwise coprime.
Residue crt_combine(std::span<const CrtComponent> components);

/// Jacobi symbol (a|m) computed as the product of Legendre symbols over m's primes.
int jacobi(std::int64_t a, const Modulus& m);

} // namespace sdf::modarith
