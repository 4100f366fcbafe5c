#pragma once

// Upper bounds on F(m) = max |A| over square-difference-free A in Z_m, and the
// inequalities used to prove the main bound, evaluated exactly where the value
// is an integer times a square root and with outward-rounded MPFR intervals
// everywhere else. A check "passes" only when the interval for the left side
// lies entirely below the interval for the right side.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sdf/interval.hpp"
#include "sdf/modarith.hpp"

namespace sdf::bounds {

using modarith::Modulus;

/// Default for the unspecified constant in the combined bound.
inline constexpr double kDefaultC = 0.2;
/// Largest prime count for which subset sums are enumerated.
inline constexpr std::size_t kMaxSubsetPrimes = 14;

/// coefficient * sqrt(radicand), radicand squarefree.
struct Surd {
    mpz_class coefficient;
    mpz_class radicand;

    /// Normalizes coefficient * sqrt(prod radicand_primes) (primes may repeat).
    static Surd make(mpz_class coefficient, std::vector<std::uint64_t> radicand_primes);

    Interval enclose() const;
    std::string to_string() const;

    /// Exact comparison against a non-negative integer: sign of (value - x).
    int compare(const mpz_class& x) const;
};

/// G_d = (3n)^{1.5 (n - d)}, 1 <= d <= n.
Surd g_d(std::size_t n, std::size_t d);

/// sqrt(m) * (3n)^{1.5 n}.
Surd theorem_bound(const Modulus& m);

/// sqrt(m) (strict) when every prime of m is 1 mod 4.
std::optional<Surd> matolcsi_ruzsa_bound(const Modulus& m);

/// prod (p_i + 1) / 2 when every prime of m is 3 mod 4.
std::optional<mpz_class> alon_tournament_bound(const Modulus& m);

struct CombinedBound {
    double c;
    Interval value;               // m * min(2^{-c n}, m^{-1/2} (3n)^{1.5 n})
    Interval tournament_branch;   // m * 2^{-c n}
    Interval theorem_branch;      // sqrt(m) (3n)^{1.5 n}
    /// Whether prod (p+1)/2 <= m 2^{-c n} holds for this m, which makes the tournament branch a valid bound.
    bool tournament_branch_certified;
    std::uint64_t m_prime;        // product of the primes of m that are 3 mod 4
    bool reduction_applies;       // m' < sqrt(m)
    Interval reduction_value;     // m' (m / m')^{1/2}
    Interval three_quarter_power; // m^{3/4}
};

CombinedBound combined_bound(const Modulus& m, double c = kDefaultC);

struct BoundEntry {
    std::string name;
    bool applicable;
    bool strict;
    Interval value;
    std::string exact;            // symbolic form, empty if none
    std::string source;
    std::optional<Surd> surd;     // exact value when it is an integer times a root
};

struct BoundReport {
    std::uint64_t m;
    std::size_t n;
    std::vector<BoundEntry> entries;
    std::string min_name;
    Interval min_applicable;

    const BoundEntry* find(const std::string& name) const;
    /// True iff size satisfies every applicable bound (exactly where possible).
    bool cages(std::uint64_t size) const;
};

BoundReport bound_report(const Modulus& m, double c = kDefaultC);

struct InequalityCheck {
    std::string name;
    Interval lhs;
    Interval rhs;
    bool strict;
    bool applicable;
    bool pass;
};

struct ProofReport {
    std::vector<std::uint64_t> primes;
    std::size_t n;
    Interval t1;
    Interval t2;
    std::vector<InequalityCheck> checks;
    bool all_pass;

    const InequalityCheck* find(const std::string& name) const;
};

/// Evaluates sum p^{-1/4}, T_1 and T_2 by direct subset summation and checks them,
/// together with the constant chains behind 1.13, 0.65, 0.16 and 0.27.
ProofReport proof_inequality_report(std::span<const std::uint64_t> primes);

struct ContradictionRecord {
    std::uint64_t m;
    std::size_t n;
    mpz_class assumed_size;
    Interval sigma;         // 1 - 1/|A|
    Interval lhs;           // L
    Interval rhs;           // R
    Interval middle;        // (0.99 - 0.65) m^{1/2} (3n)^{1.5 n}
    bool sigma_at_least_099;
    bool lhs_above_middle;
    bool middle_above_rhs;
    bool contradiction;     // L > R
};

/// Closing step of the induction: for |A| above the theorem bound, L > R.
ContradictionRecord check_final_contradiction(const Modulus& m, const mpz_class& assumed_size);

} // namespace sdf::bounds
