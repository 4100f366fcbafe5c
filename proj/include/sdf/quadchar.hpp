#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdf/modarith.hpp"

namespace sdf::quadchar {

/// The product character chi_D = prod_{j in D} chi_{p_j} over a subset D of the primes of m.
/// Indices in D are zero-based positions into Modulus::primes().
class CharProduct {
public:
    CharProduct(modarith::Modulus modulus, std::vector<std::size_t> indices);

    /// Convenience for the full product over every prime of m.
    static CharProduct full(const modarith::Modulus& modulus);

    const modarith::Modulus& modulus() const noexcept { return modulus_; }
    std::span<const std::size_t> indices() const noexcept { return indices_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    std::uint64_t p_D() const noexcept { return p_D_; }
    std::size_t d() const noexcept { return indices_.size(); }

    /// chi_D(x), using per-prime lookup tables for small primes.
    int operator()(std::int64_t x) const;
    /// Legendre symbol modulo the k-th prime of D.
    int chi(std::size_t k, std::int64_t x) const;

private:
    modarith::Modulus modulus_;
    std::vector<std::size_t> indices_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t p_D_ = 1;
    std::vector<std::vector<std::int8_t>> tables_;
};

int chi_D(std::uint64_t x, const CharProduct& cp);

bool is_special_pair(std::uint64_t b1, std::uint64_t b2, std::uint64_t p);

/// sum_{a mod p} chi(a - b1) chi(a - b2), evaluated term by term.
std::int64_t inner_pair_sum(std::uint64_t b1, std::uint64_t b2, std::uint64_t p);

/// sum_{a mod p_D} prod_{j in D} chi_j(a - b1) chi_j(a - b2), evaluated term by term over Z_{p_D}.
std::int64_t full_residue_pair_sum(std::uint64_t b1, std::uint64_t b2, const CharProduct& cp);

/// prod_{j in D} inner_pair_sum(b1, b2, p_j): the factored form of full_residue_pair_sum.
std::int64_t factored_pair_sum(std::uint64_t b1, std::uint64_t b2, const CharProduct& cp);

/// S_D = sum_{a in A} |sum_{b in A} chi_D(a - b)|^2, exact.
std::int64_t s_D(std::span<const std::uint64_t> set, const CharProduct& cp);

} // namespace sdf::quadchar
