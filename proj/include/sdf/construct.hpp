#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdf/sdf_core.hpp"

namespace sdf::construct {

using core::CandidateSet;

/// CRT image of A_1 x ... x A_k in Z_{m_1 ... m_k}. Throws InvalidPart or NonCoprime.
CandidateSet product_construct(std::span<const CandidateSet> parts);

/// Multiply every element by the least quadratic non-residue modulo p.
CandidateSet scale_by_nonresidue(const CandidateSet& set, std::uint64_t p);

/// Monochromatic clique of the two-colouring of K_p by the quadratic character of
/// differences, found with the pivot (Erdos-Szekeres) argument. A square-coloured
/// clique is rescaled by a non-residue, so the result is always square-difference-free.
/// Guaranteed size: max(1, floor(log2(p) / 2)). Requires p = 1 (mod 4).
CandidateSet ramsey_construct(std::uint64_t p);

/// The size ramsey_construct is guaranteed to reach.
std::size_t ramsey_guarantee(std::uint64_t p);

struct CollisionCertificate {
    std::uint64_t p;
    std::uint64_t xi;
    std::uint64_t a1, b1, a2, b2;
    std::uint64_t value;   // a1 + xi b1 = a2 + xi b2 (mod p)
    std::uint64_t diff_a;  // a1 - a2 (mod p)
    std::uint64_t diff_b;  // b1 - b2 (mod p)
    int chi_a;             // quadratic character of diff_a
    int chi_b;             // quadratic character of diff_b
};

/// Independent re-check: the collision identity, xi = (a1 - a2)(b2 - b1)^{-1}, and
/// that the two differences have opposite characters.
bool check_certificate(const CollisionCertificate& cert);

/// Pigeonhole collision of phi(a, b) = a + xi b on A^2 for |A|^2 > p.
/// One of the two differences in the certificate is then a non-zero square.
CollisionCertificate pigeonhole_witness(const CandidateSet& set, std::uint64_t xi);

} // namespace sdf::construct
