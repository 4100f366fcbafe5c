#include "sdf/construct.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <unordered_map>

#include "sdf/error.hpp"

namespace sdf::construct {

using modarith::Modulus;

CandidateSet product_construct(std::span<const CandidateSet> parts) {
    if (parts.empty()) throw Error(ErrorKind::DomainError, "product of zero parts");
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto report = core::is_valid_set(parts[i]);
        if (!report.valid) {
            throw Error(ErrorKind::InvalidPart, "part " + std::to_string(i) + " (mod " +
                                                    std::to_string(parts[i].modulus().value()) +
                                                    ") is not square-difference-free");
        }
        for (std::uint64_t p : parts[i].modulus().primes()) {
            if (std::find(primes.begin(), primes.end(), p) != primes.end()) {
                throw Error(ErrorKind::NonCoprime, "moduli share the prime " + std::to_string(p));
            }
            primes.push_back(p);
        }
    }
    std::sort(primes.begin(), primes.end());
    Modulus product = Modulus::from_primes(std::move(primes));

    std::vector<std::uint64_t> elements;
    std::vector<std::size_t> index(parts.size(), 0);
    std::vector<modarith::CrtComponent> components(parts.size());
    if (std::any_of(parts.begin(), parts.end(), [](const CandidateSet& s) { return s.empty(); })) {
        return CandidateSet(product, {}, core::Validity::Valid);
    }
    while (true) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            components[i] = {parts[i].elements()[index[i]], parts[i].modulus().value()};
        }
        elements.push_back(modarith::crt_combine(components).value);
        // odometer increment
        std::size_t i = 0;
        while (i < parts.size() && ++index[i] == parts[i].size()) index[i++] = 0;
        if (i == parts.size()) break;
    }
    CandidateSet out(product, std::move(elements));
    return core::checked(out);
}

CandidateSet scale_by_nonresidue(const CandidateSet& set, std::uint64_t p) {
    if (!modarith::is_prime(p) || p == 2) throw Error(ErrorKind::DomainError, std::to_string(p) + " is not an odd prime");
    return set.scaled(modarith::least_nonresidue(p));
}

std::size_t ramsey_guarantee(std::uint64_t p) {
    const std::size_t log2p = static_cast<std::size_t>(std::bit_width(p)) - 1;
    return std::max<std::size_t>(1, log2p / 2);
}

CandidateSet ramsey_construct(std::uint64_t p) {
    if (!modarith::is_prime(p) || p == 2) throw Error(ErrorKind::DomainError, std::to_string(p) + " is not an odd prime");
    if (p % 4 != 1) throw Error(ErrorKind::WrongResidueClass, std::to_string(p) + " is not 1 mod 4");
    const Modulus modulus = Modulus::from_primes({p});

    std::vector<std::uint64_t> remaining(p);
    for (std::uint64_t x = 0; x < p; ++x) remaining[x] = x;
    std::vector<std::uint64_t> square_pivots, nonsquare_pivots;
    std::optional<std::uint64_t> last_pivot;
    while (!remaining.empty()) {
        const std::uint64_t pivot = remaining.front();
        std::vector<std::uint64_t> squares, nonsquares;
        for (std::size_t i = 1; i < remaining.size(); ++i) {
            const std::int64_t diff = static_cast<std::int64_t>(remaining[i]) - static_cast<std::int64_t>(pivot);
            (modarith::legendre(diff, p) == 1 ? squares : nonsquares).push_back(remaining[i]);
        }
        if (squares.empty() && nonsquares.empty()) {
            last_pivot = pivot;
            break;
        }
        if (squares.size() > nonsquares.size()) {
            square_pivots.push_back(pivot);
            remaining = std::move(squares);
        } else {
            nonsquare_pivots.push_back(pivot);
            remaining = std::move(nonsquares);
        }
    }

    const bool use_squares = square_pivots.size() > nonsquare_pivots.size();
    std::vector<std::uint64_t> clique = use_squares ? square_pivots : nonsquare_pivots;
    if (last_pivot) clique.push_back(*last_pivot);
    CandidateSet result(modulus, std::move(clique));
    if (use_squares) result = scale_by_nonresidue(result, p);
    return core::checked(result);
}

bool check_certificate(const CollisionCertificate& c) {
    const std::uint64_t p = c.p;
    const auto phi = [&](std::uint64_t a, std::uint64_t b) { return (a + modarith::mulmod(c.xi, b, p)) % p; };
    if (c.a1 == c.a2 && c.b1 == c.b2) return false;
    if (phi(c.a1, c.b1) != c.value || phi(c.a2, c.b2) != c.value) return false;
    const std::uint64_t diff_a = (c.a1 + p - c.a2) % p;
    const std::uint64_t diff_b = (c.b1 + p - c.b2) % p;
    if (diff_a != c.diff_a || diff_b != c.diff_b || diff_a == 0 || diff_b == 0) return false;
    // xi = (a1 - a2)(b2 - b1)^{-1}
    if (modarith::mulmod(diff_a, modarith::invmod(p - diff_b, p), p) != c.xi) return false;
    const int chi_a = modarith::legendre(static_cast<std::int64_t>(diff_a), p);
    const int chi_b = modarith::legendre(static_cast<std::int64_t>(diff_b), p);
    return chi_a == c.chi_a && chi_b == c.chi_b && chi_a * chi_b == -1;
}

CollisionCertificate pigeonhole_witness(const CandidateSet& set, std::uint64_t xi) {
    const Modulus& modulus = set.modulus();
    if (modulus.n() != 1) throw Error(ErrorKind::DomainError, "pigeonhole witness needs a prime modulus");
    const std::uint64_t p = modulus.value();
    if (p % 4 != 1) throw Error(ErrorKind::WrongResidueClass, std::to_string(p) + " is not 1 mod 4");
    if (modarith::legendre(static_cast<std::int64_t>(xi % p), p) != -1) {
        throw Error(ErrorKind::DomainError, std::to_string(xi) + " is not a non-residue mod " + std::to_string(p));
    }
    const std::uint64_t size = set.size();
    if (size * size <= p) {
        throw Error(ErrorKind::NoCollision,
                    "|A|^2 = " + std::to_string(size * size) + " <= p = " + std::to_string(p) + "; no collision forced");
    }
    xi %= p;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t a : set.elements()) {
        for (std::uint64_t b : set.elements()) {
            const std::uint64_t value = (a + modarith::mulmod(xi, b, p)) % p;
            auto [it, inserted] = seen.try_emplace(value, a, b);
            if (inserted) continue;
            const auto [a1, b1] = it->second;
            CollisionCertificate cert{p, xi, a1, b1, a, b, value, (a1 + p - a) % p, (b1 + p - b) % p, 0, 0};
            cert.chi_a = modarith::legendre(static_cast<std::int64_t>(cert.diff_a), p);
            cert.chi_b = modarith::legendre(static_cast<std::int64_t>(cert.diff_b), p);
            if (!check_certificate(cert)) throw std::logic_error("pigeonhole certificate failed its own check");
            return cert;
        }
    }
    throw Error(ErrorKind::NoCollision, "no collision found");
}

} // namespace sdf::construct
