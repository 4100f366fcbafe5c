#include <cmath>
#include <map>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sdf/construct.hpp"
#include "sdf/search.hpp"
#include "test_util.hpp"

using namespace sdf;
using namespace sdf::construct;
using core::CandidateSet;
using modarith::factor_squarefree;

namespace {

std::vector<std::uint64_t> elems(const CandidateSet& s) { return {s.elements().begin(), s.elements().end()}; }

CandidateSet set_of(std::uint64_t m, std::vector<std::uint64_t> xs) { return CandidateSet(factor_squarefree(m), std::move(xs)); }

} // namespace

TEST_CASE("product_construct examples") {
    const std::vector<CandidateSet> a{set_of(5, {0, 2}), set_of(13, {0, 2, 7})};
    const auto p = product_construct(a);
    CHECK(p.modulus().value() == 65);
    CHECK(p.size() == 6);
    CHECK(oracle::valid_set(elems(p), 65));
    for (std::uint64_t x : p.elements()) {
        CHECK((x % 5 == 0 || x % 5 == 2));
        CHECK((x % 13 == 0 || x % 13 == 2 || x % 13 == 7));
    }

    const std::vector<CandidateSet> b{set_of(3, {0}), set_of(5, {0, 2})};
    const auto q = product_construct(b);
    CHECK(q.modulus().value() == 15);
    CHECK(q.size() == 2);
    CHECK(q.size() == search::max_sdf_exact(factor_squarefree(15)).size);

    const std::vector<CandidateSet> single{set_of(13, {0, 2, 7})};
    CHECK(product_construct(single) == single.front());
}

TEST_CASE("product_construct errors") {
    const std::vector<CandidateSet> invalid{set_of(5, {0, 1}), set_of(3, {0})};
    CHECK(error_kind([&] { product_construct(invalid); }) == ErrorKind::InvalidPart);
    const std::vector<CandidateSet> shared{set_of(15, {0}), set_of(5, {0})};
    CHECK(error_kind([&] { product_construct(shared); }) == ErrorKind::NonCoprime);
}

TEST_CASE("product of exact witnesses is valid for all coprime pairs <= 50") {
    const auto moduli = oracle::odd_squarefree_upto(50);
    for (std::uint64_t m1 : moduli) {
        for (std::uint64_t m2 : moduli) {
            if (m1 >= m2 || std::gcd(m1, m2) != 1) continue;
            const std::vector<CandidateSet> parts{search::max_sdf_exact(factor_squarefree(m1)).best_set,
                                                  search::max_sdf_exact(factor_squarefree(m2)).best_set};
            const auto p = product_construct(parts);
            REQUIRE(p.size() == parts[0].size() * parts[1].size());
            REQUIRE_MESSAGE(oracle::valid_set(elems(p), m1 * m2), m1 << " x " << m2);
        }
    }
}

TEST_CASE("scale_by_nonresidue") {
    const auto s = scale_by_nonresidue(set_of(5, {0, 1}), 5);
    CHECK(elems(s) == std::vector<std::uint64_t>{0, 2});
    CHECK(core::is_valid_set(s).valid);
    CHECK(elems(scale_by_nonresidue(set_of(5, {0}), 5)) == std::vector<std::uint64_t>{0});
    // scaling twice multiplies by xi^2, a square: validity status unchanged
    for (std::uint64_t p : {13ULL, 17ULL, 29ULL}) {
        const auto base = set_of(p, {0, 1, 3, 9});
        const auto twice = scale_by_nonresidue(scale_by_nonresidue(base, p), p);
        CHECK(core::is_valid_set(twice).valid == core::is_valid_set(base).valid);
    }
    // a square-coloured clique maps to a valid set
    const auto clique13 = set_of(13, {0, 1, 4});  // differences 1, 3, 4: squares mod 13
    CHECK(core::is_valid_set(scale_by_nonresidue(clique13, 13)).valid);
}

TEST_CASE("ramsey_construct examples") {
    CHECK(ramsey_guarantee(13) == 1);
    CHECK(ramsey_guarantee(5) == 1);
    CHECK(ramsey_guarantee(101) == 3);
    const auto r13 = ramsey_construct(13);
    CHECK(r13.size() >= 1);
    CHECK(core::is_valid_set(r13).valid);
    CHECK(ramsey_construct(5).size() >= 1);
    const auto r101 = ramsey_construct(101);
    CHECK(r101.size() >= 3);
    CHECK(oracle::valid_set(elems(r101), 101));
    CHECK(error_kind([] { ramsey_construct(7); }) == ErrorKind::WrongResidueClass);
    CHECK(error_kind([] { ramsey_construct(21); }) == ErrorKind::DomainError);
}

TEST_CASE("ramsey_construct is valid and meets its guarantee for p = 1 mod 4 below 2000") {
    for (std::uint64_t p = 5; p < 2000; p += 4) {
        if (!oracle::is_prime(p)) continue;
        const auto r = ramsey_construct(p);
        REQUIRE_MESSAGE(oracle::valid_set(elems(r), p), "p = " << p);
        REQUIRE(r.size() >= ramsey_guarantee(p));
    }
}

TEST_CASE("pigeonhole_witness examples") {
    // the collision phi(0,1) = phi(2,0) = 2 for xi = 2 mod 5
    CollisionCertificate given{5, 2, 0, 1, 2, 0, 2, 3, 1, -1, 1};
    CHECK(check_certificate(given));
    CHECK(oracle::chi(3, 5) == -1);

    const auto c5 = pigeonhole_witness(set_of(5, {0, 1, 2}), 2);
    CHECK(check_certificate(c5));
    CHECK((c5.a1 + 2 * c5.b1) % 5 == (c5.a2 + 2 * c5.b2) % 5);

    const auto c13 = pigeonhole_witness(set_of(13, {1, 4, 6, 11}), 2);
    CHECK(check_certificate(c13));
    // one difference is a non-zero square, so the set is not valid
    const std::uint64_t square = c13.chi_a == 1 ? c13.diff_a : c13.diff_b;
    CHECK(oracle::squares_mod(13)[square]);

    CHECK(error_kind([] { pigeonhole_witness(set_of(5, {0, 1}), 2); }) == ErrorKind::NoCollision);
    CHECK(error_kind([] { pigeonhole_witness(set_of(7, {0, 1, 2}), 3); }) == ErrorKind::WrongResidueClass);
    CHECK(error_kind([] { pigeonhole_witness(set_of(5, {0, 1, 2}), 4); }) == ErrorKind::DomainError);
}

TEST_CASE("certificate identity holds exactly for random sets") {
    for (std::uint64_t p : {13ULL, 17ULL, 29ULL, 37ULL, 41ULL, 101ULL, 1009ULL}) {
        const std::uint64_t xi = modarith::least_nonresidue(p);
        const std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(p))) + 1;
        for (std::uint64_t shift = 0; shift < 5; ++shift) {
            std::vector<std::uint64_t> xs;
            for (std::size_t i = 0; i < k; ++i) xs.push_back((i * i * 7 + shift * 3 + i) % p);
            const CandidateSet s(factor_squarefree(p), xs);
            if (s.size() * s.size() <= p) continue;
            const auto c = pigeonhole_witness(s, xi);
            CHECK(check_certificate(c));
            // xi (b2 - b1) = a1 - a2
            CHECK(modarith::mulmod(xi, (c.b2 + p - c.b1) % p, p) == c.diff_a);
        }
    }
}

TEST_CASE("tampered certificates are rejected") {
    auto c = pigeonhole_witness(set_of(13, {0, 1, 2, 3}), 2);
    REQUIRE(check_certificate(c));
    auto bad = c;
    bad.value = (bad.value + 1) % 13;
    CHECK_FALSE(check_certificate(bad));
    bad = c;
    bad.chi_a = -bad.chi_a;
    CHECK_FALSE(check_certificate(bad));
    bad = c;
    bad.a2 = bad.a1;
    bad.b2 = bad.b1;
    CHECK_FALSE(check_certificate(bad));
}

TEST_CASE("supermultiplicativity F(m1 m2) >= F(m1) F(m2) for m1 m2 <= 300") {
    const auto moduli = oracle::odd_squarefree_upto(300);
    std::map<std::uint64_t, std::size_t> f;
    for (std::uint64_t m : moduli) f[m] = search::max_sdf_exact(factor_squarefree(m)).size;
    for (std::uint64_t m1 : moduli) {
        for (std::uint64_t m2 : moduli) {
            if (m1 >= m2 || m1 * m2 > 300 || std::gcd(m1, m2) != 1) continue;
            CHECK_MESSAGE(f[m1 * m2] >= f[m1] * f[m2], m1 << " x " << m2);
        }
    }
}
