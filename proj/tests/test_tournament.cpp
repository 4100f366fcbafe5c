#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdf/search.hpp"
#include "sdf/tournament.hpp"
#include "test_util.hpp"

using namespace sdf;
using namespace sdf::tournament;
using modarith::factor_squarefree;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

/// 0 -> 1 -> 2 -> 0
Digraph three_cycle() {
    const Edges e{{0, 1}, {1, 2}, {2, 0}};
    return Digraph(3, e);
}

ProductGraph two_cycles() { return ProductGraph({three_cycle(), three_cycle()}); }

std::vector<std::size_t> encode_all(const ProductGraph& g, const std::vector<Tuple>& ts) {
    std::vector<std::size_t> out;
    for (const auto& t : ts) out.push_back(g.encode(t));
    return out;
}

/// Largest covering family by literal subset scan, independent of the library.
std::size_t max_family_oracle(const ProductGraph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            if (!(mask >> u & 1)) continue;
            for (std::size_t v = 0; v < n && ok; ++v) {
                if (u == v || !(mask >> v & 1)) continue;
                const Tuple a = g.decode(u), b = g.decode(v);
                bool covered = false;
                for (std::size_t i = 0; i < a.size(); ++i) covered = covered || g.factors()[i].has_edge(a[i], b[i]);
                ok = covered;
            }
        }
        if (ok) best = size;
    }
    return best;
}

} // namespace

TEST_CASE("Digraph validation") {
    const Edges loop{{1, 1}};
    CHECK(error_kind([&] { Digraph(3, loop); }) == ErrorKind::DomainError);
    const Edges out_of_range{{0, 3}};
    CHECK(error_kind([&] { Digraph(3, out_of_range); }) == ErrorKind::DomainError);
    const Edges e{{0, 1}, {0, 2}, {0, 1}};
    const Digraph g(3, e);
    CHECK(g.max_outdegree() == 2);
    CHECK(g.edges().size() == 2);
    CHECK_FALSE(g.is_tournament());
    CHECK(three_cycle().is_tournament());
}

TEST_CASE("paley_tournament examples") {
    const auto p3 = paley_tournament(3);
    CHECK(p3.edges() == Edges{{0, 2}, {1, 0}, {2, 1}});
    const auto p7 = paley_tournament(7);
    CHECK(p7.is_tournament());
    CHECK(p7.max_outdegree() == 3);
    for (std::size_t v = 0; v < 7; ++v) CHECK(p7.out_neighbors(v).size() == 3);
    CHECK(error_kind([] { paley_tournament(5); }) == ErrorKind::WrongResidueClass);
    CHECK(error_kind([] { paley_tournament(15); }) == ErrorKind::DomainError);
}

TEST_CASE("paley tournaments are tournaments for p = 3 mod 4 up to 100") {
    for (std::uint64_t p = 3; p <= 100; p += 4) {
        if (!oracle::is_prime(p)) continue;
        const auto g = paley_tournament(p);
        CHECK(g.is_tournament());
        CHECK(g.max_outdegree() == (p - 1) / 2);
        const auto sq = oracle::squares_mod(p);
        for (std::size_t x = 0; x < p; ++x) {
            for (std::size_t y = 0; y < p; ++y) REQUIRE(g.has_edge(x, y) == (x != y && sq[(x + p - y) % p]));
        }
    }
}

TEST_CASE("product graph edge rule") {
    const auto g = two_cycles();
    CHECK(g.order() == 9);
    CHECK(g.decode(g.encode({2, 1})) == Tuple{2, 1});
    CHECK(g.encode({1, 2}) == 5);
    CHECK(g.has_edge(g.encode({0, 0}), g.encode({1, 0})));
    CHECK_FALSE(g.has_edge(g.encode({1, 0}), g.encode({0, 0})));
    CHECK_FALSE(g.has_edge(g.encode({0, 0}), g.encode({0, 0})));
    // factors 0 -> 1 and 2 -> 0: ((0,0),(1,2)) needs (0,1) in E_1 and (0,2) in E_2
    const Edges e1{{0, 1}}, e2{{2, 0}};
    const ProductGraph h({Digraph(3, e1), Digraph(3, e2)});
    CHECK_FALSE(h.has_edge(h.encode({0, 0}), h.encode({1, 2})));
    CHECK(h.has_edge(h.encode({0, 2}), h.encode({1, 0})));
    // single factor: same edge set
    const ProductGraph single({three_cycle()});
    for (std::size_t u = 0; u < 3; ++u) {
        for (std::size_t v = 0; v < 3; ++v) CHECK(single.has_edge(u, v) == three_cycle().has_edge(u, v));
    }
    CHECK(g.lemma_bound() == 4);
}

TEST_CASE("is_covering_family examples") {
    const auto g = two_cycles();
    CHECK(is_covering_family(encode_all(g, {{0, 0}, {1, 2}, {2, 1}}), g).covering);
    const auto bad = is_covering_family(encode_all(g, {{0, 0}, {1, 1}}), g);
    CHECK_FALSE(bad.covering);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->first == Tuple{1, 1});
    CHECK(bad.violation->second == Tuple{0, 0});
    CHECK(is_covering_family(encode_all(g, {{2, 2}}), g).covering);
}

TEST_CASE("alon_polynomials_rank examples") {
    const auto g = two_cycles();
    const auto s = encode_all(g, {{0, 0}, {1, 2}, {2, 1}});
    const auto a = alon_polynomials_rank(s, g);
    CHECK(a.rank == 3);
    CHECK(a.diagonal_nonzero);
    CHECK(a.off_diagonal_zero);
    CHECK(oracle::rank_over_q(a.matrix) == 3);

    const std::vector<std::size_t> single{g.encode({2, 0})};
    const auto one = alon_polynomials_rank(single, g);
    CHECK(one.rank == 1);
    // P_v(v) = (2 - 0) * (0 - 1)
    CHECK(one.matrix[0][0] == -2);

    CHECK(error_kind([&] { alon_polynomials_rank(encode_all(g, {{0, 0}, {1, 1}}), g); }) == ErrorKind::NotCovering);
}

TEST_CASE("bareiss rank agrees with rational elimination") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        linalg::IntegerMatrix m(rows, std::vector<mpz_class>(cols));
        const std::size_t planted_rank = 1 + rng() % std::min(rows, cols);
        // product of random rows x planted_rank and planted_rank x cols
        std::vector<std::vector<long>> left(rows, std::vector<long>(planted_rank));
        std::vector<std::vector<long>> right(planted_rank, std::vector<long>(cols));
        for (auto& r : left) for (auto& x : r) x = static_cast<long>(rng() % 7) - 3;
        for (auto& r : right) for (auto& x : r) x = static_cast<long>(rng() % 7) - 3;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                for (std::size_t k = 0; k < planted_rank; ++k) m[i][j] += left[i][k] * right[k][j];
            }
        }
        REQUIRE(linalg::bareiss_rank(m) == oracle::rank_over_q(m));
    }
    CHECK(linalg::bareiss_rank({}) == 0);
}

TEST_CASE("verify_lemma examples") {
    const auto r = verify_lemma(two_cycles());
    CHECK(r.exhaustive);
    CHECK(r.complete);
    CHECK(r.family.size() >= 3);
    CHECK(r.bound == 4);
    CHECK(r.within_bound);
    CHECK(r.rank_equals_size);
    CHECK(r.family.size() == max_family_oracle(two_cycles()));

    const ProductGraph one({paley_tournament(7)});
    const auto r1 = verify_lemma(one);
    CHECK(r1.family.size() == 1);
    CHECK(r1.bound == 4);
}

TEST_CASE("exact family search matches subset scans on small random products") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t k = 1 + seed % 3;
        std::vector<Digraph> factors;
        std::size_t order = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t n = 2 + (seed + i) % 2;
            factors.push_back(random_digraph(n, seed * 31 + i));
            order *= n;
        }
        const ProductGraph g(std::move(factors));
        const auto r = verify_lemma(g);
        CHECK(r.family.size() == max_family_oracle(g));
        CHECK(r.family.size() == max_covering_family_by_subsets(g).size());
        CHECK(r.within_bound);
        CHECK(r.rank_equals_size);
    }
}

TEST_CASE("random_digraph is seeded and loop-free") {
    const auto a = random_digraph(6, 42), b = random_digraph(6, 42);
    CHECK(a.edges() == b.edges());
    for (const auto& [u, v] : a.edges()) CHECK(u != v);
    CHECK(random_digraph(5, 1, 0.0).edges().empty());
    CHECK(random_digraph(5, 1, 1.0).edges().size() == 20);
}

TEST_CASE("local search mode stays covering and within the bound") {
    const auto g = paley_product(factor_squarefree(77));
    const auto r = verify_lemma(g, 10);
    CHECK_FALSE(r.exhaustive);
    CHECK(is_covering_family(r.family, g).covering);
    CHECK(r.within_bound);
    CHECK(r.rank_equals_size);
}

TEST_CASE("sdf_set_to_family") {
    const auto m21 = factor_squarefree(21);
    const auto g21 = paley_product(m21);
    const auto fam = sdf_set_to_family(core::CandidateSet(m21, {0, 2}));
    REQUIRE(fam.size() == 2);
    CHECK(g21.decode(fam[0]) == Tuple{0, 0});
    CHECK(g21.decode(fam[1]) == Tuple{2, 2});
    CHECK(is_covering_family(fam, g21).covering);

    CHECK(sdf_set_to_family(core::CandidateSet(factor_squarefree(3), {0})).size() == 1);

    const auto m33 = factor_squarefree(33);
    const auto w = search::max_sdf_exact(m33).best_set;
    const auto f33 = sdf_set_to_family(w);
    CHECK(f33.size() == w.size());
    CHECK(is_covering_family(f33, paley_product(m33)).covering);

    CHECK(error_kind([] { sdf_set_to_family(core::CandidateSet(factor_squarefree(15), {0})); }) ==
          ErrorKind::WrongResidueClass);
    CHECK(error_kind([&] { sdf_set_to_family(core::CandidateSet(m21, {0, 1})); }) == ErrorKind::InvalidSet);
}

TEST_CASE("bridge: F(m) <= prod (p+1)/2 and Paley-product families for m in {21,33,57,69,77}") {
    for (std::uint64_t m : {21ULL, 33ULL, 57ULL, 69ULL, 77ULL}) {
        const auto mod = factor_squarefree(m);
        const auto g = paley_product(mod);
        const auto r = verify_lemma(g);
        CHECK(r.complete);
        CHECK(r.within_bound);
        CHECK(r.rank_equals_size);
        const auto f = search::max_sdf_exact(mod);
        CHECK(f.size <= r.family.size());
        CHECK(sdf_set_to_family(f.best_set).size() == f.size);
        CHECK(mpz_class(static_cast<unsigned long>(r.family.size())) <= r.bound);
    }
}
