#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sdf/bareiss.hpp"
#include "sdf/clique.hpp"
#include "sdf/sdf_core.hpp"

namespace sdf::tournament {

/// Loop-free digraph on vertices 0..order-1, each carrying an integer label
/// (the point at which the Alon polynomials are evaluated).
class Digraph {
public:
    Digraph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges);
    Digraph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges,
            std::vector<std::int64_t> labels);

    std::size_t order() const noexcept { return out_.size(); }
    std::span<const std::int64_t> labels() const noexcept { return labels_; }
    bool has_edge(std::size_t u, std::size_t v) const { return adjacency_[u * order() + v]; }
    std::span<const std::size_t> out_neighbors(std::size_t v) const { return out_[v]; }
    std::size_t max_outdegree() const noexcept { return max_outdegree_; }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Exactly one of (x, y), (y, x) for every x != y.
    bool is_tournament() const;

private:
    std::vector<std::int64_t> labels_;
    std::vector<bool> adjacency_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t max_outdegree_ = 0;
};

/// (x, y) is an arc iff x - y is a non-zero square mod p; needs p = 3 mod 4.
Digraph paley_tournament(std::uint64_t p);

/// Each ordered pair of distinct vertices is an arc with probability `density`.
Digraph random_digraph(std::size_t order, std::uint64_t seed, double density = 0.5);

using Tuple = std::vector<std::size_t>;

/// Product of digraphs: u -> v iff u != v and, in every coordinate, u_i = v_i or u_i -> v_i.
class ProductGraph {
public:
    explicit ProductGraph(std::vector<Digraph> factors);

    std::span<const Digraph> factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return order_; }

    /// Mixed-radix index with the first coordinate most significant, so index order is tuple order.
    std::size_t encode(const Tuple& t) const;
    Tuple decode(std::size_t index) const;

    bool has_edge(std::size_t u, std::size_t v) const;
    /// Some coordinate i has (u_i, v_i) in E_i.
    bool covers(std::size_t u, std::size_t v) const;

    /// prod (d_i + 1).
    mpz_class lemma_bound() const;

private:
    std::vector<Digraph> factors_;
    std::size_t order_ = 1;
};

/// Product of the Paley tournaments of the primes of m; every prime must be 3 mod 4.
ProductGraph paley_product(const modarith::Modulus& m);

struct CoverageReport {
    bool covering;
    std::optional<std::pair<Tuple, Tuple>> violation;  // ordered pair covered in no coordinate
};

CoverageReport is_covering_family(std::span<const std::size_t> family, const ProductGraph& graph);

struct AlonMatrix {
    linalg::IntegerMatrix matrix;  // matrix[r][c] = P_{S[r]}(S[c])
    std::size_t rank;
    bool diagonal_nonzero;
    bool off_diagonal_zero;
};

/// Evaluates P_v(x) = prod_i prod_{j in N(v_i)} (x_i - label(j)) at every member of the
/// covering family and ranks the matrix exactly. Throws NotCovering.
AlonMatrix alon_polynomials_rank(std::span<const std::size_t> family, const ProductGraph& graph);

/// Maximum covering family by literal enumeration of all vertex subsets (order <= 20).
std::vector<std::size_t> max_covering_family_by_subsets(const ProductGraph& graph);

struct LemmaReport {
    std::vector<std::size_t> family;  // largest covering family found, ascending indices
    mpz_class bound;                  // prod (d_i + 1)
    bool exhaustive;                  // exact maximum search rather than randomized
    bool complete;                    // exhaustive search finished within budget
    bool within_bound;
    std::size_t rank;
    bool rank_equals_size;
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 4096;

/// Finds a largest covering family (exact clique search on the mutual-coverage graph
/// when order <= exhaustive_limit, seeded local search otherwise) and checks it
/// against prod (d_i + 1) and the Alon matrix rank.
LemmaReport verify_lemma(const ProductGraph& graph, std::size_t exhaustive_limit = kDefaultExhaustiveLimit,
                         std::uint64_t seed = 1, const Budget& budget = {});

/// CRT coordinates of a valid set as a covering family in paley_product(m).
std::vector<std::size_t> sdf_set_to_family(const core::CandidateSet& set);

} // namespace sdf::tournament
