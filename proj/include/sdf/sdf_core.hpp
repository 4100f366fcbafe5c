#pragma once

// Square-difference-free sets in Z_m: the square set, the conflict graph,
// candidate sets with validity checking, and residue fibers.
//
// A "square in Z_m" is any non-zero value y^2 mod m, y in Z_m, including
// values that are not coprime to m (6 = 6^2 mod 15). Equivalently, x != 0 is
// a square iff x mod p is 0 or a quadratic residue for every prime p | m.
// SquareConvention::UnitsOnly restricts this to squares of units.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdf/bitset.hpp"
#include "sdf/modarith.hpp"
#include "sdf/quadchar.hpp"

namespace sdf::core {

using modarith::Modulus;

enum class SquareConvention { AllSquares, UnitsOnly };

/// True iff x (mod m) is a non-zero square of Z_m under the convention.
bool is_square(std::uint64_t x, const Modulus& m, SquareConvention convention = SquareConvention::AllSquares);

/// True iff d or -d is a non-zero square: the differences a valid set must avoid.
bool is_forbidden_difference(std::uint64_t d, const Modulus& m,
                             SquareConvention convention = SquareConvention::AllSquares);

struct ForbiddenSet {
    Modulus modulus;
    SquareConvention convention;
    std::vector<std::uint64_t> squares;            // ascending
    std::vector<std::uint64_t> symmetric_closure;  // ascending, closed under negation

    bool is_square(std::uint64_t x) const;
    bool is_forbidden(std::uint64_t d) const;
};

ForbiddenSet forbidden_set(const Modulus& m, SquareConvention convention = SquareConvention::AllSquares);

enum class Validity { Unknown, Valid, Invalid };

/// A subset of Z_m held as sorted distinct residues.
class CandidateSet {
public:
    CandidateSet(Modulus modulus, std::vector<std::uint64_t> elements, Validity validity = Validity::Unknown);

    const Modulus& modulus() const noexcept { return modulus_; }
    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(std::uint64_t x) const;
    Validity validity() const noexcept { return validity_; }

    /// Translate by t (mod m).
    CandidateSet translated(std::uint64_t t) const;
    /// Multiply every element by u (mod m).
    CandidateSet scaled(std::uint64_t u) const;

    friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
        return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
    }

private:
    Modulus modulus_;
    std::vector<std::uint64_t> elements_;
    Validity validity_;
};

struct ValidityReport {
    bool valid;
    /// Ordered pair (a, b) of elements with a - b a non-zero square, when invalid.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
};

ValidityReport is_valid_set(const CandidateSet& set, SquareConvention convention = SquareConvention::AllSquares);

/// Copy of `set` with its validity cache filled in.
CandidateSet checked(const CandidateSet& set, SquareConvention convention = SquareConvention::AllSquares);

struct GraphOptions {
    std::uint64_t vertex_cap = 2'000'000;
    /// Full adjacency rows are stored only up to this many vertices; above it rows are rotated on demand.
    std::uint64_t materialize_cap = 1ULL << 14;
    SquareConvention convention = SquareConvention::AllSquares;
};

/// Circulant conflict graph on Z_m: a ~ b iff (a - b) mod m is a forbidden difference.
class SdfGraph {
public:
    const Modulus& modulus() const noexcept { return modulus_; }
    std::size_t order() const noexcept { return connection_.size(); }
    const Bitset& connection_set() const noexcept { return connection_; }
    bool materialized() const noexcept { return !rows_.empty(); }

    bool adjacent(std::uint64_t a, std::uint64_t b) const;
    /// Neighbourhood of v; a rotation of the connection set.
    Bitset row(std::uint64_t v) const;
    const Bitset& materialized_row(std::uint64_t v) const { return rows_.at(v); }
    std::size_t degree() const noexcept { return connection_.count(); }

private:
    friend SdfGraph build_graph(const Modulus&, const GraphOptions&);
    SdfGraph(Modulus modulus, Bitset connection) : modulus_(std::move(modulus)), connection_(std::move(connection)) {}

    Modulus modulus_;
    Bitset connection_;
    std::vector<Bitset> rows_;
};

SdfGraph build_graph(const Modulus& m, const GraphOptions& options = {});

struct Fiber {
    std::uint64_t residue;                 // x in Z_{p_D}
    std::vector<std::uint64_t> elements;   // members of A congruent to x mod p_D
    std::uint64_t reduced_modulus;         // m / p_D
    std::vector<std::uint64_t> reduced;    // elements mod m / p_D, sorted
    /// The reduced fiber as a subset of Z_{m/p_D}; empty when p_D = m.
    std::optional<CandidateSet> reduced_set;
};

struct Fibers {
    std::uint64_t p_D;
    std::map<std::uint64_t, Fiber> nonempty;

    /// Members of A_x; empty for residues that no element hits.
    std::span<const std::uint64_t> fiber(std::uint64_t x) const;
};

Fibers residue_fibers(const CandidateSet& set, const quadchar::CharProduct& cp);

} // namespace sdf::core
