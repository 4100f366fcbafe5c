#include "sdf/sdf_core.hpp"

#include <algorithm>
#include <string>

#include "sdf/error.hpp"

namespace sdf::core {

bool is_square(std::uint64_t x, const Modulus& m, SquareConvention convention) {
    x %= m.value();
    if (x == 0) return false;
    const int floor = convention == SquareConvention::AllSquares ? 0 : 1;
    for (std::uint64_t p : m.primes()) {
        if (modarith::legendre(static_cast<std::int64_t>(x % p), p) < floor) return false;
    }
    return true;
}

bool is_forbidden_difference(std::uint64_t d, const Modulus& m, SquareConvention convention) {
    d %= m.value();
    return is_square(d, m, convention) || is_square(m.value() - d, m, convention);
}

namespace {

std::vector<std::int8_t> residue_table(std::uint64_t p) {
    std::vector<std::int8_t> table(p, -1);
    table[0] = 0;
    for (std::uint64_t y = 1; y <= p / 2; ++y) table[y * y % p] = 1;
    return table;
}

/// Membership bitmap of the square set, built coordinate-wise from per-prime tables.
std::vector<bool> square_bitmap(const Modulus& m, SquareConvention convention) {
    const int floor = convention == SquareConvention::AllSquares ? 0 : 1;
    std::vector<std::vector<std::int8_t>> tables;
    for (std::uint64_t p : m.primes()) tables.push_back(residue_table(p));
    std::vector<bool> bitmap(m.value(), false);
    std::vector<std::uint64_t> r(m.n(), 0);
    for (std::uint64_t x = 0; x < m.value(); ++x) {
        bool square = x != 0;
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (square && tables[j][r[j]] < floor) square = false;
            if (++r[j] == m.prime(j)) r[j] = 0;
        }
        bitmap[x] = square;
    }
    return bitmap;
}

} // namespace

bool ForbiddenSet::is_square(std::uint64_t x) const {
    return std::binary_search(squares.begin(), squares.end(), x % modulus.value());
}

bool ForbiddenSet::is_forbidden(std::uint64_t d) const {
    return std::binary_search(symmetric_closure.begin(), symmetric_closure.end(), d % modulus.value());
}

ForbiddenSet forbidden_set(const Modulus& m, SquareConvention convention) {
    if (m.value() > GraphOptions{}.vertex_cap) {
        throw Error(ErrorKind::TooLarge, "square set of Z_" + std::to_string(m.value()) + " exceeds the vertex cap");
    }
    const auto bitmap = square_bitmap(m, convention);
    ForbiddenSet fs{m, convention, {}, {}};
    const std::uint64_t mv = m.value();
    for (std::uint64_t x = 1; x < mv; ++x) {
        if (bitmap[x]) fs.squares.push_back(x);
        if (bitmap[x] || bitmap[mv - x]) fs.symmetric_closure.push_back(x);
    }
    return fs;
}

CandidateSet::CandidateSet(Modulus modulus, std::vector<std::uint64_t> elements, Validity validity)
    : modulus_(std::move(modulus)), elements_(std::move(elements)), validity_(validity) {
    for (auto& e : elements_) {
        if (e >= modulus_.value()) {
            throw Error(ErrorKind::DomainError,
                        std::to_string(e) + " is not a residue mod " + std::to_string(modulus_.value()));
        }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool CandidateSet::contains(std::uint64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

CandidateSet CandidateSet::translated(std::uint64_t t) const {
    const std::uint64_t m = modulus_.value();
    std::vector<std::uint64_t> out;
    out.reserve(elements_.size());
    for (auto e : elements_) out.push_back((e + t % m) % m);
    return CandidateSet(modulus_, std::move(out));
}

CandidateSet CandidateSet::scaled(std::uint64_t u) const {
    std::vector<std::uint64_t> out;
    out.reserve(elements_.size());
    for (auto e : elements_) out.push_back(modarith::mulmod(e, u % modulus_.value(), modulus_.value()));
    return CandidateSet(modulus_, std::move(out));
}

ValidityReport is_valid_set(const CandidateSet& set, SquareConvention convention) {
    const auto elems = set.elements();
    const Modulus& m = set.modulus();
    const std::uint64_t mv = m.value();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const std::uint64_t a = elems[j], b = elems[i];
            if (is_square(a - b, m, convention)) return {false, std::make_pair(a, b)};
            if (is_square(mv - (a - b), m, convention)) return {false, std::make_pair(b, a)};
        }
    }
    return {true, std::nullopt};
}

CandidateSet checked(const CandidateSet& set, SquareConvention convention) {
    const bool valid = is_valid_set(set, convention).valid;
    return CandidateSet(set.modulus(), {set.elements().begin(), set.elements().end()},
                        valid ? Validity::Valid : Validity::Invalid);
}

bool SdfGraph::adjacent(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t m = modulus_.value();
    return connection_.test((a % m + m - b % m) % m);
}

Bitset SdfGraph::row(std::uint64_t v) const {
    if (!rows_.empty()) return rows_.at(v);
    return connection_.rotated(v % modulus_.value());
}

SdfGraph build_graph(const Modulus& m, const GraphOptions& options) {
    if (m.value() > options.vertex_cap) {
        throw Error(ErrorKind::TooLarge, "m = " + std::to_string(m.value()) + " exceeds the vertex cap of " +
                                             std::to_string(options.vertex_cap));
    }
    const auto bitmap = square_bitmap(m, options.convention);
    const std::uint64_t mv = m.value();
    Bitset connection(mv);
    for (std::uint64_t x = 1; x < mv; ++x) {
        if (bitmap[x] || bitmap[mv - x]) connection.set(x);
    }
    SdfGraph graph(m, std::move(connection));
    if (mv <= options.materialize_cap) {
        graph.rows_.reserve(mv);
        for (std::uint64_t v = 0; v < mv; ++v) graph.rows_.push_back(graph.connection_.rotated(v));
    }
    return graph;
}

std::span<const std::uint64_t> Fibers::fiber(std::uint64_t x) const {
    const auto it = nonempty.find(x);
    if (it == nonempty.end()) return {};
    return it->second.elements;
}

Fibers residue_fibers(const CandidateSet& set, const quadchar::CharProduct& cp) {
    const Modulus& m = set.modulus();
    if (!(cp.modulus() == m)) throw Error(ErrorKind::DomainError, "character product is over a different modulus");
    const std::uint64_t p_D = cp.p_D();
    const std::uint64_t reduced_modulus = m.value() / p_D;
    std::optional<Modulus> reduced_mod;
    if (reduced_modulus > 1) {
        std::vector<std::uint64_t> rest;
        const auto in_D = cp.primes();
        for (std::uint64_t p : m.primes()) {
            if (std::find(in_D.begin(), in_D.end(), p) == in_D.end()) rest.push_back(p);
        }
        reduced_mod = Modulus::from_primes(std::move(rest));
    }

    Fibers out{p_D, {}};
    for (std::uint64_t a : set.elements()) {
        const std::uint64_t x = a % p_D;
        auto [it, inserted] = out.nonempty.try_emplace(x, Fiber{x, {}, reduced_modulus, {}, std::nullopt});
        it->second.elements.push_back(a);
        it->second.reduced.push_back(a % reduced_modulus);
    }
    for (auto& [x, fiber] : out.nonempty) {
        std::sort(fiber.reduced.begin(), fiber.reduced.end());
        if (reduced_mod) fiber.reduced_set = CandidateSet(*reduced_mod, fiber.reduced);
    }
    return out;
}

} // namespace sdf::core
