#include "sdf/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "sdf/error.hpp"

namespace sdf::tournament {

Digraph::Digraph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges)
    : Digraph(order, edges, [order] {
          std::vector<std::int64_t> labels(order);
          std::iota(labels.begin(), labels.end(), 0);
          return labels;
      }()) {}

Digraph::Digraph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges,
                 std::vector<std::int64_t> labels)
    : labels_(std::move(labels)), adjacency_(order * order, false), out_(order) {
    if (order == 0) throw Error(ErrorKind::DomainError, "digraph needs at least one vertex");
    if (labels_.size() != order) throw Error(ErrorKind::DomainError, "one label per vertex required");
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::DomainError, "vertex labels must be distinct");
    }
    for (const auto& [u, v] : edges) {
        if (u >= order || v >= order) throw Error(ErrorKind::DomainError, "edge endpoint out of range");
        if (u == v) throw Error(ErrorKind::DomainError, "self-loop at vertex " + std::to_string(u));
        if (adjacency_[u * order + v]) continue;
        adjacency_[u * order + v] = true;
        out_[u].push_back(v);
    }
    for (auto& nbrs : out_) {
        std::sort(nbrs.begin(), nbrs.end());
        max_outdegree_ = std::max(max_outdegree_, nbrs.size());
    }
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u) {
        for (std::size_t v : out_[u]) out.emplace_back(u, v);
    }
    return out;
}

bool Digraph::is_tournament() const {
    for (std::size_t x = 0; x < order(); ++x) {
        for (std::size_t y = x + 1; y < order(); ++y) {
            if (has_edge(x, y) == has_edge(y, x)) return false;
        }
    }
    return true;
}

Digraph paley_tournament(std::uint64_t p) {
    if (!modarith::is_prime(p) || p == 2) throw Error(ErrorKind::DomainError, std::to_string(p) + " is not an odd prime");
    if (p % 4 != 3) throw Error(ErrorKind::WrongResidueClass, std::to_string(p) + " is not 3 mod 4");
    std::vector<bool> square(p, false);
    for (std::uint64_t y = 1; y < p; ++y) square[y * y % p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::uint64_t x = 0; x < p; ++x) {
        for (std::uint64_t y = 0; y < p; ++y) {
            if (x != y && square[(x + p - y) % p]) edges.emplace_back(x, y);
        }
    }
    return Digraph(p, edges);
}

Digraph random_digraph(std::size_t order, std::uint64_t seed, double density) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < order; ++u) {
        for (std::size_t v = 0; v < order; ++v) {
            if (u == v) continue;
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < density) edges.emplace_back(u, v);
        }
    }
    return Digraph(order, edges);
}

ProductGraph::ProductGraph(std::vector<Digraph> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(ErrorKind::DomainError, "product of zero digraphs");
    for (const auto& f : factors_) {
        if (order_ > (std::size_t{1} << 40) / f.order()) throw Error(ErrorKind::TooLarge, "product graph too large");
        order_ *= f.order();
    }
}

std::size_t ProductGraph::encode(const Tuple& t) const {
    if (t.size() != factors_.size()) throw Error(ErrorKind::DomainError, "tuple length differs from factor count");
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (t[i] >= factors_[i].order()) throw Error(ErrorKind::DomainError, "tuple coordinate out of range");
        index = index * factors_[i].order() + t[i];
    }
    return index;
}

Tuple ProductGraph::decode(std::size_t index) const {
    Tuple t(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        t[i] = index % factors_[i].order();
        index /= factors_[i].order();
    }
    return t;
}

bool ProductGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u == v) return false;
    const Tuple a = decode(u), b = decode(v);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (a[i] != b[i] && !factors_[i].has_edge(a[i], b[i])) return false;
    }
    return true;
}

bool ProductGraph::covers(std::size_t u, std::size_t v) const {
    const Tuple a = decode(u), b = decode(v);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].has_edge(a[i], b[i])) return true;
    }
    return false;
}

mpz_class ProductGraph::lemma_bound() const {
    mpz_class bound = 1;
    for (const auto& f : factors_) bound *= static_cast<unsigned long>(f.max_outdegree() + 1);
    return bound;
}

ProductGraph paley_product(const modarith::Modulus& m) {
    std::vector<Digraph> factors;
    for (std::uint64_t p : m.primes()) factors.push_back(paley_tournament(p));
    return ProductGraph(std::move(factors));
}

CoverageReport is_covering_family(std::span<const std::size_t> family, const ProductGraph& graph) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            if (family[i] == family[j]) throw Error(ErrorKind::DomainError, "family has a repeated member");
            if (!graph.covers(family[i], family[j])) {
                return {false, std::make_pair(graph.decode(family[i]), graph.decode(family[j]))};
            }
        }
    }
    return {true, std::nullopt};
}

AlonMatrix alon_polynomials_rank(std::span<const std::size_t> family, const ProductGraph& graph) {
    if (!is_covering_family(family, graph).covering) {
        throw Error(ErrorKind::NotCovering, "family is not covering; the Alon polynomials need not be independent");
    }
    const auto factors = graph.factors();
    std::vector<Tuple> tuples;
    for (std::size_t v : family) tuples.push_back(graph.decode(v));

    const std::size_t s = family.size();
    AlonMatrix out{linalg::IntegerMatrix(s, std::vector<mpz_class>(s)), 0, true, true};
    for (std::size_t r = 0; r < s; ++r) {
        const Tuple& v = tuples[r];
        for (std::size_t c = 0; c < s; ++c) {
            const Tuple& u = tuples[c];
            mpz_class value = 1;
            for (std::size_t i = 0; i < factors.size() && value != 0; ++i) {
                const auto labels = factors[i].labels();
                const std::int64_t x = labels[u[i]];
                for (std::size_t j : factors[i].out_neighbors(v[i])) {
                    value *= static_cast<long>(x - labels[j]);
                }
            }
            out.matrix[r][c] = value;
            if (r == c && value == 0) out.diagonal_nonzero = false;
            if (r != c && value != 0) out.off_diagonal_zero = false;
        }
    }
    out.rank = linalg::bareiss_rank(out.matrix);
    return out;
}

std::vector<std::size_t> max_covering_family_by_subsets(const ProductGraph& graph) {
    const std::size_t n = graph.order();
    if (n > 20) throw Error(ErrorKind::TooLarge, "subset enumeration limited to 20 vertices");
    std::vector<std::uint32_t> mutual(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && graph.covers(u, v) && graph.covers(v, u)) mutual[u] |= 1U << v;
        }
    }
    std::uint32_t best = 0;
    int best_size = 0;
    const std::uint32_t total = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
        const auto s = static_cast<std::uint32_t>(mask);
        const int size = std::popcount(s);
        if (size <= best_size) continue;
        bool ok = true;
        for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(rest));
            ok = (mutual[u] | (1U << u)) >= s && ((s & ~(mutual[u] | (1U << u))) == 0);
        }
        if (ok) {
            best = s;
            best_size = size;
        }
    }
    std::vector<std::size_t> out;
    for (std::uint32_t rest = best; rest; rest &= rest - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    return out;
}

namespace {

std::vector<Bitset> mutual_coverage_rows(const ProductGraph& graph) {
    const std::size_t n = graph.order();
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (graph.covers(u, v) && graph.covers(v, u)) {
                rows[u].set(v);
                rows[v].set(u);
            }
        }
    }
    return rows;
}

bool lex_better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

/// Seeded local search: random greedy starts, then one-for-one swaps that free room for growth.
std::vector<std::size_t> local_search_family(const std::vector<Bitset>& rows, std::uint64_t seed) {
    const std::size_t n = rows.size();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> best;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    constexpr int kRestarts = 64;
    const std::size_t repairs = 8 * n + 64;
    for (int restart = 0; restart < kRestarts; ++restart) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> family;
        Bitset allowed(n);
        allowed.set_all();
        auto grow = [&] {
            for (std::size_t v : order) {
                if (allowed.test(v)) {
                    family.push_back(v);
                    allowed &= rows[v];
                }
            }
        };
        grow();
        for (std::size_t step = 0; step < repairs; ++step) {
            const std::size_t v = static_cast<std::size_t>(rng() % n);
            if (std::find(family.begin(), family.end(), v) != family.end()) continue;
            std::vector<std::size_t> conflicts;
            for (std::size_t u : family) {
                if (!rows[v].test(u)) conflicts.push_back(u);
            }
            if (conflicts.size() != 1) continue;
            std::erase(family, conflicts.front());
            family.push_back(v);
            allowed.set_all();
            for (std::size_t u : family) allowed &= rows[u];
            grow();
        }
        std::sort(family.begin(), family.end());
        if (lex_better(family, best)) best = family;
    }
    return best;
}

} // namespace

LemmaReport verify_lemma(const ProductGraph& graph, std::size_t exhaustive_limit, std::uint64_t seed,
                         const Budget& budget) {
    const auto rows = mutual_coverage_rows(graph);
    LemmaReport report{{}, graph.lemma_bound(), graph.order() <= exhaustive_limit, true, false, 0, false};
    if (report.exhaustive) {
        CliqueOptions options;
        options.budget = budget;
        const CliqueResult clique = max_clique(rows, options);
        report.family = clique.clique;
        report.complete = clique.complete;
    } else {
        report.family = local_search_family(rows, seed);
        report.complete = false;
    }
    if (!is_covering_family(report.family, graph).covering) {
        throw std::logic_error("covering family search returned a non-covering family");
    }
    report.within_bound = cmp(mpz_class(static_cast<unsigned long>(report.family.size())), report.bound) <= 0;
    const AlonMatrix alon = alon_polynomials_rank(report.family, graph);
    report.rank = alon.rank;
    report.rank_equals_size = alon.rank == report.family.size();
    return report;
}

std::vector<std::size_t> sdf_set_to_family(const core::CandidateSet& set) {
    const auto& modulus = set.modulus();
    if (!modulus.all_primes_3_mod_4()) {
        throw Error(ErrorKind::WrongResidueClass, "every prime of m = " + std::to_string(modulus.value()) + " must be 3 mod 4");
    }
    if (!core::is_valid_set(set).valid) throw Error(ErrorKind::InvalidSet, "set is not square-difference-free");
    const ProductGraph graph = paley_product(modulus);
    std::vector<std::size_t> family;
    for (std::uint64_t a : set.elements()) {
        Tuple t;
        for (std::uint64_t p : modulus.primes()) t.push_back(static_cast<std::size_t>(a % p));
        family.push_back(graph.encode(t));
    }
    if (!is_covering_family(family, graph).covering) {
        throw std::logic_error("valid set did not map to a covering family");
    }
    return family;
}

} // namespace sdf::tournament
