// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sdf/bounds.hpp"
#include "sdf/construct.hpp"
#include "sdf/error.hpp"
#include "sdf/modarith.hpp"
#include "sdf/quadchar.hpp"
#include "sdf/search.hpp"
#include "sdf/tournament.hpp"

using namespace sdf;
using modarith::Modulus;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_secs, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_secs > 0 && secs > limit_secs) {
        o.pass = false;
        o.detail += "; over the " + std::to_string(static_cast<int>(limit_secs)) + " s limit";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::vector<Modulus> odd_squarefree_upto(std::uint64_t hi) {
    std::vector<Modulus> out;
    for (std::uint64_t m = 3; m <= hi; m += 2) {
        try {
            out.push_back(modarith::factor_squarefree(m));
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= hi; p += 2) {
        if (modarith::is_prime(p)) out.push_back(p);
    }
    return out;
}

bool all_primes_mod4(const Modulus& m, std::uint64_t r) {
    for (std::uint64_t p : m.primes()) {
        if (p % 4 != r) return false;
    }
    return true;
}

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

/// Search results for every odd squarefree m <= 1000, shared by criteria 4 and 8.
std::map<std::uint64_t, search::SearchResult> results;
const Budget kCagingBudget{2'000'000, 2.0};

} // namespace

int main() {
    criterion(1, "identity suite (p <= 100, all residue pairs)", 5, [] {
        std::size_t pairs = 0, bad = 0;
        for (std::uint64_t p : primes_upto(100)) {
            for (std::uint64_t b1 = 0; b1 < p; ++b1) {
                for (std::uint64_t b2 = 0; b2 < p; ++b2) {
                    const std::int64_t expected = b1 == b2 ? static_cast<std::int64_t>(p) - 1 : -1;
                    ++pairs;
                    if (quadchar::inner_pair_sum(b1, b2, p) != expected || quadchar::is_special_pair(b1, b2, p) != (b1 == b2)) {
                        ++bad;
                    }
                }
            }
        }
        return Outcome{bad == 0, count(pairs, "pairs") + ", " + count(bad, "mismatches")};
    });

    criterion(2, "factorization suite (m <= 1000, 50 random triples each)", 60, [] {
        std::mt19937_64 rng(2024);
        std::size_t triples = 0, bad = 0;
        for (const auto& m : odd_squarefree_upto(1000)) {
            const std::size_t n = m.n();
            for (int t = 0; t < 50; ++t) {
                std::uint64_t mask = 0;
                while (mask == 0) mask = rng() & ((std::uint64_t{1} << n) - 1);
                std::vector<std::size_t> d;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask >> i & 1) d.push_back(i);
                }
                const quadchar::CharProduct cp(m, d);
                const std::uint64_t b1 = rng() % m.value(), b2 = rng() % m.value();
                std::int64_t product = 1;
                for (std::size_t i : d) {
                    const std::uint64_t p = m.primes()[i];
                    product *= quadchar::inner_pair_sum(b1 % p, b2 % p, p);
                }
                ++triples;
                if (quadchar::full_residue_pair_sum(b1, b2, cp) != product) ++bad;
            }
        }
        return Outcome{bad == 0, count(triples, "triples") + ", " + count(bad, "mismatches")};
    });

    criterion(3, "oracle equivalence (m <= 40)", 120, [] {
        std::size_t checked = 0, bad = 0;
        for (const auto& m : odd_squarefree_upto(40)) {
            const auto exact = search::max_sdf_exact(m);
            const auto oracle = search::brute_force_oracle(m);
            ++checked;
            if (!exact.exact || exact.size != oracle.size) ++bad;
        }
        return Outcome{bad == 0, count(checked, "moduli") + ", " + count(bad, "mismatches")};
    });

    criterion(4, "bound caging (3 <= m <= 1000)", 0, [] {
        std::size_t exact = 0, capped = 0, violations = 0;
        std::string first;
        for (const auto& m : odd_squarefree_upto(1000)) {
            auto r = search::max_sdf_exact(m, kCagingBudget);
            (r.exact ? exact : capped) += 1;
            const mpz_class f = static_cast<unsigned long>(r.size);
            bool ok = bounds::theorem_bound(m).compare(f) >= 0;
            if (all_primes_mod4(m, 1)) ok = ok && f * f < m.value();
            if (all_primes_mod4(m, 3)) {
                mpz_class bound = 1;
                for (std::uint64_t p : m.primes()) bound *= static_cast<unsigned long>((p + 1) / 2);
                ok = ok && f <= bound;
            }
            if (!ok) {
                ++violations;
                if (first.empty()) first = ", first at m=" + std::to_string(m.value());
            }
            results.emplace(m.value(), std::move(r));
        }
        return Outcome{violations == 0, count(exact, "exact") + ", " + count(capped, "budget-capped") + ", " +
                                            count(violations, "violations") + first};
    });

    criterion(5, "F(p) = 1 for primes p = 3 mod 4 up to 200", 0, [] {
        std::size_t checked = 0, bad = 0;
        for (std::uint64_t p : primes_upto(200)) {
            if (p % 4 != 3) continue;
            const auto r = search::max_sdf_exact(Modulus::from_primes({p}));
            ++checked;
            if (!r.exact || r.size != 1) ++bad;
        }
        return Outcome{bad == 0, count(checked, "primes") + ", " + count(bad, "failures")};
    });

    criterion(6, "closing contradiction for m = 15, |A| = 837", 0, [] {
        const auto r = bounds::check_final_contradiction(modarith::factor_squarefree(15), 837);
        const bool ok = r.sigma_at_least_099 && r.lhs_above_middle && r.middle_above_rhs && r.contradiction;
        return Outcome{ok, "sigma in [" + r.sigma.lower_string(6) + ", " + r.sigma.upper_string(6) + "], L >= " +
                               r.lhs.lower_string(8) + ", R <= " + r.rhs.upper_string(8)};
    });

    criterion(7, "proof inequalities (first n primes, n <= 12; 100 random tuples)", 0, [] {
        const auto primes = primes_upto(2000);
        std::size_t reports = 0, bad = 0;
        std::string first;
        const auto run = [&](const std::vector<std::uint64_t>& tuple) {
            ++reports;
            if (bounds::proof_inequality_report(tuple).all_pass) return;
            ++bad;
            if (first.empty()) first = ", first failure with " + std::to_string(tuple.size()) + " primes";
        };
        for (std::size_t n = 1; n <= 12; ++n) run({primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(n)});
        std::mt19937_64 rng(7);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + rng() % 12;
            std::vector<std::uint64_t> tuple;
            std::sample(primes.begin(), primes.end(), std::back_inserter(tuple), n, rng);
            run(tuple);
        }
        return Outcome{bad == 0, count(reports, "reports") + ", " + count(bad, "failures") + first};
    });

    criterion(8, "constructions (coprime products <= 1000, Ramsey p <= 10^4, supermultiplicativity)", 0, [] {
        std::size_t products = 0, ramsey = 0, compared = 0, bad = 0;
        std::string first;
        const auto fail = [&](const std::string& what) {
            ++bad;
            if (first.empty()) first = ", first: " + what;
        };
        for (const auto& [m1, r1] : results) {
            for (const auto& [m2, r2] : results) {
                if (m2 <= m1 || m1 * m2 > 1000 || std::gcd(m1, m2) != 1) continue;
                const std::vector<core::CandidateSet> parts{r1.best_set, r2.best_set};
                const auto set = construct::product_construct(parts);
                ++products;
                if (!core::is_valid_set(set).valid || set.size() != r1.size * r2.size) {
                    fail("product " + std::to_string(m1) + "*" + std::to_string(m2));
                }
                const auto& r12 = results.at(m1 * m2);
                if (r1.exact && r2.exact && r12.exact) {
                    ++compared;
                    if (r12.size < r1.size * r2.size) fail("F(" + std::to_string(m1 * m2) + ") < F*F");
                }
            }
        }
        for (std::uint64_t p : primes_upto(10'000)) {
            if (p % 4 != 1) continue;
            const auto set = construct::ramsey_construct(p);
            ++ramsey;
            if (!core::is_valid_set(set).valid || set.size() < construct::ramsey_guarantee(p)) {
                fail("ramsey " + std::to_string(p));
            }
        }
        return Outcome{bad == 0, count(products, "products") + ", " + count(ramsey, "Ramsey primes") + ", " +
                                     count(compared, "exact comparisons") + ", " + count(bad, "failures") + first};
    });

    criterion(9, "covering-family lemma (100 random products, Paley m in {21,33,57,69,77})", 600, [] {
        std::size_t graphs = 0, bad = 0;
        std::string first;
        const auto check = [&](const tournament::ProductGraph& g, const std::string& name) {
            ++graphs;
            const auto r = tournament::verify_lemma(g);
            const bool ok = r.exhaustive && r.complete && tournament::is_covering_family(r.family, g).covering &&
                            mpz_class(static_cast<unsigned long>(r.family.size())) <= r.bound &&
                            r.rank == r.family.size();
            if (!ok) {
                ++bad;
                if (first.empty()) first = ", first: " + name;
            }
        };
        std::mt19937_64 rng(9);
        for (int t = 0; t < 100; ++t) {
            std::vector<tournament::Digraph> factors;
            std::size_t order = 1;
            const std::size_t k = 1 + rng() % 3;
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t room = 12 / order;
                if (room < 2) break;
                const std::size_t n = 2 + rng() % (std::min<std::size_t>(room, 6) - 1);
                factors.push_back(tournament::random_digraph(n, rng(), 0.3 + 0.4 * static_cast<double>(rng() % 2)));
                order *= n;
            }
            check(tournament::ProductGraph(std::move(factors)), "random #" + std::to_string(t));
        }
        for (std::uint64_t m : {21, 33, 57, 69, 77}) {
            check(tournament::paley_product(modarith::factor_squarefree(m)), "Paley " + std::to_string(m));
        }
        return Outcome{bad == 0, count(graphs, "products") + ", " + count(bad, "failures") + first};
    });

    std::printf("NOTE 10 the main theorem is an asymptotic bound; criteria 1-9 exercise its proof machinery at desk scale\n");
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
