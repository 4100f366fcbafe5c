#include "sdf/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sdf/error.hpp"

namespace sdf::bounds {

namespace {

mpz_class pow_u64(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Interval enclose(const mpz_class& z) { return Interval::from_mpz(z.get_mpz_t()); }

Interval decimal(const char* text) { return Interval::from_decimal(text); }

Interval factorial(std::size_t k) {
    std::int64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<std::int64_t>(i);
    return Interval(f);
}

/// (3n)^{1.5 e} as a surd, with extra radicand primes appended.
Surd three_n_power(std::size_t n, std::size_t e, std::vector<std::uint64_t> radicand) {
    const std::uint64_t base = 3 * n;
    const std::uint64_t k = 3 * e;  // exponent 1.5 e = k / 2
    if (k % 2 == 1) {
        for (std::uint64_t f : modarith::factor_trial_division(base)) radicand.push_back(f);
    }
    return Surd::make(pow_u64(base, k / 2), std::move(radicand));
}

} // namespace

Surd Surd::make(mpz_class coefficient, std::vector<std::uint64_t> radicand_primes) {
    std::sort(radicand_primes.begin(), radicand_primes.end());
    mpz_class radicand = 1;
    for (std::size_t i = 0; i < radicand_primes.size();) {
        std::size_t j = i;
        while (j < radicand_primes.size() && radicand_primes[j] == radicand_primes[i]) ++j;
        const std::size_t count = j - i;
        coefficient *= pow_u64(radicand_primes[i], count / 2);
        if (count % 2 == 1) radicand *= radicand_primes[i];
        i = j;
    }
    return Surd{std::move(coefficient), std::move(radicand)};
}

Interval Surd::enclose() const {
    if (radicand == 1) return bounds::enclose(coefficient);
    return bounds::enclose(coefficient) * sqrt(bounds::enclose(radicand));
}

std::string Surd::to_string() const {
    if (radicand == 1) return coefficient.get_str();
    if (coefficient == 1) return "sqrt(" + radicand.get_str() + ")";
    return coefficient.get_str() + "*sqrt(" + radicand.get_str() + ")";
}

int Surd::compare(const mpz_class& x) const {
    const mpz_class lhs = coefficient * coefficient * radicand;
    const mpz_class rhs = x * x;
    return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

Surd g_d(std::size_t n, std::size_t d) {
    if (d < 1 || d > n) {
        throw Error(ErrorKind::DomainError, "G_d needs 1 <= d <= n (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
    }
    return three_n_power(n, n - d, {});
}

Surd theorem_bound(const Modulus& m) {
    return three_n_power(m.n(), m.n(), {m.primes().begin(), m.primes().end()});
}

std::optional<Surd> matolcsi_ruzsa_bound(const Modulus& m) {
    if (!m.all_primes_1_mod_4()) return std::nullopt;
    return Surd::make(1, {m.primes().begin(), m.primes().end()});
}

std::optional<mpz_class> alon_tournament_bound(const Modulus& m) {
    if (!m.all_primes_3_mod_4()) return std::nullopt;
    mpz_class product = 1;
    for (std::uint64_t p : m.primes()) product *= (p + 1) / 2;
    return product;
}

CombinedBound combined_bound(const Modulus& m, double c) {
    if (!(c > 0) || !std::isfinite(c)) throw Error(ErrorKind::DomainError, "c must be a positive real");
    const std::uint64_t mv = m.value();
    const Interval mi = Interval::from_u64(mv);
    const Interval exponent = Interval(0) - Interval::from_double(c) * Interval(static_cast<std::int64_t>(m.n()));
    Interval tournament = mi * pow(Interval(2), exponent);
    Interval theorem = theorem_bound(m).enclose();

    bool certified = false;
    if (const auto alon = alon_tournament_bound(m)) certified = certainly_less_equal(enclose(*alon), tournament);

    std::uint64_t m_prime = 1;
    for (std::uint64_t p : m.primes()) {
        if (p % 4 == 3) m_prime *= p;
    }
    const bool reduction = static_cast<unsigned __int128>(m_prime) * m_prime < mv;
    Interval reduction_value = Interval::from_u64(m_prime) * sqrt(Interval::from_u64(mv / m_prime));
    Interval value = min(tournament, theorem);
    return CombinedBound{c,
                         std::move(value),
                         std::move(tournament),
                         std::move(theorem),
                         certified,
                         m_prime,
                         reduction,
                         std::move(reduction_value),
                         pow(mi, 0.75)};
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool BoundReport::cages(std::uint64_t size) const {
    const mpz_class s = size;
    for (const auto& e : entries) {
        if (!e.applicable) continue;
        bool ok;
        if (e.surd) {
            const int cmp = e.surd->compare(s);
            ok = e.strict ? cmp > 0 : cmp >= 0;
        } else {
            const Interval si = Interval::from_u64(size);
            ok = e.strict ? certainly_less(si, e.value) : certainly_less_equal(si, e.value);
        }
        if (!ok) return false;
    }
    return true;
}

BoundReport bound_report(const Modulus& m, double c) {
    BoundReport report{m.value(), m.n(), {}, {}, {}};

    const Surd theorem = theorem_bound(m);
    report.entries.push_back({"theorem", true, false, theorem.enclose(), theorem.to_string(),
                              "sqrt(m) (3n)^{1.5n}, all odd squarefree m", theorem});

    const Surd root_m = Surd::make(1, {m.primes().begin(), m.primes().end()});
    report.entries.push_back({"matolcsi_ruzsa", m.all_primes_1_mod_4(), true, root_m.enclose(), root_m.to_string(),
                              "|A| < sqrt(m) when every p | m is 1 mod 4", root_m});

    mpz_class alon = 1;
    for (std::uint64_t p : m.primes()) alon *= (p + 1) / 2;
    const Surd alon_surd{alon, 1};
    report.entries.push_back({"alon_tournament", m.all_primes_3_mod_4(), false, alon_surd.enclose(), alon.get_str(),
                              "prod (p_i + 1)/2 via the tournament product lemma, every p | m is 3 mod 4", alon_surd});

    const CombinedBound combined = combined_bound(m, c);
    report.entries.push_back({"combined", m.all_primes_3_mod_4() && combined.tournament_branch_certified, false,
                              combined.value, "",
                              "m min(2^{-cn}, m^{-1/2} (3n)^{1.5n}) with c = " + std::to_string(c), std::nullopt});

    for (const auto& e : report.entries) {
        if (!e.applicable) continue;
        if (report.min_name.empty() || mpfr_less_p(e.value.hi(), report.min_applicable.hi())) {
            report.min_name = e.name;
            report.min_applicable = e.value;
        }
    }
    return report;
}

const InequalityCheck* ProofReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

ProofReport proof_inequality_report(std::span<const std::uint64_t> primes) {
    const std::size_t n = primes.size();
    if (n == 0) throw Error(ErrorKind::DomainError, "need at least one prime");
    if (n > kMaxSubsetPrimes) {
        throw Error(ErrorKind::SubsetBlowup, std::to_string(n) + " primes exceed the subset enumeration limit of " +
                                                 std::to_string(kMaxSubsetPrimes));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (primes[j] < 3 || !modarith::is_prime(primes[j])) {
            throw Error(ErrorKind::DomainError, std::to_string(primes[j]) + " is not an odd prime");
        }
        if (j > 0 && primes[j] <= primes[j - 1]) throw Error(ErrorKind::DomainError, "primes must be strictly increasing");
    }

    const auto ni = Interval(static_cast<std::int64_t>(n));
    const auto three_n = Interval(static_cast<std::int64_t>(3 * n));
    const double nd = static_cast<double>(n);

    // G_r^{1/2} = (3n)^{0.75 (n - r)}
    std::vector<Interval> g_half(n + 1);
    for (std::size_t r = 0; r <= n; ++r) g_half[r] = pow(three_n, 0.75 * static_cast<double>(n - r));

    // p_D^{-1/4} for every subset D
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Interval> quarter(subsets);
    quarter[0] = Interval(1);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        quarter[mask] = quarter[mask & (mask - 1)] * pow(Interval::from_u64(primes[low]), -0.25);
    }

    Interval sum_quarter;
    for (std::size_t j = 0; j < n; ++j) sum_quarter += quarter[std::size_t{1} << j];

    Interval t1;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        t1 += g_half[static_cast<std::size_t>(std::popcount(mask))] * quarter[mask];
    }

    Interval t2;
    for (std::size_t d = 1; d < subsets; ++d) {
        const auto size_d = static_cast<std::size_t>(std::popcount(d));
        Interval inner;
        // proper subsets D' of D, including the empty set
        for (std::size_t sub = (d - 1) & d;; sub = (sub - 1) & d) {
            inner += g_half[size_d - static_cast<std::size_t>(std::popcount(sub))] * quarter[sub];
            if (sub == 0) break;
        }
        t2 += g_half[size_d] * inner;
    }

    ProofReport report{{primes.begin(), primes.end()}, n, t1, t2, {}, true};
    auto add = [&](std::string name, Interval lhs, Interval rhs, bool applicable = true) {
        const bool pass = certainly_less(lhs, rhs);
        report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), true, applicable, pass});
    };

    // sum_j p_j^{-1/4} <= sum_j (2j+1)^{-1/4} <= (2/3)((2n+2)^{3/4} - 2^{3/4}) < (2/3)(2n)^{3/4} < 1.13 n^{3/4}
    Interval odd_sum;
    bool dominated = true;
    for (std::size_t j = 1; j <= n; ++j) {
        odd_sum += pow(Interval(static_cast<std::int64_t>(2 * j + 1)), -0.25);
        dominated = dominated && primes[j - 1] >= 2 * j + 1;
    }
    const Interval two_thirds = Interval(2) / Interval(3);
    const Interval integral =
        two_thirds * (pow(Interval(static_cast<std::int64_t>(2 * n + 2)), 0.75) - pow(Interval(2), 0.75));
    const Interval relaxed = two_thirds * pow(Interval(static_cast<std::int64_t>(2 * n)), 0.75);
    const Interval rhs_113 = decimal("1.13") * pow(ni, 0.75);

    add("sum_quarter_powers", sum_quarter, rhs_113);
    // p_j >= 2j + 1 termwise, decided on integers
    report.checks.push_back({"primes_dominate_odd_sequence", sum_quarter, odd_sum, false, true, dominated});
    add("odd_sequence_integral", odd_sum, integral);
    add("integral_subadditive", integral, relaxed);
    add("constant_1_13", relaxed, rhs_113);

    // T_1 <= sum_d (1.13^d / d!) (3n)^{0.75(n-d)} n^{0.75 d} <= 0.65 (3n)^{0.75 n}
    add("t1", t1, decimal("0.65") * pow(three_n, 0.75 * nd));
    const Interval scaled_113 = decimal("1.13") * pow(Interval(3), -0.75);
    Interval t1_series;
    for (std::size_t d = 1; d <= n; ++d) {
        t1_series += pow(scaled_113, static_cast<double>(d)) / factorial(d);
    }
    add("t1_series_constant", t1_series, decimal("0.65"));

    add("t2", t2, decimal("0.27") * pow(three_n, 1.5 * nd));

    // inner sum over D strictly containing D', |D'| = l: <= 0.16 (3n)^{1.5n - 0.75 l}; proved for n >= 2
    const bool n_at_least_2 = n >= 2;
    Interval worst_ratio;
    for (std::size_t l = 0; l < n; ++l) {
        Interval inner;
        const std::size_t free_bits = n - l;
        for (std::size_t extra = 1; extra < (std::size_t{1} << free_bits); ++extra) {
            const std::size_t size_d = l + static_cast<std::size_t>(std::popcount(extra));
            inner += g_half[size_d] * g_half[size_d - l];
        }
        const Interval ratio = inner / pow(three_n, 1.5 * nd - 0.75 * static_cast<double>(l));
        worst_ratio = l == 0 ? ratio : max(worst_ratio, ratio);
    }
    add("t2_inner_sum_016", worst_ratio, decimal("0.16"), n_at_least_2);
    const Interval x = pow(Interval(3), -1.5) * pow(ni, -0.5);
    add("t2_geometric_016", x / (Interval(1) - x), decimal("0.16"), n_at_least_2);
    Interval t2_series;
    for (std::size_t l = 0; l < n; ++l) {
        t2_series += pow(scaled_113, static_cast<double>(l)) / factorial(l);
    }
    add("t2_series_constant", decimal("0.16") * t2_series, decimal("0.27"));

    for (const auto& c : report.checks) {
        if (c.applicable && !c.pass) report.all_pass = false;
    }
    return report;
}

ContradictionRecord check_final_contradiction(const Modulus& m, const mpz_class& assumed_size) {
    const std::size_t n = m.n();
    if (n < 2) throw Error(ErrorKind::DomainError, "the closing step needs n >= 2");
    const Surd bound = theorem_bound(m);
    if (bound.compare(assumed_size) >= 0) {
        throw Error(ErrorKind::DomainError,
                    "|A| = " + assumed_size.get_str() + " is within the bound " + bound.to_string());
    }
    const Interval size = enclose(assumed_size);
    const Interval three_n = Interval(static_cast<std::int64_t>(3 * n));
    const double nd = static_cast<double>(n);
    const Interval mi = Interval::from_u64(m.value());

    Interval sigma = Interval(1) - Interval(1) / size;
    const Interval root_size = sqrt(size);
    Interval lhs = root_size * (root_size * sigma - decimal("0.65") * pow(mi, 0.25) * pow(three_n, 0.75 * nd));
    const Interval main = sqrt(mi) * pow(three_n, 1.5 * nd);
    Interval rhs = decimal("0.27") * main;
    Interval middle = (decimal("0.99") - decimal("0.65")) * main;

    ContradictionRecord record{m.value(), n, assumed_size, sigma, lhs, rhs, middle, false, false, false, false};
    record.sigma_at_least_099 = certainly_less_equal(decimal("0.99"), sigma);
    record.lhs_above_middle = certainly_less(middle, lhs);
    record.middle_above_rhs = certainly_less(rhs, middle);
    record.contradiction = certainly_less(rhs, lhs);
    return record;
}

} // namespace sdf::bounds
