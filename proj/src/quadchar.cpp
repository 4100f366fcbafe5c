#include "sdf/quadchar.hpp"

#include <algorithm>
#include <string>

#include "sdf/error.hpp"

namespace sdf::quadchar {

namespace {

constexpr std::uint64_t kTablePrimeLimit = 1ULL << 20;
constexpr std::uint64_t kDirectSumLimit = 1ULL << 28;

} // namespace

CharProduct::CharProduct(modarith::Modulus modulus, std::vector<std::size_t> indices)
    : modulus_(std::move(modulus)), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (std::size_t j : indices_) {
        if (j >= modulus_.n()) {
            throw Error(ErrorKind::DomainError, "prime index " + std::to_string(j + 1) + " out of range for m = " +
                                                    std::to_string(modulus_.value()));
        }
        const std::uint64_t p = modulus_.prime(j);
        primes_.push_back(p);
        p_D_ *= p;
        std::vector<std::int8_t> table;
        if (p <= kTablePrimeLimit) {
            table.assign(p, -1);
            table[0] = 0;
            for (std::uint64_t y = 1; y <= p / 2; ++y) table[y * y % p] = 1;
        }
        tables_.push_back(std::move(table));
    }
}

CharProduct CharProduct::full(const modarith::Modulus& modulus) {
    std::vector<std::size_t> all(modulus.n());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return CharProduct(modulus, std::move(all));
}

int CharProduct::chi(std::size_t k, std::int64_t x) const {
    const std::uint64_t p = primes_[k];
    if (!tables_[k].empty()) return tables_[k][modarith::reduce(x, p)];
    return modarith::legendre(x, p);
}

int CharProduct::operator()(std::int64_t x) const {
    int result = 1;
    for (std::size_t k = 0; k < primes_.size() && result != 0; ++k) result *= chi(k, x);
    return result;
}

int chi_D(std::uint64_t x, const CharProduct& cp) {
    return cp(static_cast<std::int64_t>(x % cp.modulus().value()));
}

bool is_special_pair(std::uint64_t b1, std::uint64_t b2, std::uint64_t p) {
    return b1 % p == b2 % p;
}

std::int64_t inner_pair_sum(std::uint64_t b1, std::uint64_t b2, std::uint64_t p) {
    if (p > kDirectSumLimit) throw Error(ErrorKind::TooLarge, "prime too large for a direct sum");
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y <= p / 2; ++y) chi[modarith::mulmod(y, y, p)] = 1;
    std::uint64_t r1 = (p - b1 % p) % p; // a - b1 at a = 0
    std::uint64_t r2 = (p - b2 % p) % p;
    std::int64_t sum = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
        sum += chi[r1] * chi[r2];
        if (++r1 == p) r1 = 0;
        if (++r2 == p) r2 = 0;
    }
    return sum;
}

std::int64_t full_residue_pair_sum(std::uint64_t b1, std::uint64_t b2, const CharProduct& cp) {
    if (cp.d() == 0) throw Error(ErrorKind::DomainError, "character product over empty D");
    if (cp.p_D() > kDirectSumLimit) throw Error(ErrorKind::TooLarge, "p_D too large for a direct sum");
    const auto primes = cp.primes();
    const std::size_t d = primes.size();
    std::vector<std::uint64_t> r1(d), r2(d);
    for (std::size_t k = 0; k < d; ++k) {
        r1[k] = (primes[k] - b1 % primes[k]) % primes[k];
        r2[k] = (primes[k] - b2 % primes[k]) % primes[k];
    }
    std::int64_t sum = 0;
    for (std::uint64_t a = 0; a < cp.p_D(); ++a) {
        int term = 1;
        for (std::size_t k = 0; k < d; ++k) {
            if (term != 0) {
                term *= cp.chi(k, static_cast<std::int64_t>(r1[k])) * cp.chi(k, static_cast<std::int64_t>(r2[k]));
            }
            if (++r1[k] == primes[k]) r1[k] = 0;
            if (++r2[k] == primes[k]) r2[k] = 0;
        }
        sum += term;
    }
    return sum;
}

std::int64_t factored_pair_sum(std::uint64_t b1, std::uint64_t b2, const CharProduct& cp) {
    if (cp.d() == 0) throw Error(ErrorKind::DomainError, "character product over empty D");
    std::int64_t product = 1;
    for (std::uint64_t p : cp.primes()) product *= inner_pair_sum(b1, b2, p);
    return product;
}

std::int64_t s_D(std::span<const std::uint64_t> set, const CharProduct& cp) {
    const std::uint64_t m = cp.modulus().value();
    std::int64_t total = 0;
    for (std::uint64_t a : set) {
        std::int64_t inner = 0;
        for (std::uint64_t b : set) {
            const std::uint64_t diff = (a % m + m - b % m) % m;
            inner += cp(static_cast<std::int64_t>(diff));
        }
        total += inner * inner;
    }
    return total;
}

} // namespace sdf::quadchar
