#include "sdf/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sdf/error.hpp"

namespace sdf::modarith {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw Error(ErrorKind::DomainError, std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return reduce(old_s, m);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
    if (a >= 0) return static_cast<std::uint64_t>(a) % m;
    // -(a+1) avoids overflow at INT64_MIN
    const std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;
    return m - 1 - r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
    const std::uint64_t r = reduce(a, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
    for (std::uint64_t x = 2; x < p; ++x) {
        if (legendre(static_cast<std::int64_t>(x), p) == -1) return x;
    }
    throw Error(ErrorKind::DomainError, "no quadratic non-residue modulo " + std::to_string(p));
}

std::vector<std::uint64_t> factor_trial_division(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    while (n % 2 == 0 && n > 0) {
        factors.push_back(2);
        n /= 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        while (n % d == 0) {
            factors.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    std::uint64_t y = seed, c = seed + 1, g = 1, q = 1, x = 0, ys = 0;
    constexpr std::uint64_t block = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        for (std::uint64_t k = 0; k < r && g == 1; k += block) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void pollard_split(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (std::uint64_t p = 2; p < 1000; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            pollard_split(n / p, out);
            return;
        }
    }
    for (std::uint64_t seed = 2;; ++seed) {
        const std::uint64_t d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            pollard_split(d, out);
            pollard_split(n / d, out);
            return;
        }
    }
}

} // namespace

std::vector<std::uint64_t> factor_pollard_rho(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    pollard_split(n, factors);
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<std::uint64_t> factor_default(std::uint64_t n) {
    return n <= kTrialDivisionLimit ? factor_trial_division(n) : factor_pollard_rho(n);
}

Modulus Modulus::from_primes(std::vector<std::uint64_t> primes) {
    if (primes.empty()) throw Error(ErrorKind::UnitModulus, "modulus must have at least one odd prime factor");
    std::uint64_t m = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (p == 2) throw Error(ErrorKind::EvenModulus, "prime list contains 2");
        if (!is_prime(p)) throw Error(ErrorKind::DomainError, std::to_string(p) + " is not prime");
        if (i > 0 && primes[i - 1] >= p) {
            if (primes[i - 1] == p) throw Error(ErrorKind::NotSquarefree, "repeated prime " + std::to_string(p));
            throw Error(ErrorKind::DomainError, "primes must be strictly increasing");
        }
        if (m > kMaxModulus / p) throw Error(ErrorKind::ModulusOverflow, "modulus exceeds 2^63-1");
        m *= p;
    }
    return Modulus(m, std::move(primes));
}

bool Modulus::all_primes_1_mod_4() const noexcept {
    return std::all_of(primes_.begin(), primes_.end(), [](std::uint64_t p) { return p % 4 == 1; });
}

bool Modulus::all_primes_3_mod_4() const noexcept {
    return std::all_of(primes_.begin(), primes_.end(), [](std::uint64_t p) { return p % 4 == 3; });
}

Modulus factor_squarefree(std::uint64_t m, const FactorStrategy& strategy) {
    if (m > kMaxModulus) throw Error(ErrorKind::ModulusOverflow, "modulus exceeds 2^63-1");
    if (m == 0) throw Error(ErrorKind::DomainError, "modulus must be positive");
    if (m == 1) throw Error(ErrorKind::UnitModulus, "m = 1 has no prime factors");
    if (m % 2 == 0) throw Error(ErrorKind::EvenModulus, std::to_string(m) + " is even");
    std::vector<std::uint64_t> primes = strategy(m);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 1; i < primes.size(); ++i) {
        if (primes[i] == primes[i - 1]) {
            throw Error(ErrorKind::NotSquarefree,
                        std::to_string(primes[i]) + "^2 divides " + std::to_string(m));
        }
    }
    return Modulus::from_primes(std::move(primes));
}

std::uint64_t drop_even_part(std::uint64_t m) {
    if (m == 0) return 0;
    while (m % 2 == 0) m /= 2;
    return m;
}

Residue crt_combine(std::span<const CrtComponent> components) {
    std::uint64_t x = 0, modulus = 1;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto [r, p] = components[i];
        if (p < 2) throw Error(ErrorKind::DomainError, "CRT modulus must be at least 2");
        if (r >= p) throw Error(ErrorKind::DomainError, "residue " + std::to_string(r) + " not reduced mod " + std::to_string(p));
        for (std::size_t j = 0; j < i; ++j) {
            if (components[j].prime == p) throw Error(ErrorKind::DuplicatePrime, "prime " + std::to_string(p) + " repeated");
        }
        if (std::gcd(modulus, p) != 1) throw Error(ErrorKind::NonCoprime, "CRT moduli are not pairwise coprime");
        if (modulus > kMaxModulus / p) throw Error(ErrorKind::ModulusOverflow, "CRT modulus exceeds 2^63-1");
        // x' = x + modulus * t with t = (r - x) * modulus^{-1} (mod p)
        const std::uint64_t diff = (r + p - x % p) % p;
        const std::uint64_t t = mulmod(diff, invmod(modulus % p, p), p);
        x += modulus * t;
        modulus *= p;
    }
    return Residue{x % modulus, modulus};
}

int jacobi(std::int64_t a, const Modulus& m) {
    int result = 1;
    for (std::uint64_t p : m.primes()) {
        result *= legendre(a, p);
        if (result == 0) return 0;
    }
    return result;
}

} // namespace sdf::modarith
