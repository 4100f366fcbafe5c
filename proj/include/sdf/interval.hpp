#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmp.h>
#include <mpfr.h>

namespace sdf {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward, so every
/// operation returns an enclosure of the exact real result.
class Interval {
public:
    static constexpr mpfr_prec_t kPrecision = 256;  // ~77 decimal digits

    Interval();
    explicit Interval(std::int64_t value);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval from_u64(std::uint64_t value);
    /// Tight enclosure of a decimal literal such as "1.13".
    static Interval from_decimal(std::string_view text);
    static Interval from_mpz(mpz_srcptr value);
    /// Exact point interval of a double.
    static Interval from_double(double value);

    const mpfr_t& lo() const noexcept { return lo_; }
    const mpfr_t& hi() const noexcept { return hi_; }

    /// Endpoints rounded outward to double.
    double lower_double() const;
    double upper_double() const;
    /// Decimal rendering of an endpoint, rounded in the safe direction.
    std::string upper_string(int digits = 40) const;
    std::string lower_string(int digits = 40) const;

    bool positive() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// b must not contain 0.
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval& operator+=(const Interval& b) { return *this = *this + b; }
    Interval& operator*=(const Interval& b) { return *this = *this * b; }

    /// Certified comparisons: true only when every point of a lies below every point of b.
    friend bool certainly_less(const Interval& a, const Interval& b);
    friend bool certainly_less_equal(const Interval& a, const Interval& b);

    friend Interval sqrt(const Interval& x);
    friend Interval pow(const Interval& x, double e);
    friend Interval pow(const Interval& x, const Interval& e);
    friend Interval min(const Interval& a, const Interval& b);
    friend Interval max(const Interval& a, const Interval& b);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval sqrt(const Interval& x);
/// x^e for x > 0 and an exponent e exactly representable in binary (e.g. -1/4, 0.75 n).
Interval pow(const Interval& x, double e);
/// x^e for x > 0 and an interval exponent.
Interval pow(const Interval& x, const Interval& e);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

} // namespace sdf
