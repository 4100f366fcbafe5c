#include "sdf/interval.hpp"

#include <stdexcept>
#include <string>

namespace sdf {

Interval::Interval() {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(std::int64_t value) : Interval() {
    mpfr_set_sj(lo_, value, MPFR_RNDD);
    mpfr_set_sj(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval() {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval() {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_u64(std::uint64_t value) {
    Interval r;
    mpfr_set_uj(r.lo_, value, MPFR_RNDD);
    mpfr_set_uj(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(std::string_view text) {
    const std::string s(text);
    Interval r;
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 || mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
        throw std::invalid_argument("not a decimal number: " + s);
    }
    return r;
}

Interval Interval::from_mpz(mpz_srcptr value) {
    Interval r;
    mpfr_set_z(r.lo_, value, MPFR_RNDD);
    mpfr_set_z(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double value) {
    Interval r;
    mpfr_set_d(r.lo_, value, MPFR_RNDD);
    mpfr_set_d(r.hi_, value, MPFR_RNDU);
    return r;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {

std::string render(const mpfr_t x, int digits, char mode) {
    char* buffer = nullptr;
    const std::string format = std::string("%.*R") + mode + "g";
    mpfr_asprintf(&buffer, format.c_str(), digits, x);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

} // namespace

std::string Interval::upper_string(int digits) const { return render(hi_, digits, 'U'); }
std::string Interval::lower_string(int digits) const { return render(lo_, digits, 'D'); }

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }

Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r;
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    mpfr_t t;
    mpfr_init2(t, Interval::kPrecision);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw std::domain_error("interval division by an interval containing 0");
    Interval inv;
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
bool certainly_less_equal(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }

Interval sqrt(const Interval& x) {
    if (mpfr_sgn(x.lo()) < 0) throw std::domain_error("sqrt of an interval with negative part");
    Interval r;
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

Interval pow(const Interval& x, double e) {
    if (mpfr_sgn(x.lo()) < 0 || (e < 0 && mpfr_sgn(x.lo()) == 0)) throw std::domain_error("pow of a non-positive interval");
    mpfr_t exponent;
    mpfr_init2(exponent, 64);
    mpfr_set_d(exponent, e, MPFR_RNDN);  // callers pass dyadic exponents, so this is exact
    Interval r;
    if (e >= 0) {
        mpfr_pow(r.lo_, x.lo_, exponent, MPFR_RNDD);
        mpfr_pow(r.hi_, x.hi_, exponent, MPFR_RNDU);
    } else {
        mpfr_pow(r.lo_, x.hi_, exponent, MPFR_RNDD);
        mpfr_pow(r.hi_, x.lo_, exponent, MPFR_RNDU);
    }
    mpfr_clear(exponent);
    return r;
}

Interval pow(const Interval& x, const Interval& e) {
    if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("pow of a non-positive interval");
    // x^e is monotone in each argument, so the extremes sit at the corners.
    Interval r;
    mpfr_t t;
    mpfr_init2(t, Interval::kPrecision);
    const mpfr_srcptr xs[2] = {x.lo_, x.hi_};
    const mpfr_srcptr es[2] = {e.lo_, e.hi_};
    bool first = true;
    for (auto base : xs) {
        for (auto exponent : es) {
            mpfr_pow(t, base, exponent, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_pow(t, base, exponent, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval max(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval min(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

} // namespace sdf
