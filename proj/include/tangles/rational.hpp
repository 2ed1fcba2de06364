#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tangles {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. All arithmetic is exact; there is no rounding
/// anywhere in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpz_class num) : v_(std::move(num)) {}
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpq_class v);

    /// Parses "p" or "p/q". Throws std::invalid_argument on garbage.
    static Rational from_string(const std::string& s);

    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned long e) const;

    /// True iff the value is the square of a rational; if so *root is set to
    /// the nonnegative square root.
    bool exact_sqrt(Rational* root) const;

    /// Lowest-terms rendering: "6", "-1/2".
    std::string str() const;

    /// Fixed-point decimal with `digits` fractional digits, rounded to
    /// nearest (ties away from zero is irrelevant here; ties round up).
    std::string decimal(int digits) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Renders scaled/10^digits with a decimal point, e.g. (6750000, 6) -> "6.750000".
std::string format_scaled_decimal(const mpz_class& scaled, int digits);

}  // namespace tangles
