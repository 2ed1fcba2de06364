#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "tangles/rational.hpp"

namespace tangles {

/// Exact value of the form (p + q*sqrt(d)) / r with integer p, q, d, r.
/// Canonical form: r > 0, gcd(p, q, r) = 1, square factors pulled out of d,
/// and q = 0 implies d = 0 (a plain rational). Covers every growth radius
/// and growth constant in this library.
class AlgebraicValue {
public:
    AlgebraicValue() : p_(0), q_(0), d_(0), r_(1) {}
    AlgebraicValue(const Rational& v);  // NOLINT: implicit by design

    /// a + b*sqrt(d), d >= 0.
    static AlgebraicValue surd(const Rational& a, const Rational& b, const mpz_class& d);

    bool is_rational() const { return q_ == 0; }
    Rational rational_part() const { return Rational(p_, r_); }
    /// Throws std::domain_error if the value is irrational.
    Rational as_rational() const;

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const mpz_class& d() const { return d_; }
    const mpz_class& r() const { return r_; }

    AlgebraicValue operator-() const;
    /// Product; both operands must be rational or share the same radicand.
    AlgebraicValue operator*(const AlgebraicValue& o) const;
    AlgebraicValue operator+(const AlgebraicValue& o) const;
    /// Exact reciprocal (rationalizes the denominator).
    AlgebraicValue inverse() const;

    friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b);
    friend bool operator!=(const AlgebraicValue& a, const AlgebraicValue& b) { return !(a == b); }

    int sign() const;
    double approx() const;

    /// "4/27", "27/4", "(-101+sqrt(21001))/270".
    std::string str() const;
    /// Exact decimal rendering to `digits` fractional digits, round to nearest.
    std::string decimal(int digits) const;

    friend std::ostream& operator<<(std::ostream& os, const AlgebraicValue& v);

private:
    void normalize();
    mpz_class p_, q_, d_, r_;
};

/// Both exact roots of A*x^2 + B*x + C = 0 (A != 0), smaller-approx first.
std::pair<AlgebraicValue, AlgebraicValue> solve_quadratic(const Rational& A, const Rational& B,
                                                          const Rational& C);

/// Growth data for a counting sequence f_n ~ const * growth^n * n^exponent.
struct AsymptoticConstants {
    AlgebraicValue radius;   // singularity of the generating function
    AlgebraicValue growth;   // reciprocal of the radius
    Rational exponent;       // -7/2 for all families here
};

}  // namespace tangles
