#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tangles/rational.hpp"

namespace tangles {

/// Truncated univariate formal power series with exact rational
/// coefficients. A series carries the order through which its coefficients
/// are trusted; terms beyond that are unknown, not zero. Binary operations
/// return the minimum of the input orders; composition-like operations
/// compute the exact provable order of the result, so a coefficient is
/// never reported unless it is fully determined by the inputs.
class PowerSeries {
public:
    PowerSeries() : c_(1) {}
    explicit PowerSeries(int order) : c_(order + 1) {}
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& value, int order);
    /// The series g (coefficient 1 in degree 1).
    static PowerSeries identity(int order);
    static PowerSeries monomial(const Rational& value, int degree, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Rational& at(int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Degree of the first nonzero known coefficient; order()+1 if none.
    int valuation() const;

    PowerSeries truncated(int new_order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
    friend PowerSeries operator+(const PowerSeries& a, const Rational& s);
    friend PowerSeries operator-(const PowerSeries& a, const Rational& s);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    std::string str(const std::string& var = "g") const;
    friend std::ostream& operator<<(std::ostream& os, const PowerSeries& f);

private:
    std::vector<Rational> c_;  // size order+1
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// Exact quotient. Requires the divisor's lowest known coefficient at some
/// degree v with the dividend vanishing below v; the result has order
/// min(order(a), order(b)) - v. Throws std::domain_error("division by zero
/// series") or ("valuation mismatch").
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// f(h) for h with zero constant term. Result order is
/// min(order(h), val(h) * (order(f) + 1) - 1).
PowerSeries compose(const PowerSeries& f, const PowerSeries& h);

/// Compositional inverse of f with f(0)=0, f'(0)!=0; same order as f.
PowerSeries reversion(const PowerSeries& f);

/// Square root with positive constant term; requires f(0) to be the square
/// of a rational.
PowerSeries sqrt(const PowerSeries& f);

/// Logarithm of a series with constant term 1.
PowerSeries log(const PowerSeries& f);

/// Exponential of a series with zero constant term.
PowerSeries exp(const PowerSeries& f);

/// Termwise derivative; order drops by one.
PowerSeries derivative(const PowerSeries& f);

/// Antiderivative with zero constant term; order rises by one.
PowerSeries antiderivative(const PowerSeries& f);

/// Unique series root y(g) of P(y) = sum_i poly[i] * y^i with y(0) = seed,
/// for a simple root of the constant-term polynomial; solved by Newton
/// iteration on series. Result order is the minimum coefficient order.
/// Throws std::domain_error("seed not a root") / ("degenerate root").
PowerSeries solve_algebraic(const std::vector<PowerSeries>& poly, const Rational& seed);

}  // namespace tangles
