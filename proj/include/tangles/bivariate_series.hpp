#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tangles/power_series.hpp"
#include "tangles/rational.hpp"

namespace tangles {

/// Truncated series in two variables (g and zeta) with exact rational
/// coefficients, graded and truncated by total degree: all monomials
/// g^m zeta^n with m+n <= order are stored. Binary operations return the
/// minimum of the input orders.
class BivariateSeries {
public:
    BivariateSeries() : order_(0), c_(1) {}
    explicit BivariateSeries(int order);

    static BivariateSeries constant(const Rational& value, int order);
    /// value * g^m zeta^n.
    static BivariateSeries monomial(const Rational& value, int m, int n, int order);
    /// Embeds a univariate series in g; coefficients above `order` are dropped
    /// only if the input carries them (the input must be trusted through
    /// `order`).
    static BivariateSeries from_univariate(const PowerSeries& f, int order);

    int order() const { return order_; }
    const Rational& coeff(int m, int n) const { return c_[index(m, n)]; }
    Rational& at(int m, int n) { return c_[index(m, n)]; }

    bool is_zero() const;

    BivariateSeries truncated(int new_order) const;

    BivariateSeries operator-() const;
    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const Rational& s, const BivariateSeries& a);
    friend BivariateSeries operator+(const BivariateSeries& a, const Rational& s);
    friend BivariateSeries operator-(const BivariateSeries& a, const Rational& s);

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator!=(const BivariateSeries& a, const BivariateSeries& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const BivariateSeries& f);

private:
    size_t index(int m, int n) const;
    int order_;
    std::vector<Rational> c_;  // triangular layout, row by total degree
};

/// Reciprocal of a series with nonzero constant term.
BivariateSeries inverse(const BivariateSeries& f);

/// Quotient a / b for b with nonzero constant term.
BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b);

/// Square root with positive constant term; requires the constant term to be
/// the square of a rational.
BivariateSeries sqrt(const BivariateSeries& f);

/// Replaces the second variable by a univariate series z(g) with z(0) = 0;
/// the result has order min(order(B), order(z)).
PowerSeries substitute(const BivariateSeries& B, const PowerSeries& zeta_of_g);

}  // namespace tangles
