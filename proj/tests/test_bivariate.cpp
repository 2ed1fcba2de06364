#include <stdexcept>

#include "doctest.h"
#include "tangles/bivariate_series.hpp"

using tangles::BivariateSeries;
using tangles::PowerSeries;
using tangles::Rational;

namespace {
BivariateSeries g_var(int order) {
    return BivariateSeries::monomial(Rational(1), 1, 0, order);
}
BivariateSeries z_var(int order) {
    return BivariateSeries::monomial(Rational(1), 0, 1, order);
}
}  // namespace

TEST_CASE("layout and factories") {
    const int N = 5;
    const BivariateSeries m = BivariateSeries::monomial(Rational(7), 2, 1, N);
    CHECK(m.order() == N);
    CHECK(m.coeff(2, 1) == Rational(7));
    CHECK(m.coeff(1, 2).is_zero());
    CHECK(BivariateSeries::constant(Rational(3), N).coeff(0, 0) == Rational(3));
    CHECK_THROWS_AS(BivariateSeries::monomial(Rational(1), 4, 2, N), std::out_of_range);

    PowerSeries f = PowerSeries::identity(N);
    const BivariateSeries e = BivariateSeries::from_univariate(f, N);
    CHECK(e.coeff(1, 0) == Rational(1));
    CHECK(e.coeff(0, 1).is_zero());
    CHECK_THROWS_AS(BivariateSeries::from_univariate(PowerSeries::identity(2), 5),
                    std::domain_error);
}

TEST_CASE("products expand correctly") {
    const int N = 6;
    const BivariateSeries s = g_var(N) + z_var(N) + Rational(1);
    const BivariateSeries sq = s * s;
    CHECK(sq.coeff(0, 0) == Rational(1));
    CHECK(sq.coeff(1, 0) == Rational(2));
    CHECK(sq.coeff(0, 1) == Rational(2));
    CHECK(sq.coeff(1, 1) == Rational(2));
    CHECK(sq.coeff(2, 0) == Rational(1));
    CHECK(sq.coeff(0, 2) == Rational(1));
    CHECK(sq.coeff(2, 1).is_zero());
    CHECK((s - s).is_zero());
    CHECK(Rational(2) * s == s + s);
}

TEST_CASE("binary operations keep the minimum trusted order") {
    const BivariateSeries a = BivariateSeries::constant(Rational(1), 7);
    const BivariateSeries b = g_var(4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK(a.truncated(3).order() == 3);
    CHECK_THROWS_WITH_AS(b.truncated(9), "cannot extend trusted order", std::domain_error);
}

TEST_CASE("inverse of 1-g-zeta has binomial coefficients") {
    const int N = 7;
    const BivariateSeries f = -g_var(N) - z_var(N) + Rational(1);
    const BivariateSeries inv = tangles::inverse(f);
    for (int d = 0; d <= N; ++d)
        for (int n = 0; n <= d; ++n)
            CHECK(inv.coeff(d - n, n) == Rational::binomial(d, n));
    CHECK((f * inv) == BivariateSeries::constant(Rational(1), N));
    CHECK(tangles::div(g_var(N), f).coeff(2, 1) == Rational(2));
    CHECK_THROWS_WITH_AS(tangles::inverse(g_var(3)), "not invertible", std::domain_error);
}

TEST_CASE("square root") {
    const int N = 6;
    const BivariateSeries f = g_var(N) + z_var(N) + Rational(1);
    CHECK(tangles::sqrt(f * f) == f);
    const BivariateSeries s = tangles::sqrt(f);
    CHECK(s * s == f);
    CHECK(s.coeff(0, 0) == Rational(1));
    CHECK(s.coeff(1, 0) == Rational(1, 2));
    CHECK(s.coeff(2, 0) == Rational(-1, 8));
    CHECK_THROWS_WITH_AS(tangles::sqrt(Rational(2) * f), "constant term not a rational square",
                         std::domain_error);
}

TEST_CASE("substitution collapses to a univariate series") {
    const int N = 8;
    // B = 1/(1-g-zeta), zeta = g^2: expect 1/(1-g-g^2), Fibonacci
    const BivariateSeries b = tangles::inverse(-g_var(N) - z_var(N) + Rational(1));
    PowerSeries z = PowerSeries::identity(N);
    z = z * z;
    const PowerSeries fib = tangles::substitute(b, z);
    CHECK(fib.order() == N);
    const long f[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int k = 0; k <= N; ++k) CHECK(fib[k] == Rational(f[k]));

    // order is capped by the inner series
    CHECK(tangles::substitute(b, PowerSeries::identity(4)).order() == 4);
    CHECK_THROWS_WITH_AS(tangles::substitute(b, PowerSeries::constant(Rational(1), N)),
                         "inner constant term nonzero", std::domain_error);
}

TEST_CASE("substituting zero keeps the pure-g part") {
    const int N = 5;
    const BivariateSeries b =
        g_var(N) + Rational(3) * z_var(N) + BivariateSeries::monomial(Rational(5), 2, 2, N);
    const PowerSeries axis = tangles::substitute(b, PowerSeries(N));
    CHECK(axis[1] == Rational(1));
    for (int k = 2; k <= N; ++k) CHECK(axis[k].is_zero());
}
