#include <stdexcept>

#include "doctest.h"
#include "tangles/flype.hpp"
#include "tangles/matrix_model.hpp"
#include "tangles/skeleton.hpp"

using tangles::AlgebraicValue;
using tangles::BivariateSeries;
using tangles::PowerSeries;
using tangles::Rational;

TEST_CASE("flype template solves its quadratic") {
    const int N = 9;
    const BivariateSeries t = tangles::gamma_tilde_template(N);
    CHECK(t.coeff(0, 0).is_zero());
    CHECK(t.coeff(1, 0) == Rational(1));
    CHECK(t.coeff(0, 1) == Rational(1));

    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, N);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, N);
    const BivariateSeries one = BivariateSeries::constant(Rational(1), N);
    const BivariateSeries residual =
        t * t - (one + g - z) * t + z + g * (one + g) * tangles::inverse(one - g);
    CHECK(residual.is_zero());
}

TEST_CASE("flype classes never exceed raw skeleton counts") {
    const int N = 9;
    const BivariateSeries full = tangles::gamma_template(N);
    const BivariateSeries classes = tangles::gamma_tilde_template(N);
    for (int d = 0; d <= N; ++d)
        for (int n = 0; n <= d; ++n) {
            CHECK(classes.coeff(d - n, n) <= full.coeff(d - n, n));
            CHECK(classes.coeff(d - n, n).is_integer());
            CHECK(classes.coeff(d - n, n).sign() >= 0);
        }
}

TEST_CASE("horizontal channel identity for flype classes") {
    CHECK(tangles::h_tilde_check(10).is_zero());
    CHECK_FALSE(tangles::h_tilde_check(10, /*drop_vertex_term=*/true).is_zero());
}

TEST_CASE("tangle classes by crossing number") {
    const int N = 7;
    const PowerSeries gt = tangles::gamma_tilde_series(N);
    const long expected[] = {0, 1, 2, 4, 10, 29, 98, 372};
    for (int k = 0; k <= N; ++k) CHECK(gt[k] == Rational(expected[k]));

    // self-consistency: gamma_tilde = template{g, zeta[gamma_tilde]}
    const PowerSeries zt = tangles::compose(tangles::zeta_of_gamma(N), gt);
    CHECK(gt == tangles::substitute(tangles::gamma_tilde_template(N), zt));

    // identification only merges: classes are bounded by tangles
    const PowerSeries gamma = tangles::renormalized_model(N).gamma;
    for (int k = 0; k <= N; ++k) CHECK(gt[k] <= gamma[k]);
    CHECK(gt[1] == gamma[1]);
    CHECK(gt[2] == gamma[2]);
    CHECK(gamma[3] - gt[3] == Rational(2));
}

TEST_CASE("link classes carry the 1/(2n) weighting") {
    const int N = 8;
    const PowerSeries f = tangles::f1_tilde_series(N);
    const PowerSeries gt = tangles::gamma_tilde_series(N);
    CHECK(f[0].is_zero());
    CHECK(f[1].is_zero());
    for (int n = 2; n <= N; ++n) CHECK(f[n] == gt[n - 1] / Rational(2 * n));
    CHECK(f[2] == Rational(1, 4));
    CHECK(f[3] == Rational(1, 3));
    CHECK(f[4] == Rational(1, 2));
    CHECK(f[5] == Rational(1));
}

TEST_CASE("tangle class asymptotics") {
    const tangles::AsymptoticConstants c = tangles::tangle_asymptotics();
    CHECK(c.radius == AlgebraicValue::surd(Rational(-101, 270), Rational(1, 270), 21001));
    CHECK(c.growth == AlgebraicValue::surd(Rational(101, 40), Rational(1, 40), 21001));
    CHECK(c.radius * c.growth == AlgebraicValue(Rational(1)));
    CHECK(c.exponent == Rational(-7, 2));
    CHECK(c.growth.decimal(6) == "6.147930");

    // the radius is a root of the discriminant quadratic
    const AlgebraicValue quad =
        c.radius * c.radius * Rational(135) + c.radius * Rational(101);
    CHECK(quad == AlgebraicValue(Rational(20)));

    // structural inequality: identification cannot shrink the radius below
    // the unrestricted one
    CHECK(c.growth.approx() < tangles::link_asymptotics().growth.approx());
}

TEST_CASE("bundle is self-consistent") {
    const tangles::FlypeSeries f = tangles::flype_series(8);
    CHECK(f.order == 8);
    CHECK(f.gamma_tilde == tangles::gamma_tilde_series(8));
    CHECK(f.f1_tilde == tangles::f1_tilde_series(8));
    CHECK(f.zeta_tilde == tangles::compose(tangles::zeta_of_gamma(8), f.gamma_tilde));
    CHECK(f.gamma_tilde_template == tangles::gamma_tilde_template(8));
    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, 8);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, 8);
    CHECK(Rational(2) * f.h_tilde == f.gamma_tilde_template + g + z);
}
