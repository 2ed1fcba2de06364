#include <stdexcept>

#include "doctest.h"
#include "tangles/matrix_model.hpp"
#include "tangles/skeleton.hpp"

using tangles::AlgebraicValue;
using tangles::BivariateSeries;
using tangles::PowerSeries;
using tangles::Rational;

TEST_CASE("two-particle-irreducible blob series") {
    const PowerSeries gamma = tangles::renormalized_model(8).gamma;
    const PowerSeries d = tangles::d_series(gamma);
    const long expected[] = {0, 1, 0, 0, 0, 1, 10, 74, 492};
    for (int k = 0; k <= 8; ++k) CHECK(d[k] == Rational(expected[k]));

    // defining relation D (1 + Gamma) = Gamma (1 - Gamma)
    CHECK(d * (gamma + Rational(1)) == gamma * (-gamma + Rational(1)));
    CHECK_THROWS_WITH_AS(tangles::d_series(PowerSeries::constant(Rational(1), 4)),
                         "inner constant term nonzero", std::domain_error);
}

TEST_CASE("channel halves") {
    const PowerSeries gamma = tangles::renormalized_model(8).gamma;
    const PowerSeries d = tangles::d_series(gamma);
    const auto hv = tangles::h_v_series(gamma, d);
    CHECK(hv.first == hv.second);
    CHECK(Rational(2) * hv.first == gamma + d);
    // H = D + H^2/(1-H) must hold; a foreign D is rejected
    const PowerSeries bad = d + PowerSeries::monomial(Rational(1), 2, 8);
    CHECK_THROWS_WITH_AS(tangles::h_v_series(gamma, bad), "channel decomposition inconsistent",
                         std::domain_error);
}

TEST_CASE("template kernel is the large Schroeder series") {
    const PowerSeries k = tangles::template_kernel(7);
    const long schroeder[] = {0, 1, 2, 6, 22, 90, 394, 1806};
    for (int p = 0; p <= 7; ++p) CHECK(k[p] == Rational(schroeder[p]));
    // K^2 + (s-1)K + s = 0 termwise
    const PowerSeries s = PowerSeries::identity(7);
    CHECK((k * k + (s - Rational(1)) * k + s).is_zero());
}

TEST_CASE("skeleton template spreads the kernel binomially") {
    const int N = 8;
    const BivariateSeries t = tangles::gamma_template(N);
    const PowerSeries k = tangles::template_kernel(N);
    for (int d = 0; d <= N; ++d)
        for (int n = 0; n <= d; ++n)
            CHECK(t.coeff(d - n, n) == Rational::binomial(d, n) * k[d]);
    CHECK(t == tangles::gamma_template_direct(N));
}

TEST_CASE("closed-form inverse of the tangle series") {
    const int N = 10;
    const PowerSeries inv = tangles::g_of_gamma(N);
    const long expected[] = {0, 1, -2, 2, -2, 1, -2, -2, -8, -22, -68};
    for (int k = 0; k <= N; ++k) CHECK(inv[k] == Rational(expected[k]));
    CHECK(inv == tangles::reversion(tangles::renormalized_model(N).gamma));
}

TEST_CASE("fully irreducible skeletons by blob count") {
    const int N = 10;
    const PowerSeries z = tangles::zeta_of_gamma(N);
    const long expected[] = {0, 0, 0, 0, 0, 1, 0, 4, 6, 24, 66};
    for (int k = 0; k <= N; ++k) CHECK(z[k] == Rational(expected[k]));
    CHECK(z.valuation() == 5);
    for (int k = 0; k <= N; ++k) CHECK(z[k].is_integer());
}

TEST_CASE("exact evaluation at the kernel singularity") {
    CHECK(tangles::g_of_gamma_at(Rational(1, 4)) == AlgebraicValue(Rational(4, 27)));
    CHECK(tangles::zeta_of_gamma_at(Rational(1, 4)) == AlgebraicValue(Rational(1, 540)));
    // generic point keeps its radical
    CHECK_FALSE(tangles::g_of_gamma_at(Rational(1, 8)).is_rational());
}

TEST_CASE("dressing identity") {
    CHECK(tangles::dressing_check(12).is_zero());

    // the identity is sharp: corrupting zeta at order five must show at order five
    const PowerSeries gamma = tangles::renormalized_model(12).gamma;
    const PowerSeries zeta =
        tangles::d_series(gamma) - PowerSeries::identity(12) +
        PowerSeries::monomial(Rational(1), 5, 12);
    const PowerSeries residual =
        gamma - tangles::substitute(tangles::gamma_template(12), zeta);
    CHECK_FALSE(residual.is_zero());
    CHECK(residual.valuation() == 5);
}

TEST_CASE("parametric system in eta") {
    const auto res = tangles::eta_system_check(12);
    CHECK(res.first.is_zero());
    CHECK(res.second.is_zero());
}

TEST_CASE("bundle is self-consistent") {
    const tangles::SkeletonSeries s = tangles::skeleton_series(9);
    CHECK(s.order == 9);
    CHECK(s.zeta == s.D - PowerSeries::identity(9));
    CHECK(s.H == s.V);
    CHECK(s.g_of_gamma == tangles::g_of_gamma(9));
    CHECK(s.zeta_of_gamma == tangles::zeta_of_gamma(9));
    CHECK(s.gamma_template == tangles::gamma_template(9));
}
