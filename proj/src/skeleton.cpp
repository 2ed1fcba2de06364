#include "tangles/skeleton.hpp"

#include <stdexcept>

#include "tangles/matrix_model.hpp"

namespace tangles {

namespace {

// sqrt of a nonnegative rational as an exact surd.
AlgebraicValue sqrt_rational(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("square root of negative value");
    const mpz_class d = x.num() * x.den();
    return AlgebraicValue::surd(Rational(0), Rational(mpz_class(1), x.den()), d);
}

}  // namespace

PowerSeries d_series(const PowerSeries& gamma) {
    if (!gamma[0].is_zero()) throw std::domain_error("inner constant term nonzero");
    return div(gamma * (-gamma + Rational(1)), gamma + Rational(1));
}

std::pair<PowerSeries, PowerSeries> h_v_series(const PowerSeries& gamma, const PowerSeries& D) {
    const PowerSeries H = Rational(1, 2) * (gamma + D);
    const PowerSeries residual = H - D - div(H * H, -H + Rational(1));
    if (!residual.is_zero()) throw std::domain_error("channel decomposition inconsistent");
    return {H, H};
}

PowerSeries template_kernel(int order) {
    // K(s) = (1 - s - sqrt(1 - 6s + s^2)) / 2
    const PowerSeries s = PowerSeries::identity(order);
    const PowerSeries disc =
        PowerSeries::monomial(Rational(1), 2, order) - Rational(6) * s + Rational(1);
    return Rational(1, 2) * (-s - sqrt(disc) + Rational(1));
}

BivariateSeries gamma_template(int order) {
    // The closed form is a function of s = g + zeta alone, so the bivariate
    // coefficients are kernel coefficients spread binomially.
    const PowerSeries kernel = template_kernel(order);
    BivariateSeries t(order);
    for (int d = 1; d <= order; ++d) {
        const Rational& ck = kernel[d];
        if (ck.is_zero()) continue;
        for (int n = 0; n <= d; ++n)
            t.at(d - n, n) = Rational::binomial(static_cast<unsigned long>(d),
                                                static_cast<unsigned long>(n)) *
                             ck;
    }
    return t;
}

BivariateSeries gamma_template_direct(int order) {
    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, order);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, order);
    const BivariateSeries one = BivariateSeries::constant(Rational(1), order);
    const BivariateSeries lin = one - g - z;
    const BivariateSeries disc = lin * lin - Rational(4) * (g + z);
    return Rational(1, 2) * (lin - sqrt(disc));
}

PowerSeries g_of_gamma(int order) {
    const PowerSeries gm = PowerSeries::identity(order);
    const PowerSeries one_minus = -Rational(4) * gm + Rational(1);
    const PowerSeries three_halves = one_minus * sqrt(one_minus);
    const PowerSeries num = -Rational(2) * (gm * gm) + Rational(10) * gm - three_halves + Rational(1);
    const PowerSeries gp2 = gm + Rational(2);
    return Rational(1, 2) * div(num, gp2 * gp2 * gp2);
}

PowerSeries zeta_of_gamma(int order) {
    const PowerSeries gm = PowerSeries::identity(order);
    return Rational(-2) * div(PowerSeries::constant(Rational(1), order), gm + Rational(1)) -
           gm - g_of_gamma(order) + Rational(2);
}

AlgebraicValue g_of_gamma_at(const Rational& gamma) {
    const Rational one_minus = Rational(1) - Rational(4) * gamma;
    const AlgebraicValue three_halves = AlgebraicValue(one_minus) * sqrt_rational(one_minus);
    const Rational gp2 = gamma + Rational(2);
    const Rational pref = Rational(1, 2) / gp2.pow(3);
    const AlgebraicValue num =
        AlgebraicValue(Rational(1) + Rational(10) * gamma - Rational(2) * gamma * gamma) +
        (-three_halves);
    return AlgebraicValue(pref) * num;
}

AlgebraicValue zeta_of_gamma_at(const Rational& gamma) {
    const Rational rational_part =
        Rational(-2) / (Rational(1) + gamma) + Rational(2) - gamma;
    return AlgebraicValue(rational_part) + (-g_of_gamma_at(gamma));
}

PowerSeries dressing_check(int order) {
    const PowerSeries gamma = renormalized_model(order).gamma;
    const PowerSeries zeta = d_series(gamma) - PowerSeries::identity(order);
    return gamma - substitute(gamma_template(order), zeta);
}

std::pair<PowerSeries, PowerSeries> eta_system_check(int order) {
    const RenormalizedModel m = renormalized_model(order);
    const PowerSeries eta = -m.a2 + Rational(1);
    const PowerSeries three_plus = eta + Rational(3);
    const PowerSeries coupling =
        PowerSeries::monomial(Rational(27), 1, order) + eta * (three_plus * three_plus);
    const PowerSeries gamma_res =
        m.gamma + div(eta * (Rational(2) * eta + Rational(3)), three_plus * three_plus);
    return {coupling, gamma_res};
}

SkeletonSeries skeleton_series(int order) {
    SkeletonSeries s;
    s.order = order;
    const PowerSeries gamma = renormalized_model(order).gamma;
    s.D = d_series(gamma);
    s.zeta = s.D - PowerSeries::identity(order);
    const auto hv = h_v_series(gamma, s.D);
    s.H = hv.first;
    s.V = hv.second;
    s.gamma_template = gamma_template(order);
    s.g_of_gamma = g_of_gamma(order);
    s.zeta_of_gamma = zeta_of_gamma(order);
    return s;
}

}  // namespace tangles
