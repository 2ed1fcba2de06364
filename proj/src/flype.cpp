#include "tangles/flype.hpp"

#include <stdexcept>

#include "tangles/skeleton.hpp"

namespace tangles {

BivariateSeries gamma_tilde_template(int order) {
    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, order);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, order);
    const BivariateSeries one = BivariateSeries::constant(Rational(1), order);
    const BivariateSeries lin = one - g + z;  // 1 - g + zeta
    const BivariateSeries disc =
        lin * lin - Rational(8) * z - Rational(8) * (g * g * inverse(one - g));
    return Rational(1, 2) * (one + g - z - sqrt(disc));
}

BivariateSeries h_tilde_check(int order, bool drop_vertex_term) {
    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, order);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, order);
    const BivariateSeries one = BivariateSeries::constant(Rational(1), order);
    const BivariateSeries t = gamma_tilde_template(order);
    const BivariateSeries h = Rational(1, 2) * (t + g + z);
    const BivariateSeries u = h - g;
    BivariateSeries rhs = g + z + u * u * inverse(one - u);
    if (!drop_vertex_term) rhs = rhs + g * t;
    return h - rhs;
}

PowerSeries gamma_tilde_series(int order) {
    const BivariateSeries t = gamma_tilde_template(order);
    const PowerSeries blob_kernel = zeta_of_gamma(order);
    PowerSeries cur(order);
    // One pass costs four trusted orders of headroom, so the bound below
    // leaves slack for any order.
    const int max_passes = order + 2;
    for (int pass = 0; pass < max_passes; ++pass) {
        PowerSeries next = substitute(t, compose(blob_kernel, cur));
        if (next == cur) return cur;
        cur = next;
    }
    throw std::runtime_error("fixed point iteration did not converge");
}

PowerSeries f1_tilde_series(int order) {
    const PowerSeries gt = gamma_tilde_series(order);
    PowerSeries f(order);
    for (int n = 1; n <= order; ++n) f.at(n) = gt[n - 1] / Rational(2 * n);
    return f;
}

AsymptoticConstants tangle_asymptotics() {
    // The template quadratic at (T, zeta) = (1/4, 1/540), cleared of the
    // 1/(1-g) pole, collapses to 135 g^2 + 101 g - 20 = 0.
    const auto roots = solve_quadratic(Rational(135), Rational(101), Rational(-20));
    AlgebraicValue radius;
    int found = 0;
    for (const AlgebraicValue& r : {roots.first, roots.second}) {
        if (r.sign() > 0 && (r + AlgebraicValue(Rational(-1, 4))).sign() < 0) {
            radius = r;
            ++found;
        }
    }
    if (found != 1) throw std::runtime_error("no root in physical interval");
    AsymptoticConstants c;
    c.radius = radius;
    c.growth = radius.inverse();
    c.exponent = Rational(-7, 2);
    return c;
}

FlypeSeries flype_series(int order) {
    FlypeSeries f;
    f.order = order;
    f.gamma_tilde_template = gamma_tilde_template(order);
    const BivariateSeries g = BivariateSeries::monomial(Rational(1), 1, 0, order);
    const BivariateSeries z = BivariateSeries::monomial(Rational(1), 0, 1, order);
    f.h_tilde = Rational(1, 2) * (f.gamma_tilde_template + g + z);
    f.gamma_tilde = gamma_tilde_series(order);
    f.zeta_tilde = compose(zeta_of_gamma(order), f.gamma_tilde);
    f.f1_tilde = f1_tilde_series(order);
    return f;
}

}  // namespace tangles
