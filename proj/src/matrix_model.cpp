#include "tangles/matrix_model.hpp"

#include <stdexcept>
#include <vector>

namespace tangles {

BareModel bare_model(int order) {
    BareModel m;
    m.order = order;
    // a^2 is the branch of 3g y^2 - y + 1 = 0 with y(0) = 1.
    const std::vector<PowerSeries> poly = {
        PowerSeries::constant(Rational(1), order),
        PowerSeries::constant(Rational(-1), order),
        PowerSeries::monomial(Rational(3), 1, order),
    };
    m.a2 = solve_algebraic(poly, Rational(1));
    const PowerSeries a2 = m.a2;
    const PowerSeries a4 = a2 * a2;
    m.free_energy = Rational(1, 2) * log(a2) -
                    Rational(1, 24) * ((a2 - Rational(1)) * (-a2 + Rational(9)));
    m.two_point = Rational(1, 3) * (a2 * (-a2 + Rational(4)));
    m.four_point = a4 * (-a2 + Rational(3));
    m.four_point_conn = m.four_point - Rational(2) * (m.two_point * m.two_point);
    return m;
}

Rational closed_form_f_coeff(unsigned long p) {
    if (p == 0) throw std::domain_error("closed form starts at order 1");
    // 3^p (2p-1)! / (p! (p+2)!)
    return Rational(3).pow(p) * Rational::factorial(2 * p - 1) /
           (Rational::factorial(p) * Rational::factorial(p + 2));
}

RenormalizedModel renormalized_model(int order) {
    RenormalizedModel m;
    m.order = order;
    // gamma = sigma_prime / g loses one order in the division, so build the
    // intermediate series one past the requested order.
    const int n = order + 1;
    const std::vector<PowerSeries> poly = {
        PowerSeries::monomial(Rational(-27), 1, n) + Rational(-16),
        PowerSeries::constant(Rational(24), n),
        PowerSeries::constant(Rational(-9), n),
        PowerSeries::constant(Rational(1), n),
    };
    const PowerSeries a2 = solve_algebraic(poly, Rational(1));
    const PowerSeries alpha = Rational(1, 3) * (a2 * (-a2 + Rational(4)));
    const PowerSeries sigma = alpha - Rational(1);
    const PowerSeries sigma_prime = sigma - PowerSeries::monomial(Rational(2), 1, n);
    m.gamma = div(sigma_prime, PowerSeries::identity(n)).truncated(order);
    m.a2 = a2.truncated(order);
    m.alpha = alpha.truncated(order);
    m.sigma = sigma.truncated(order);
    m.sigma_prime = sigma_prime.truncated(order);
    PowerSeries f1(order);
    for (int k = 2; k <= order; ++k) f1.at(k) = m.sigma_prime[k] / Rational(2 * k);
    m.f1 = f1;
    return m;
}

PowerSeries gamma_closed_form(int order) {
    const PowerSeries a2 = renormalized_model(order).a2;
    const PowerSeries four_minus = -a2 + Rational(4);
    return div(-(a2 - Rational(1)) * (Rational(2) * a2 - Rational(5)),
               four_minus * four_minus);
}

AsymptoticConstants link_asymptotics() {
    AsymptoticConstants c;
    c.radius = AlgebraicValue(Rational(4, 27));
    c.growth = AlgebraicValue(Rational(27, 4));
    c.exponent = Rational(-7, 2);
    return c;
}

}  // namespace tangles
