#pragma once

#include "tangles/algebraic.hpp"
#include "tangles/bivariate_series.hpp"
#include "tangles/power_series.hpp"

namespace tangles {

/// Counts after identifying diagrams related by flypes (rotating a tangle
/// about its horizontal axis). Templates gain a corrected vertex/blob
/// weighting; the univariate series solve an implicit equation because the
/// blob content is itself built from flype classes.
struct FlypeSeries {
    int order;
    BivariateSeries gamma_tilde_template;  // flype classes of skeletons
    BivariateSeries h_tilde;               // horizontal channel, diagnostic
    PowerSeries gamma_tilde;               // flype classes of tangles by crossings
    PowerSeries zeta_tilde;                // zeta[gamma_tilde]
    PowerSeries f1_tilde;                  // link classes, weight 1/(2n)
};

FlypeSeries flype_series(int order);

/// Flype classes of skeleton diagrams with m vertices and n blobs:
/// the branch of T^2 - (1+g-zeta) T + zeta + g(1+g)/(1-g) = 0 with T(0,0)=0,
/// in closed form T = ((1+g-zeta) - sqrt((1-g+zeta)^2 - 8 zeta - 8g^2/(1-g)))/2.
BivariateSeries gamma_tilde_template(int order);

/// Residual of the horizontal-channel identity
/// V = (g+zeta) + g T + (H-g)^2/(1-(H-g)) with H = V = (T+g+zeta)/2.
/// Zero bivariate series; `drop_vertex_term` omits g T to exercise the
/// detection path in tests.
BivariateSeries h_tilde_check(int order, bool drop_vertex_term = false);

/// The solution of T(g) = T{g, zeta[T(g)]} vanishing at 0, by substitution
/// iteration. Each pass extends the trusted order by at least four because
/// zeta[Gamma] has valuation 5. Throws "fixed point not converged within N
/// iterations" if stationarity is not reached (defensive; cannot happen).
PowerSeries gamma_tilde_series(int order);

/// Links up to flypes, weighted: coefficient of g^n is [g^{n-1}] gamma_tilde / (2n).
PowerSeries f1_tilde_series(int order);

/// Dominant singularity of gamma_tilde: radius (-101+sqrt(21001))/270,
/// growth (101+sqrt(21001))/40, exponent -7/2. Derived by evaluating the
/// template quadratic at the kernel singularity (Gamma, zeta) = (1/4, 1/540).
AsymptoticConstants tangle_asymptotics();

}  // namespace tangles
