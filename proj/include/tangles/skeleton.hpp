#pragma once

#include <utility>

#include "tangles/algebraic.hpp"
#include "tangles/bivariate_series.hpp"
#include "tangles/power_series.hpp"

namespace tangles {

/// Channel decomposition of the tangle generating function Gamma into
/// two-particle-irreducible pieces, and the template counting skeleton
/// diagrams by vertices (g) and irreducible blobs (zeta).
struct SkeletonSeries {
    int order;
    PowerSeries D;              // Gamma(1-Gamma)/(1+Gamma); blob count by crossings
    PowerSeries zeta;           // D - g; 2PI blobs with at least two crossings
    PowerSeries H;              // horizontally 2PR part
    PowerSeries V;              // vertically 2PR part, equals H by symmetry
    BivariateSeries gamma_template;  // gamma_{m,n}: skeletons, m vertices, n blobs
    PowerSeries g_of_gamma;     // functional inverse of Gamma(g), closed form
    PowerSeries zeta_of_gamma;  // fully 2PI skeletons by blob count
};

SkeletonSeries skeleton_series(int order);

/// D = Gamma(1-Gamma)/(1+Gamma). Requires Gamma(0) = 0.
PowerSeries d_series(const PowerSeries& gamma);

/// H = V = (Gamma + D)/2. Verifies the defining fixed-point relation
/// H = D + H^2/(1-H) and signals "channel decomposition inconsistent"
/// if it fails, which would mean D does not belong to this Gamma.
std::pair<PowerSeries, PowerSeries> h_v_series(const PowerSeries& gamma, const PowerSeries& D);

/// Counts of skeleton diagrams built from m simple crossings and n blobs:
/// Gamma{g,zeta} = (1 - g - zeta - sqrt((1-g-zeta)^2 - 4(g+zeta)))/2.
/// The closed form depends on g and zeta only through s = g + zeta, so
/// gamma_{m,n} = binomial(m+n, m) * c_{m+n} with c_k the kernel coefficients.
BivariateSeries gamma_template(int order);

/// Same series computed directly from the bivariate closed form, without
/// using the s = g + zeta collapse. Cross-checks gamma_template.
BivariateSeries gamma_template_direct(int order);

/// Univariate kernel K(s) with K = s + 2s^2 + 6s^3 + 22s^4 + 90s^5 + ...
/// (counts of planar chains of two-terminal networks).
PowerSeries template_kernel(int order);

/// Inverse of Gamma(g) in closed form:
/// g[Gamma] = ((Gamma+2)^-3) (1 + 10 Gamma - 2 Gamma^2 - (1-4Gamma)^{3/2}) / 2.
PowerSeries g_of_gamma(int order);

/// Generating function of fully two-particle-irreducible skeletons:
/// zeta[Gamma] = -2/(1+Gamma) + 2 - Gamma - g[Gamma]. Valuation 5.
PowerSeries zeta_of_gamma(int order);

/// Exact evaluation of the closed forms at a rational Gamma <= 1/4.
AlgebraicValue g_of_gamma_at(const Rational& gamma);
AlgebraicValue zeta_of_gamma_at(const Rational& gamma);

/// Residual of the dressing identity Gamma(g) = Gamma{g, zeta(g)}.
/// Zero series through the requested order.
PowerSeries dressing_check(int order);

/// Residuals of the parametric system in eta = 1 - a^2:
/// 27 g + eta (3+eta)^2 and Gamma + eta (3+2 eta)/(3+eta)^2.
/// Both are zero series for the renormalized model data.
std::pair<PowerSeries, PowerSeries> eta_system_check(int order);

}  // namespace tangles
