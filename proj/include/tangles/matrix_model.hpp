#pragma once

#include "tangles/algebraic.hpp"
#include "tangles/power_series.hpp"
#include "tangles/rational.hpp"

namespace tangles {

/// Planar limit of the one-matrix model with quartic coupling, before
/// renormalization. All series count fat graphs weighted 1/|Aut| (free
/// energy) or with marked external legs (correlations), g per vertex.
struct BareModel {
    int order;
    PowerSeries a2;               // endpoint parameter, root of 3g y^2 - y + 1
    PowerSeries free_energy;      // connected vacuum diagrams of genus 0
    PowerSeries two_point;        // G_2
    PowerSeries four_point;       // G_4
    PowerSeries four_point_conn;  // G_4 - 2 G_2^2
};

BareModel bare_model(int order);

/// [g^p] of the bare free energy in closed form, p >= 1.
Rational closed_form_f_coeff(unsigned long p);

/// Model with the coupling rescaled so that propagator corrections are
/// absorbed: tangle diagrams with no self-energy subgraph remain. `gamma`
/// generates two-in two-out tangles by crossing number; `f1` generates
/// links weighted 1/(2n).
struct RenormalizedModel {
    int order;
    PowerSeries a2;           // now a root of y^3 - 9 y^2 + 24 y - 16 - 27 g
    PowerSeries alpha;        // wave-function factor a^2 (4 - a^2) / 3
    PowerSeries sigma;        // alpha - 1
    PowerSeries sigma_prime;  // alpha - 1 - 2 g
    PowerSeries gamma;        // sigma_prime / g
    PowerSeries f1;           // sum_n sigma_prime_n g^n / (2n)
};

RenormalizedModel renormalized_model(int order);

/// Closed form for gamma in the renormalized model, as a rational function
/// of a^2. Used as an independent check on the series pipeline.
PowerSeries gamma_closed_form(int order);

/// Dominant singularity data for the link counts: radius 4/27, growth 27/4,
/// exponent -7/2.
AsymptoticConstants link_asymptotics();

}  // namespace tangles
