#pragma once

#include "tangles/fat_graph.hpp"
#include "tangles/rational.hpp"

namespace tangles {

/// Cut filters applied to four-leg diagrams. Filters are monotone: turning
/// one on never increases a count. Connectivity is part of the diagram
/// definition and always enforced.
struct DiagramFilter {
    bool no_self_energy = false;
    bool two_particle_irreducible_h = false;
    bool two_particle_irreducible_v = false;
};

inline constexpr int kFreeEnergyCap = 5;
inline constexpr int kTwoPointCap = 4;
inline constexpr int kTangleCap = 4;

/// Weighted count of connected genus-0 vacuum diagrams with n four-valent
/// vertices: (planar labeled matchings) / (n! 4^n). Equals the degree-n
/// coefficient of the vacuum generating function. 1 <= n <= cap unless
/// `force`; signals "cap exceeded" otherwise.
Rational count_free_energy(int n, int workers = 1, bool force = false);

/// Weighted count of genus-0 diagrams with two external legs and n
/// vertices, vacuum pieces excluded. Equals the degree-n coefficient of
/// the two-point function. 0 <= n <= cap unless `force`.
Rational count_two_point(int n, int workers = 1, bool force = false);

/// Count of connected genus-0 diagrams with four external legs held in
/// cyclic order NW, NE, SE, SW on the outer face, n vertices, legs
/// attached to vertices (never to each other), passing the filter. The
/// normalized count is always an integer. 1 <= n <= cap unless `force`.
long long count_tangles(int n, const DiagramFilter& filter, int workers = 1, bool force = false);

}  // namespace tangles
