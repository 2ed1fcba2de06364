#pragma once

#include <vector>

namespace tangles {

/// Ribbon graph on labeled half-edges. Internal vertex v owns half-edges
/// 4v..4v+3 with counterclockwise rotation (4v 4v+1 4v+2 4v+3). External
/// legs, if any, live on one boundary vertex holding half-edges
/// 4n..4n+k-1 in clockwise rotation, so that matching leg i straight to
/// an internal half-edge keeps the diagram planar. Faces are the cycles
/// of rotation composed with the matching.
struct FatGraph {
    int n_vertices = 0;          // internal 4-valent vertices
    int n_external = 0;          // 0, 2, or 4 legs
    std::vector<int> rotation;   // permutation over all half-edges
    std::vector<int> matching;   // fixed-point-free involution

    int halves() const { return 4 * n_vertices + n_external; }
    /// Node owning half-edge h: internal vertex index, or n_vertices for
    /// the boundary vertex.
    int node_of(int h) const { return h < 4 * n_vertices ? h / 4 : n_vertices; }
    int nodes() const { return n_vertices + (n_external > 0 ? 1 : 0); }
};

/// Builds the standard rotation for the given matching. Throws
/// std::invalid_argument unless the matching is a fixed-point-free
/// involution of the right size.
FatGraph make_fat_graph(int n_vertices, int n_external, std::vector<int> matching);

/// Number of cycles of rotation ∘ matching.
int face_count(const FatGraph& g);

/// Single component, boundary vertex included.
bool is_connected(const FatGraph& g);

/// Total genus over components: 2(genus) = 2(components) - V + E - F.
int genus(const FatGraph& g);

/// True iff some subgraph of internal vertices hangs on the rest of the
/// diagram by exactly two strands: either a closed 2-point insertion (no
/// legs, 2 connecting edges) or an insertion on an external line (1 leg,
/// 1 connecting edge). Meaningful for diagrams with external legs.
bool has_self_energy(const FatGraph& g);

enum class Channel {
    horizontal,  // separates legs {0,3} (NW, SW) from {1,2}
    vertical,    // separates legs {0,1} (NW, NE) from {2,3}
};

/// True iff no two-edge cut splits the four legs 2+2 in the given channel.
/// Requires n_external = 4.
bool is_two_particle_irreducible(const FatGraph& g, Channel channel);

}  // namespace tangles
