#include "tangles/fat_graph.hpp"

#include <stdexcept>

namespace tangles {

namespace {

std::vector<int> standard_rotation(int n_vertices, int n_external) {
    std::vector<int> rot(static_cast<size_t>(4 * n_vertices + n_external));
    for (int v = 0; v < n_vertices; ++v)
        for (int i = 0; i < 4; ++i) rot[static_cast<size_t>(4 * v + i)] = 4 * v + (i + 1) % 4;
    const int base = 4 * n_vertices;
    for (int i = 0; i < n_external; ++i)
        rot[static_cast<size_t>(base + i)] = base + (i - 1 + n_external) % n_external;
    return rot;
}

// Legs attached to vertex set `mask` (bit per internal vertex) and edges
// leaving it, self-loops not counted.
struct SubsetBoundary {
    int legs_mask = 0;
    int legs = 0;
    int cut = 0;
};

SubsetBoundary subset_boundary(const FatGraph& g, unsigned mask) {
    SubsetBoundary b;
    const int internal = 4 * g.n_vertices;
    for (int h = 0; h < internal; ++h) {
        if (!(mask >> (h / 4) & 1u)) continue;
        const int p = g.matching[static_cast<size_t>(h)];
        if (p >= internal) {
            b.legs_mask |= 1 << (p - internal);
            ++b.legs;
        } else if (!(mask >> (p / 4) & 1u)) {
            ++b.cut;
        }
    }
    return b;
}

}  // namespace

FatGraph make_fat_graph(int n_vertices, int n_external, std::vector<int> matching) {
    FatGraph g;
    g.n_vertices = n_vertices;
    g.n_external = n_external;
    const size_t h = static_cast<size_t>(4 * n_vertices + n_external);
    if (matching.size() != h) throw std::invalid_argument("matching has wrong size");
    for (size_t i = 0; i < h; ++i) {
        const int p = matching[i];
        if (p < 0 || static_cast<size_t>(p) >= h || static_cast<size_t>(p) == i ||
            matching[static_cast<size_t>(p)] != static_cast<int>(i))
            throw std::invalid_argument("matching is not a fixed-point-free involution");
    }
    g.rotation = standard_rotation(n_vertices, n_external);
    g.matching = std::move(matching);
    return g;
}

int face_count(const FatGraph& g) {
    const int h = g.halves();
    std::vector<char> seen(static_cast<size_t>(h), 0);
    int faces = 0;
    for (int start = 0; start < h; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++faces;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            cur = g.rotation[static_cast<size_t>(g.matching[static_cast<size_t>(cur)])];
        }
    }
    return faces;
}

namespace {

int component_count(const FatGraph& g) {
    const int n = g.nodes();
    if (n == 0) return 0;
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    const auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    int components = n;
    for (int h = 0; h < g.halves(); ++h) {
        const int a = find(g.node_of(h));
        const int b = find(g.node_of(g.matching[static_cast<size_t>(h)]));
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

}  // namespace

bool is_connected(const FatGraph& g) { return component_count(g) <= 1; }

int genus(const FatGraph& g) {
    const int v = g.nodes();
    const int e = g.halves() / 2;
    const int f = face_count(g);
    const int c = component_count(g);
    return (2 * c - v + e - f) / 2;
}

bool has_self_energy(const FatGraph& g) {
    const unsigned all = (1u << g.n_vertices) - 1;
    for (unsigned mask = 1; mask <= all; ++mask) {
        const SubsetBoundary b = subset_boundary(g, mask);
        if ((b.legs == 0 && b.cut == 2) || (b.legs == 1 && b.cut == 1)) return true;
    }
    return false;
}

bool is_two_particle_irreducible(const FatGraph& g, Channel channel) {
    if (g.n_external != 4) throw std::invalid_argument("predicate needs four legs");
    const int side = channel == Channel::horizontal ? 0b1001 : 0b0011;  // legs {0,3} / {0,1}
    const unsigned all = (1u << g.n_vertices) - 1;
    for (unsigned mask = 1; mask < all; ++mask) {
        const SubsetBoundary b = subset_boundary(g, mask);
        if (b.cut != 2) continue;
        if (b.legs_mask == side || b.legs_mask == (0b1111 ^ side)) return false;
    }
    return true;
}

}  // namespace tangles
