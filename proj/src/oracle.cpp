#include "tangles/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tangles {

namespace {

constexpr int kMaxHalves = 24;
constexpr int kMaxNodes = 7;
constexpr int kMaxDepth = kMaxHalves / 2;

enum class Mode { vacuum, two_point, tangle };

long long labeling_order(int n) {
    long long d = 1;
    for (int k = 2; k <= n; ++k) d *= k;
    for (int k = 0; k < n; ++k) d *= 4;
    return d;
}

struct Tally {
    long long accepted = 0;
    // tangle mode: accepted split by predicate bits
    // (1 = self-energy, 2 = reducible horizontally, 4 = reducible vertically)
    long long cells[8] = {0, 0, 0, 0, 0, 0, 0, 0};

    void operator+=(const Tally& o) {
        accepted += o.accepted;
        for (int i = 0; i < 8; ++i) cells[i] += o.cells[i];
    }
};

// Backtracking enumeration of perfect matchings on the half-edges with two
// sound prunes: `bound` = closed faces + chain count of the partial
// face-permutation never increases and upper-bounds the final face count,
// so genus > 0 is detected early; a fully matched component that is not
// the whole diagram can never reconnect.
struct Enumerator {
    int n;
    int n_external;
    Mode mode;
    int internal;
    int total;
    int faces_target;

    int sigma[kMaxHalves];
    int match[kMaxHalves];
    int other_end[kMaxHalves];
    int bound;
    int closed_faces;
    int matched;

    int uf_parent[kMaxNodes];
    int uf_size[kMaxNodes];
    int uf_open[kMaxNodes];
    int comp_count;

    Tally tally;

    struct Undo {
        int a, b;
        int hx1, ty1, hx2, ty2;
        bool closed1, closed2;
        int dec_root[2];
        int n_dec;
        int uu_child, uu_parent;
        bool uu_merged;
    };
    Undo undo[kMaxDepth];

    Enumerator(int n_, int n_external_, Mode mode_)
        : n(n_), n_external(n_external_), mode(mode_) {
        internal = 4 * n;
        total = internal + n_external;
        if (mode == Mode::vacuum) faces_target = n + 2;
        else if (mode == Mode::two_point) faces_target = n + 2;
        else faces_target = n + 3;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 4; ++i) sigma[4 * v + i] = 4 * v + (i + 1) % 4;
        for (int i = 0; i < n_external; ++i)
            sigma[internal + i] = internal + (i - 1 + n_external) % n_external;
        for (int h = 0; h < total; ++h) {
            match[h] = -1;
            other_end[h] = h;
        }
        bound = total;
        closed_faces = 0;
        matched = 0;
        const int nodes = n + (mode == Mode::two_point ? 1 : 0);
        for (int v = 0; v < nodes; ++v) {
            uf_parent[v] = v;
            uf_size[v] = 1;
            uf_open[v] = v < n ? 4 : n_external;
        }
        comp_count = nodes;
    }

    int node_of(int h) const {
        if (h < internal) return h / 4;
        return mode == Mode::two_point ? n : -1;
    }

    int uf_find(int x) const {
        while (uf_parent[x] != x) x = uf_parent[x];
        return x;
    }

    // x gains its outgoing arrow toward y; y had no incoming arrow yet.
    void add_arrow(int x, int y, int* hx, int* ty, bool* closed) {
        if (other_end[x] == y) {
            *closed = true;
            ++closed_faces;
            return;
        }
        *closed = false;
        *hx = other_end[x];
        *ty = other_end[y];
        other_end[*hx] = *ty;
        other_end[*ty] = *hx;
        --bound;
    }

    void undo_arrow(int x, int y, int hx, int ty, bool closed) {
        if (closed) {
            --closed_faces;
            return;
        }
        other_end[hx] = x;
        other_end[ty] = y;
        ++bound;
    }

    // Returns false when the branch is pruned; the pair is applied either way
    // and must be undone by pair_undo.
    bool pair_do(int a, int b, Undo& u) {
        u.a = a;
        u.b = b;
        match[a] = b;
        match[b] = a;
        matched += 2;
        add_arrow(a, sigma[b], &u.hx1, &u.ty1, &u.closed1);
        add_arrow(b, sigma[a], &u.hx2, &u.ty2, &u.closed2);

        u.n_dec = 0;
        u.uu_merged = false;
        const int na = node_of(a);
        const int nb = node_of(b);
        if (na >= 0) {
            const int r = uf_find(na);
            --uf_open[r];
            u.dec_root[u.n_dec++] = r;
        }
        if (nb >= 0) {
            const int r = uf_find(nb);
            --uf_open[r];
            u.dec_root[u.n_dec++] = r;
        }
        if (na >= 0 && nb >= 0) {
            int ra = uf_find(na);
            int rb = uf_find(nb);
            if (ra != rb) {
                if (uf_size[ra] < uf_size[rb]) std::swap(ra, rb);
                uf_parent[rb] = ra;
                uf_size[ra] += uf_size[rb];
                uf_open[ra] += uf_open[rb];
                --comp_count;
                u.uu_child = rb;
                u.uu_parent = ra;
                u.uu_merged = true;
            }
        }

        if (bound < faces_target) return false;
        const int probe = na >= 0 ? na : nb;
        if (probe >= 0 && matched < total && uf_open[uf_find(probe)] == 0) return false;
        return true;
    }

    void pair_undo(const Undo& u) {
        if (u.uu_merged) {
            uf_parent[u.uu_child] = u.uu_child;
            uf_size[u.uu_parent] -= uf_size[u.uu_child];
            uf_open[u.uu_parent] -= uf_open[u.uu_child];
            ++comp_count;
        }
        for (int i = u.n_dec - 1; i >= 0; --i) ++uf_open[u.dec_root[i]];
        undo_arrow(u.b, sigma[u.a], u.hx2, u.ty2, u.closed2);
        undo_arrow(u.a, sigma[u.b], u.hx1, u.ty1, u.closed1);
        match[u.a] = -1;
        match[u.b] = -1;
        matched -= 2;
    }

    void leaf() {
        if (comp_count > 1) return;
        if (closed_faces != faces_target) return;
        ++tally.accepted;
        if (mode == Mode::tangle) tally.cells[predicate_bits()]++;
    }

    int predicate_bits() const {
        bool self_energy = false, red_h = false, red_v = false;
        const unsigned full = (1u << n) - 1;
        for (unsigned mask = 1; mask <= full; ++mask) {
            int legs_mask = 0, legs = 0, cut = 0;
            for (int h = 0; h < internal; ++h) {
                if (!(mask >> (h / 4) & 1u)) continue;
                const int p = match[h];
                if (p >= internal) {
                    legs_mask |= 1 << (p - internal);
                    ++legs;
                } else if (!(mask >> (p / 4) & 1u)) {
                    ++cut;
                }
            }
            if ((legs == 0 && cut == 2) || (legs == 1 && cut == 1)) self_energy = true;
            if (cut == 2) {
                if (legs_mask == 0b1001 || legs_mask == 0b0110) red_h = true;
                if (legs_mask == 0b0011 || legs_mask == 0b1100) red_v = true;
            }
            if (self_energy && red_h && red_v) break;
        }
        return (self_energy ? 1 : 0) | (red_h ? 2 : 0) | (red_v ? 4 : 0);
    }

    bool candidate_ok(int a, int b) const {
        return !(mode == Mode::tangle && a >= internal && b >= internal);
    }

    void dfs() {
        if (matched == total) {
            leaf();
            return;
        }
        int a = 0;
        while (match[a] != -1) ++a;
        Undo& u = undo[matched / 2];
        for (int b = a + 1; b < total; ++b) {
            if (match[b] != -1 || !candidate_ok(a, b)) continue;
            if (pair_do(a, b, u)) dfs();
            pair_undo(u);
        }
    }
};

// Branches partition the search space by the first pair; each runs on its
// own enumerator so worker counts never change the result.
Tally enumerate(int n, int n_external, Mode mode, int workers) {
    const int total = 4 * n + n_external;
    if (total == 0) return {};
    std::vector<int> branches;
    {
        const Enumerator probe(n, n_external, mode);
        for (int b = 1; b < total; ++b)
            if (probe.candidate_ok(0, b)) branches.push_back(b);
    }
    std::vector<Tally> results(branches.size());
    const auto run_branch = [&](size_t i) {
        Enumerator e(n, n_external, mode);
        Enumerator::Undo u;
        if (e.pair_do(0, branches[i], u)) e.dfs();
        e.pair_undo(u);
        results[i] = e.tally;
    };
    workers = std::max(1, std::min({workers, 64, static_cast<int>(branches.size())}));
    if (workers == 1) {
        for (size_t i = 0; i < branches.size(); ++i) run_branch(i);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = cursor.fetch_add(1); i < branches.size(); i = cursor.fetch_add(1))
                    run_branch(i);
            });
        for (auto& t : pool) t.join();
    }
    Tally out;
    for (const Tally& t : results) out += t;
    return out;
}

}  // namespace

Rational count_free_energy(int n, int workers, bool force) {
    if (n < 1 || (!force && n > kFreeEnergyCap) || 4 * n > kMaxHalves)
        throw std::domain_error("cap exceeded");
    const Tally t = enumerate(n, 0, Mode::vacuum, workers);
    return Rational(t.accepted, labeling_order(n));
}

Rational count_two_point(int n, int workers, bool force) {
    if (n < 0 || (!force && n > kTwoPointCap) || 4 * n + 2 > kMaxHalves)
        throw std::domain_error("cap exceeded");
    const Tally t = enumerate(n, 2, Mode::two_point, workers);
    return Rational(t.accepted, labeling_order(n));
}

long long count_tangles(int n, const DiagramFilter& filter, int workers, bool force) {
    if (n < 1 || (!force && n > kTangleCap) || 4 * n + 4 > kMaxHalves)
        throw std::domain_error("cap exceeded");
    const Tally t = enumerate(n, 4, Mode::tangle, workers);
    long long labeled = 0;
    for (int bits = 0; bits < 8; ++bits) {
        if (filter.no_self_energy && (bits & 1)) continue;
        if (filter.two_particle_irreducible_h && (bits & 2)) continue;
        if (filter.two_particle_irreducible_v && (bits & 4)) continue;
        labeled += t.cells[bits];
    }
    const long long order = labeling_order(n);
    if (labeled % order != 0) throw std::logic_error("count not divisible by labeling order");
    return labeled / order;
}

}  // namespace tangles
