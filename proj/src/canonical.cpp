#include "cayfact/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

using BitString = std::vector<std::uint64_t>;

// Equitable refinement: iterate "color := rank of (color, neighbor color
// counts)" until stable. New color ids are ranks of sorted signatures, so the
// result depends only on the colored isomorphism class, never on vertex ids.
std::vector<int> refine(const SmallGraph& g, std::vector<int> col) {
    const int n = g.n;
    for (;;) {
        int ncolors = 0;
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, col[static_cast<std::size_t>(v)] + 1);
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.assign(static_cast<std::size_t>(ncolors) + 1, 0);
            s[0] = col[static_cast<std::size_t>(v)];
            std::uint64_t nb = g.adj[static_cast<std::size_t>(v)];
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                ++s[static_cast<std::size_t>(1 + col[static_cast<std::size_t>(u)])];
            }
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
        });
        std::vector<int> next(static_cast<std::size_t>(n));
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                         sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])])
                ++rank;
            next[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = rank;
        }
        if (next == col) return col;
        col = std::move(next);
    }
}

BitString adjacency_bits(const SmallGraph& g, const std::vector<int>& pos) {
    const int n = g.n;
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    const int nbits = n * (n - 1) / 2;
    BitString bits(static_cast<std::size_t>((nbits + 63) / 64), 0);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if (g.adjacent(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]))
                bits[static_cast<std::size_t>(t >> 6)] |= std::uint64_t{1} << (63 - (t & 63));
    return bits;
}

struct Searcher {
    const SmallGraph& g;
    BitString best;
    std::vector<int> best_pos;
    bool have = false;

    void explore(std::vector<int> col) {
        col = refine(g, col);
        const int n = g.n;
        // Target cell: smallest color owning at least two vertices.
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[static_cast<std::size_t>(c)] >= 2) {
                target = c;
                break;
            }
        if (target < 0) {  // discrete: col is a bijection onto 0..n-1
            BitString bits = adjacency_bits(g, col);
            if (!have || bits < best) {
                best = std::move(bits);
                best_pos = col;
                have = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (col[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> next(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) next[static_cast<std::size_t>(u)] = 2 * col[static_cast<std::size_t>(u)];
            next[static_cast<std::size_t>(v)] -= 1;  // v precedes the rest of its cell
            explore(std::move(next));
        }
    }
};

}  // namespace

SmallGraph SmallGraph::from_cayley(const CayleyGraph& g) {
    if (g.vertex_count() > max_vertices)
        throw guard_error("canonical labeling guarded at 64 vertices");
    SmallGraph s;
    s.n = g.vertex_count();
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (g.adjacent(u, v)) s.add_edge(u, v);
    return s;
}

CanonicalLabeling canonical_labeling(const SmallGraph& g) {
    if (g.n < 1 || g.n > SmallGraph::max_vertices)
        throw guard_error("canonical labeling guarded at 1..64 vertices");
    Searcher s{g, {}, {}, false};
    s.explore(std::vector<int>(static_cast<std::size_t>(g.n), 0));
    const int nbits = g.n * (g.n - 1) / 2;
    std::string bytes;
    bytes.push_back(static_cast<char>(g.n));
    for (int t = 0; t < nbits; t += 8) {
        unsigned byte = 0;
        for (int b = 0; b < 8 && t + b < nbits; ++b) {
            const int idx = t + b;
            const unsigned bit =
                static_cast<unsigned>(s.best[static_cast<std::size_t>(idx >> 6)] >> (63 - (idx & 63)) & 1);
            byte |= bit << (7 - b);
        }
        bytes.push_back(static_cast<char>(byte));
    }
    return {CanonicalForm{std::move(bytes)}, std::move(s.best_pos)};
}

CanonicalForm canonical_form(const SmallGraph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form(const CayleyGraph& g) { return canonical_form(SmallGraph::from_cayley(g)); }

std::optional<std::vector<int>> graphs_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return std::nullopt;
    const CanonicalLabeling la = canonical_labeling(a);
    const CanonicalLabeling lb = canonical_labeling(b);
    if (la.form != lb.form) return std::nullopt;
    std::vector<int> at_b(static_cast<std::size_t>(b.n));
    for (int v = 0; v < b.n; ++v) at_b[static_cast<std::size_t>(lb.position[static_cast<std::size_t>(v)])] = v;
    std::vector<int> map(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v)
        map[static_cast<std::size_t>(v)] = at_b[static_cast<std::size_t>(la.position[static_cast<std::size_t>(v)])];
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            if (a.adjacent(u, v) != b.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
                throw construction_error("canonical labelings produced a non-edge-preserving map");
    return map;
}

std::optional<std::vector<int>> graphs_isomorphic(const CayleyGraph& a, const CayleyGraph& b) {
    return graphs_isomorphic(SmallGraph::from_cayley(a), SmallGraph::from_cayley(b));
}

}  // namespace cayfact
