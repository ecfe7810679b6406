#include "cayfact/cayley.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

void check_connection_set(const Group& G, const ConnectionSet& S) {
    if (S.elems.empty()) throw precondition_error("connection set is empty");
    Elem prev = 0;
    for (std::size_t i = 0; i < S.elems.size(); ++i) {
        const Elem g = S.elems[i];
        G.check_element(g);
        if (g == G.identity()) throw precondition_error("connection set contains the identity");
        if (i && g <= prev) throw precondition_error("connection set is not sorted/unique");
        prev = g;
    }
    for (Elem g : S.elems)
        if (!std::binary_search(S.elems.begin(), S.elems.end(), G.inv(g)))
            throw precondition_error("connection set is not inverse-closed (element " + std::to_string(g) + ")");
}

}  // namespace

CayleyGraph build_cayley(const Group& G, const ConnectionSet& S) {
    if (G.order() > CayleyGraph::max_vertices)
        throw guard_error("Cayley graph guarded at 2^14 vertices");
    check_connection_set(G, S);
    CayleyGraph g;
    g.n_ = static_cast<int>(G.order());
    g.degree_ = static_cast<int>(S.elems.size());
    g.words_ = (g.n_ + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(g.n_) * g.words_, 0);
    for (Elem h = 0; h < G.order(); ++h)
        for (Elem s : S.elems) {
            const Elem v = G.mul(s, h);  // v * h^-1 = s
            g.set_bit(static_cast<int>(h), static_cast<int>(v));
            g.set_bit(static_cast<int>(v), static_cast<int>(h));
        }
    // Regularity and zero diagonal hold by construction; verify anyway.
    for (int u = 0; u < g.n_; ++u) {
        if (g.adjacent(u, u)) throw construction_error("diagonal entry set; connection set contained identity?");
        int deg = 0;
        for (int w = 0; w < g.words_; ++w)
            deg += std::popcount(g.bits_[static_cast<std::size_t>(u) * g.words_ + w]);
        if (deg != g.degree_) throw construction_error("vertex degree differs from |S|");
    }
    g.origin_ = std::make_pair(G, S);
    return g;
}

CayleyGraph CayleyGraph::complement() const {
    CayleyGraph g;
    g.n_ = n_;
    g.degree_ = n_ - 1 - degree_;
    g.words_ = words_;
    g.bits_.assign(bits_.size(), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && !adjacent(u, v)) g.set_bit(u, v);
    if (origin_) {
        const auto& [G, S] = *origin_;
        ConnectionSet cs;
        for (Elem x = 1; x < G.order(); ++x)
            if (!std::binary_search(S.elems.begin(), S.elems.end(), x)) cs.elems.push_back(x);
        g.origin_ = std::make_pair(G, std::move(cs));
    }
    return g;
}

std::vector<std::pair<int, int>> CayleyGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) edges.emplace_back(u, v);
    return edges;
}

std::string CayleyGraph::to_edgelist() const {
    std::ostringstream os;
    for (const auto& [u, v] : edge_list()) os << u << " " << v << "\n";
    return os.str();
}

std::string CayleyGraph::to_dot() const {
    std::ostringstream os;
    os << "graph {\n";
    for (int u = 0; u < n_; ++u) {
        bool isolated = true;
        for (int v = 0; v < n_ && isolated; ++v)
            if (v != u && adjacent(u, v)) isolated = false;
        if (isolated) os << "  " << u << ";\n";
    }
    for (const auto& [u, v] : edge_list()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

bool is_connected(const Group& G, const ConnectionSet& S) {
    check_connection_set(G, S);
    const std::size_t n = G.order();
    // Route 1: BFS from the identity vertex along graph edges.
    std::vector<char> seen(n, 0);
    std::vector<Elem> queue{G.identity()};
    seen[G.identity()] = 1;
    std::size_t reached = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (Elem s : S.elems) {
            const Elem v = G.mul(s, queue[qi]);
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    const bool bfs_connected = reached == n;
    // Route 2: subgroup closure of S under products. Every unordered member
    // pair is multiplied both ways once the later of the two is processed.
    std::vector<char> in(n, 0);
    std::vector<Elem> members{G.identity()};
    in[G.identity()] = 1;
    for (Elem s : S.elems)
        if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
        }
    for (std::size_t fi = 0; fi < members.size(); ++fi) {
        const std::size_t snapshot = members.size();
        for (std::size_t mi = 0; mi < snapshot; ++mi) {
            for (const Elem c : {G.mul(members[fi], members[mi]), G.mul(members[mi], members[fi])})
                if (!in[c]) {
                    in[c] = 1;
                    members.push_back(c);
                }
        }
    }
    const bool subgroup_full = members.size() == n;
    if (bfs_connected != subgroup_full)
        throw construction_error("connectivity routes disagree (BFS vs subgroup closure)");
    return bfs_connected;
}

}  // namespace cayfact
