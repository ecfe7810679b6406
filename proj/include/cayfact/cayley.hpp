#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayfact/group.hpp"

namespace cayfact {

// A connection set: nonempty, identity-free, inverse-closed subset of G,
// stored sorted ascending. Validity is checked by the consumers (factorization
// checks, verify_partition), not the struct itself, so that candidate sets can
// be reported on rather than rejected at construction.
struct ConnectionSet {
    std::vector<Elem> elems;

    bool operator==(const ConnectionSet&) const = default;
};

// Undirected Cayley graph Cay(G, S): vertices are element ids, edge {h, g}
// iff g * h^-1 lies in S. Dense symmetric bit matrix, zero diagonal,
// |S|-regular by construction.
class CayleyGraph {
public:
    static constexpr std::uint32_t max_vertices = 1u << 14;

    int vertex_count() const { return n_; }
    int degree() const { return degree_; }
    std::uint64_t edge_count() const { return static_cast<std::uint64_t>(n_) * degree_ / 2; }

    bool adjacent(int u, int v) const {
        return bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >> (v & 63) & 1;
    }

    CayleyGraph complement() const;

    // Sorted (u, v) pairs with u < v, numeric lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;
    // One "u v" line per edge, trailing newline.
    std::string to_edgelist() const;
    // Undirected DOT; isolated vertices are listed explicitly.
    std::string to_dot() const;

    const std::optional<std::pair<Group, ConnectionSet>>& origin() const { return origin_; }

    friend CayleyGraph build_cayley(const Group& G, const ConnectionSet& S);

private:
    CayleyGraph() = default;
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    int n_ = 0;
    int degree_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::optional<std::pair<Group, ConnectionSet>> origin_;
};

// Requires S to be a valid connection set (sorted, identity-free,
// inverse-closed) and |G| within the vertex guard.
CayleyGraph build_cayley(const Group& G, const ConnectionSet& S);

// True iff Cay(G, S) is connected, i.e. S generates G. Computed both by BFS
// on the graph and by subgroup closure; the two must agree.
bool is_connected(const Group& G, const ConnectionSet& S);

}  // namespace cayfact
