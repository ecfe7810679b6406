#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayfact/cayley.hpp"

namespace cayfact {

// Undirected graph on at most 64 vertices, adjacency bitmask per vertex.
// This is the working representation for canonical labeling; unlike
// CayleyGraph it carries no regularity invariant, so arbitrary test graphs
// can be expressed.
struct SmallGraph {
    static constexpr int max_vertices = 64;

    int n = 0;
    std::array<std::uint64_t, 64> adj{};

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u)] >> v & 1; }
    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    static SmallGraph from_cayley(const CayleyGraph& g);
};

// Canonical form: vertex count byte followed by the upper-triangle adjacency
// bits of the canonically labeled graph, packed MSB-first. Two graphs on at
// most 64 vertices are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> position;  // vertex -> canonical position
};

CanonicalLabeling canonical_labeling(const SmallGraph& g);
CanonicalForm canonical_form(const SmallGraph& g);
CanonicalForm canonical_form(const CayleyGraph& g);

// Explicit isomorphism a -> b (vertex map), or nullopt when none exists.
// The returned bijection is re-checked edge-by-edge before returning.
std::optional<std::vector<int>> graphs_isomorphic(const SmallGraph& a, const SmallGraph& b);
std::optional<std::vector<int>> graphs_isomorphic(const CayleyGraph& a, const CayleyGraph& b);

}  // namespace cayfact
