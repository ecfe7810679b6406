#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayfact/modmat.hpp"

namespace cayfact {

// Group elements are flat mixed-radix integers (products) or table indices.
// The identity is always element 0; the element id doubles as the vertex id
// of the corresponding Cayley-graph vertex.
using Elem = std::uint32_t;

// One Sylow block Z_p^r of an elementary product.
struct Block {
    int p = 0;
    int r = 0;
    bool operator==(const Block&) const = default;
};

enum class GroupKind { elementary_product, small_table };

// A finite group in one of two presentations:
//  - elementary_product: a direct product of elementary abelian blocks Z_p^r
//    with pairwise distinct primes p. Coordinates are little-endian digits,
//    first block least significant, so the base vector e_0 of block 0 is
//    element 1.
//  - small_table: an explicit Cayley table of order <= 16, identity at
//    index 0, validated for the group axioms on construction.
class Group {
public:
    static constexpr std::uint64_t max_table_order = 16;

    // The trivial (order-1) group; real groups come from the factories.
    Group() = default;

    static Group elementary(std::vector<Block> blocks);
    static Group from_table(std::string name, const std::vector<std::vector<int>>& table,
                            std::vector<std::string> labels = {});
    static Group catalog(std::string_view name);
    static const std::vector<std::string>& catalog_names();
    static bool is_catalog_name(std::string_view name);

    GroupKind kind() const { return kind_; }
    std::uint64_t order() const { return order_; }
    const std::string& name() const { return name_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::uint64_t block_order(int bi) const;
    // digit offset and digit count of block bi inside the coordinate vector
    std::pair<int, int> block_span(int bi) const;

    Elem identity() const { return 0; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem power(Elem g, std::uint64_t e) const;
    int element_order(Elem g) const;

    // Multiset {order l -> count}; guarded at 10^6 elements for products.
    std::map<int, std::uint64_t> order_census() const;

    // Coordinate access (products only).
    std::vector<int> coords(Elem g) const;
    Elem from_coords(const std::vector<int>& c) const;

    // Label access (tables only; labels are cosmetic).
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Elem> element_by_label(std::string_view label) const;

    // Structural equality; table names and labels are ignored.
    bool operator==(const Group& o) const;

    // Human-readable description, e.g. "Z_2^2 x Z_7" or "Q8".
    std::string describe() const;

    void check_element(Elem g) const;

private:
    GroupKind kind_ = GroupKind::elementary_product;
    std::uint64_t order_ = 1;
    std::string name_;

    // products
    std::vector<Block> blocks_;
    std::vector<int> radix_;  // per digit, little-endian

    // tables
    std::vector<std::uint8_t> table_;  // n*n, row-major
    std::vector<std::uint8_t> inv_;
    std::vector<std::string> labels_;
};

// A group automorphism in one of two presentations matching the group kinds:
// per-block invertible matrices over GF(p_i), or an explicit permutation of
// element ids fixing 0.
struct Automorphism {
    enum class Kind { block_linear, permutation };

    Kind kind = Kind::block_linear;
    std::vector<ModMatrix> matrices;  // one per block (block_linear)
    std::vector<Elem> perm;           // size |G| (permutation)

    static Automorphism linear(std::vector<ModMatrix> ms);
    static Automorphism permutation_of(std::vector<Elem> p);
    static Automorphism identity_for(const Group& G);

    bool operator==(const Automorphism&) const = default;
};

Elem apply_automorphism(const Group& G, const Automorphism& a, Elem g);
// Image of a set; result is sorted ascending.
std::vector<Elem> apply_automorphism(const Group& G, const Automorphism& a, const std::vector<Elem>& set);

// Full validity check: shape, invertibility/bijectivity, identity fixed,
// homomorphism property (exhaustive for permutations). Reasons go to *why.
bool is_valid_automorphism(const Group& G, const Automorphism& a, std::string* why = nullptr);

// (a then b)? No: compose(a, b)(g) = a(b(g)), matching matrix products.
Automorphism compose(const Group& G, const Automorphism& a, const Automorphism& b);
Automorphism automorphism_power(const Group& G, const Automorphism& a, std::uint64_t e);
std::uint64_t automorphism_order(const Group& G, const Automorphism& a);

// All automorphisms, deterministically ordered. Supported for small tables
// (generator-image backtracking) and single-block products with p^r <= 16
// (full GL(r, p) enumeration); anything else is a guard error.
std::vector<Automorphism> enumerate_automorphisms(const Group& G);

}  // namespace cayfact
