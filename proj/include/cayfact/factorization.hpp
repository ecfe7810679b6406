#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayfact/cayley.hpp"
#include "cayfact/field.hpp"
#include "cayfact/group.hpp"

namespace cayfact {

// Unordered pair {g, g^-1} with rep = min(g, g^-1) in element-id order;
// involutions are singleton classes with rep == mate.
struct PairClass {
    Elem rep = 0;
    Elem mate = 0;
    bool operator==(const PairClass&) const = default;
};

// All inverse-pair classes of G^*, sorted by representative.
std::vector<PairClass> pair_classes(const Group& G);

// A k-part partition of G^* into connection sets, optionally certified by
// automorphisms mapping part 0 onto each later part.
struct Factorization {
    Group group;
    int k = 0;
    std::vector<ConnectionSet> parts;
    std::vector<Automorphism> witnesses;  // empty, or k-1: witnesses[i] maps parts[0] to parts[i+1]

    bool has_witnesses() const { return !witnesses.empty(); }
};

// Full structural check: partition of G^* into k equal-size inverse-closed
// identity-free parts, plus witness validity and coverage when witnesses are
// present. Throws construction_error with the first violated condition.
void check_factorization(const Factorization& f);

// Why one block passes/fails the divisibility rule: for odd p the block must
// satisfy 2k | p^r - 1, and for p = 2 it must satisfy k | 2^r - 1.
struct BlockReason {
    std::string block;  // e.g. "Z_3^2"
    int p = 0;
    int r = 0;
    std::uint64_t block_order_minus_one = 0;
    std::uint64_t required_divisor = 0;
    bool divides = false;
};

// Decision with reasons. Elementary products go through per-block
// divisibility. Table descriptors are classified: abelian with squarefree
// element orders decompose into elementary blocks; the rest are rejected with
// a stable tag ("Z489" for abelian with an element of order 4, 8 or 9,
// "Case2" for the quaternion shape, "Case3" for other nonabelian groups).
struct Decision {
    bool ok = false;
    std::vector<BlockReason> block_reasons;
    std::string tag;
    std::string detail;
};

Decision decide_kif(const Group& G, int k);

// Coset construction on the Singer cycle of GF(p^n): part j collects the
// nonzero vectors whose discrete log is congruent to j mod k. Requires
// 2k | p^n - 1 for odd p, k | 2^n - 1 for p = 2. Witnesses are gamma^j.
Factorization cyclotomic_factorization(const FieldRep& f, int k);
Factorization cyclotomic_factorization(int p, int n, int k);

// Literal orbit-splitting construction for a fixed-point-free automorphism
// sigma of order k^e: splits each <sigma>-orbit on pair classes into
// <sigma^k>-suborbits and unions one suborbit per orbit. Construct-then-
// verify; fails with "suborbit count mismatch" when an orbit splits into
// fewer than k suborbits (a regime the orbit count argument does not cover).
Factorization rotational_factorization(const Group& G, const Automorphism& sigma, int k);

// Product lifting: from factorizations of H and K with the same k and
// coprime orders, build parts S_i = (A_i x K) u ({0} x B_i) on H x K.
Factorization lift_product(const Factorization& fh, const Factorization& fk);

// Restriction to a characteristic subgroup: H must be a sub-product of the
// Sylow blocks of fact.group (each H block equal to some host block); part i
// of the result is H intersected with part i.
Factorization restrict_to_subgroup(const Factorization& fact, const Group& H);

struct KifConstruction {
    Factorization factorization;
    std::vector<FieldRep> block_fields;  // one per block, in block order
};

// End-to-end construction for an elementary product with a positive
// decision: per-block cyclotomic factorizations combined by lift_product,
// folded left to right.
KifConstruction construct_kif(const Group& G, int k);

}  // namespace cayfact
