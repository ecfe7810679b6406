#pragma once

#include <cstdint>
#include <vector>

#include "cayfact/group.hpp"
#include "cayfact/modmat.hpp"

namespace cayfact {

// GF(p^n) presented through a primitive polynomial and the companion matrix
// gamma of that polynomial. gamma is multiplication by x in the power basis
// {1, x, .., x^{n-1}}, so it generates a cyclic subgroup of GL(n, p) of order
// p^n - 1 acting regularly on the nonzero coordinate vectors.
struct FieldRep {
    int p = 0;
    int n = 0;
    std::vector<int> poly;  // c_0..c_n of x^n + c_{n-1}x^{n-1} + .. + c_0, c_n = 1
    ModMatrix gamma;
    std::uint64_t q = 0;  // p^n

    static constexpr std::uint64_t max_order = std::uint64_t{1} << 20;

    // Deterministic: uses find_primitive_polynomial.
    static FieldRep make(int p, int n);
    // Explicit polynomial; rejected unless monic, reduced and primitive.
    static FieldRep from_poly(int p, int n, std::vector<int> poly);

    // The additive group Z_p^n the Singer cycle acts on.
    Group additive_group() const;
};

// First monic degree-n polynomial over GF(p) whose companion matrix has
// order exactly p^n - 1, with candidates ordered by coefficient tuple
// (c_{n-1}, .., c_0) ascending. Deterministic; guarded at p^n <= 2^20.
std::vector<int> find_primitive_polynomial(int p, int n);

// Companion matrix: subdiagonal ones, last column -c_i.
ModMatrix companion_matrix(int p, const std::vector<int>& poly);

// Trial division by all lower-degree monic polynomials.
bool is_irreducible(int p, const std::vector<int>& poly);

// Prime factorization (p, multiplicity) by trial division.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m);

// gamma as a single-block automorphism of the additive group.
Automorphism singer_generator(const FieldRep& f);

// log[v] = j where gamma^j e_0 = v, for every nonzero element id v; the base
// point e_0 is the first standard basis vector (element id 1). Exponents run
// 0..q-2; log[0] holds the out-of-range sentinel q-1.
std::vector<std::uint32_t> discrete_log_table(const FieldRep& f);

}  // namespace cayfact
