#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayfact/factorization.hpp"
#include "cayfact/group.hpp"

namespace cayfact {

// Element-order counting test: a factorization into k isomorphic factors
// forces 2k | n(G,l) for every order l > 2 and k | n(G,2). `false` proves
// nonexistence; `true` proves nothing.
bool census_filter(const Group& G, int k);

struct OracleOptions {
    std::uint64_t budget = 10'000'000;  // search nodes
    bool use_census_filter = true;      // disabled in cross-validation runs
};

enum class OracleOutcome { found, refuted, exhausted };

struct OracleResult {
    OracleOutcome outcome = OracleOutcome::refuted;
    std::optional<Factorization> factorization;  // set on found
    std::uint64_t nodes = 0;
};

// Exhaustive search for a k-factorization of G^* into inverse-closed parts
// with pairwise-isomorphic Cayley graphs, by assigning inverse-pair classes
// to blocks. Independent ground truth: no Singer/coset machinery involved.
// Symmetry breaking pins the first class to block 0 and only opens a new
// block when all earlier blocks are nonempty; completed blocks are filtered
// by canonical-form equality. "exhausted" = budget hit, never a refutation.
// Guard: |G| <= 10. k not dividing |G|-1 is refuted outright.
OracleResult brute_force_kif(const Group& G, int k, const OracleOptions& opts = {});

// Some automorphism with S^alpha = T, or nullopt after exhausting Aut(G).
std::optional<Automorphism> ci_equivalent(const Group& G, const ConnectionSet& S, const ConnectionSet& T);

// The twelve groups of order <= 10 used for oracle-vs-decision
// cross-validation.
std::vector<Group> oracle_catalog();

}  // namespace cayfact
