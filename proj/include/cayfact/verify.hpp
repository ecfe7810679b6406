#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cayfact/canonical.hpp"
#include "cayfact/cayley.hpp"
#include "cayfact/certificate.hpp"
#include "cayfact/group.hpp"

namespace cayfact {

// Per-condition partition report. Failures are report entries, never faults:
// a malformed candidate yields `pass() == false` with reasons, not a throw.
struct PartitionReport {
    bool nonempty = false;
    bool identity_free = false;
    bool pairwise_disjoint = false;
    bool union_complete = false;
    bool equal_sizes = false;
    bool inverse_closed = false;
    std::vector<std::string> failures;

    bool pass() const {
        return nonempty && identity_free && pairwise_disjoint && union_complete && equal_sizes && inverse_closed;
    }
};

PartitionReport verify_partition(const Group& G, const std::vector<ConnectionSet>& parts);

// True iff alpha is a valid automorphism of G and S^alpha = T as sets. A true
// result certifies Cay(G,S) isomorphic to Cay(G,T) without any graph search.
bool verify_witness(const Group& G, const ConnectionSet& S, const ConnectionSet& T, const Automorphism& alpha,
                    std::string* why = nullptr);

// One factor-isomorphism check of part `part` against part 0.
struct FactorCheck {
    int part = 0;
    bool pass = false;
    std::string route;           // "witness" or "canonical"
    std::vector<int> bijection;  // vertex map part0 -> part (canonical route)
    std::string detail;          // failure reason when !pass
};

struct VerifyReport {
    PartitionReport partition;
    std::string route;  // "witness", "canonical", or "none"
    std::vector<FactorCheck> factors;
    bool edge_accounting = false;
    std::uint64_t total_edges = 0;
    std::uint64_t expected_edges = 0;
    bool undecided = false;
    std::string verdict;  // "pass" | "fail" | "undecided"
    std::string detail;   // e.g. "undecided: supply witnesses"

    bool pass() const { return verdict == "pass"; }
};

// Full pipeline: partition conditions, then factor isomorphism via the
// witnesses when present (any group size), else via canonical forms when
// |G| <= 64, else "undecided: supply witnesses". Edge accounting on top.
VerifyReport verify_certificate(const Certificate& cert);

nlohmann::ordered_json report_to_json(const VerifyReport& r);
std::string report_to_string(const VerifyReport& r);

}  // namespace cayfact
