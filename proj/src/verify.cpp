#include "cayfact/verify.hpp"

#include <algorithm>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

std::string part_name(std::size_t i) { return "part " + std::to_string(i); }

std::vector<Elem> sorted_elems(const ConnectionSet& s) {
    std::vector<Elem> v = s.elems;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

PartitionReport verify_partition(const Group& G, const std::vector<ConnectionSet>& parts) {
    PartitionReport r;
    r.nonempty = !parts.empty();
    if (!r.nonempty) r.failures.push_back("no parts given");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].elems.empty()) {
            r.nonempty = false;
            r.failures.push_back(part_name(i) + " is empty");
        }

    const std::uint64_t n = G.order();
    std::vector<std::uint32_t> count(n, 0);
    r.identity_free = true;
    r.pairwise_disjoint = true;
    bool in_range = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Elem g : parts[i].elems) {
            if (static_cast<std::uint64_t>(g) >= n) {
                in_range = false;
                r.failures.push_back(part_name(i) + " holds out-of-range element " + std::to_string(g));
                continue;
            }
            if (g == G.identity()) {
                r.identity_free = false;
                r.failures.push_back(part_name(i) + " contains the identity");
            }
            if (++count[g] == 2) {
                r.pairwise_disjoint = false;
                r.failures.push_back("element " + std::to_string(g) + " appears more than once");
            }
        }

    r.union_complete = in_range;
    for (Elem g = 1; g < n; ++g)
        if (count[g] == 0) {
            r.union_complete = false;
            r.failures.push_back("element " + std::to_string(g) + " is covered by no part");
        }

    r.equal_sizes = true;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].elems.size() != parts[0].elems.size()) {
            r.equal_sizes = false;
            r.failures.push_back(part_name(i) + " has size " + std::to_string(parts[i].elems.size()) +
                                 " but part 0 has size " + std::to_string(parts[0].elems.size()));
        }

    r.inverse_closed = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::vector<Elem> sorted = sorted_elems(parts[i]);
        for (Elem g : sorted) {
            if (static_cast<std::uint64_t>(g) >= n || g == G.identity()) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(), G.inv(g))) {
                r.inverse_closed = false;
                r.failures.push_back(part_name(i) + " is not inverse-closed at element " + std::to_string(g));
            }
        }
    }
    return r;
}

bool verify_witness(const Group& G, const ConnectionSet& S, const ConnectionSet& T, const Automorphism& alpha,
                    std::string* why) {
    std::string reason;
    if (!is_valid_automorphism(G, alpha, &reason)) {
        if (why) *why = "witness is not an automorphism: " + reason;
        return false;
    }
    if (apply_automorphism(G, alpha, sorted_elems(S)) != sorted_elems(T)) {
        if (why) *why = "witness does not map the source part onto the target part";
        return false;
    }
    return true;
}

VerifyReport verify_certificate(const Certificate& cert) {
    VerifyReport r;
    r.route = "none";
    const Group& G = cert.group;
    const std::uint64_t n = G.order();

    r.partition = verify_partition(G, cert.parts);
    if (cert.parts.size() != static_cast<std::size_t>(cert.k)) {
        r.partition.failures.push_back("certificate has " + std::to_string(cert.parts.size()) + " parts but k = " +
                                       std::to_string(cert.k));
        r.partition.equal_sizes = false;
    }

    r.expected_edges = n * (n - 1) / 2;
    std::uint64_t total = 0;
    for (const ConnectionSet& s : cert.parts) total += s.elems.size();
    r.total_edges = n * total / 2;
    r.edge_accounting = r.partition.pass() && r.total_edges == r.expected_edges;

    if (!r.partition.pass()) {
        r.verdict = "fail";
        r.detail = "partition conditions violated";
        return r;
    }

    if (!cert.witnesses.empty()) {
        r.route = "witness";
        bool all = cert.witnesses.size() == static_cast<std::size_t>(cert.k) - 1;
        if (!all) r.detail = "witness count must be k - 1";
        for (std::size_t i = 0; i < cert.witnesses.size() && i + 1 < cert.parts.size(); ++i) {
            FactorCheck fc;
            fc.part = static_cast<int>(i) + 1;
            fc.route = "witness";
            fc.pass = verify_witness(G, cert.parts[0], cert.parts[i + 1], cert.witnesses[i], &fc.detail);
            all = all && fc.pass;
            r.factors.push_back(std::move(fc));
        }
        r.verdict = (all && r.edge_accounting) ? "pass" : "fail";
        return r;
    }

    if (n > static_cast<std::uint64_t>(SmallGraph::max_vertices)) {
        r.undecided = true;
        r.verdict = "undecided";
        r.detail = "undecided: supply witnesses (group order " + std::to_string(n) +
                   " exceeds the canonical-form guard of " + std::to_string(SmallGraph::max_vertices) + ")";
        return r;
    }

    r.route = "canonical";
    bool all = true;
    const CayleyGraph g0 = build_cayley(G, ConnectionSet{sorted_elems(cert.parts[0])});
    const SmallGraph s0 = SmallGraph::from_cayley(g0);
    for (std::size_t i = 1; i < cert.parts.size(); ++i) {
        FactorCheck fc;
        fc.part = static_cast<int>(i);
        fc.route = "canonical";
        const SmallGraph si =
            SmallGraph::from_cayley(build_cayley(G, ConnectionSet{sorted_elems(cert.parts[i])}));
        if (auto bij = graphs_isomorphic(s0, si)) {
            fc.pass = true;
            fc.bijection = std::move(*bij);
        } else {
            fc.pass = false;
            fc.detail = "no isomorphism onto part 0 (canonical forms differ)";
        }
        all = all && fc.pass;
        r.factors.push_back(std::move(fc));
    }
    r.verdict = (all && r.edge_accounting) ? "pass" : "fail";
    return r;
}

nlohmann::ordered_json report_to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["verdict"] = r.verdict;
    nlohmann::ordered_json p;
    p["nonempty"] = r.partition.nonempty;
    p["identity_free"] = r.partition.identity_free;
    p["pairwise_disjoint"] = r.partition.pairwise_disjoint;
    p["union_complete"] = r.partition.union_complete;
    p["equal_sizes"] = r.partition.equal_sizes;
    p["inverse_closed"] = r.partition.inverse_closed;
    p["pass"] = r.partition.pass();
    p["failures"] = r.partition.failures;
    j["partition"] = std::move(p);
    nlohmann::ordered_json iso;
    iso["route"] = r.route;
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const FactorCheck& fc : r.factors) {
        nlohmann::ordered_json f;
        f["part"] = fc.part;
        f["pass"] = fc.pass;
        f["route"] = fc.route;
        if (!fc.bijection.empty()) f["bijection"] = fc.bijection;
        if (!fc.detail.empty()) f["detail"] = fc.detail;
        fs.push_back(std::move(f));
    }
    iso["factors"] = std::move(fs);
    j["isomorphism"] = std::move(iso);
    nlohmann::ordered_json e;
    e["pass"] = r.edge_accounting;
    e["total_edges"] = r.total_edges;
    e["expected_edges"] = r.expected_edges;
    j["edge_accounting"] = std::move(e);
    j["undecided"] = r.undecided;
    j["detail"] = r.detail;
    return j;
}

std::string report_to_string(const VerifyReport& r) { return report_to_json(r).dump(2) + "\n"; }

}  // namespace cayfact
