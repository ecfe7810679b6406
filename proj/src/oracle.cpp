#include "cayfact/oracle.hpp"

#include <algorithm>

#include "cayfact/canonical.hpp"
#include "cayfact/cayley.hpp"
#include "cayfact/errors.hpp"

namespace cayfact {

bool census_filter(const Group& G, int k) {
    if (k < 2) throw precondition_error("k must be >= 2");
    for (const auto& [order, count] : G.order_census()) {
        if (order == 1) continue;
        const std::uint64_t divisor = order == 2 ? static_cast<std::uint64_t>(k) : 2 * static_cast<std::uint64_t>(k);
        if (count % divisor != 0) return false;
    }
    return true;
}

namespace {

struct Search {
    const Group& G;
    int k;
    std::uint64_t target;  // elements per block
    std::uint64_t budget;
    std::vector<PairClass> classes;

    std::vector<int> assigned;                    // class -> block
    std::vector<std::uint64_t> block_fill;        // elements placed per block
    std::vector<std::optional<CanonicalForm>> form;  // per completed block
    std::optional<CanonicalForm> ref;             // form of the first completed block
    int ref_block = -1;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<std::vector<std::vector<Elem>>> found;

    Search(const Group& g, int kk, std::uint64_t budget_)
        : G(g), k(kk), target((g.order() - 1) / static_cast<std::uint64_t>(kk)), budget(budget_) {
        classes = pair_classes(g);
        assigned.assign(classes.size(), -1);
        block_fill.assign(static_cast<std::size_t>(k), 0);
        form.assign(static_cast<std::size_t>(k), std::nullopt);
    }

    std::size_t class_size(std::size_t ci) const { return classes[ci].rep == classes[ci].mate ? 1 : 2; }

    std::vector<Elem> block_elems(int b) const {
        std::vector<Elem> v;
        for (std::size_t ci = 0; ci < classes.size(); ++ci)
            if (assigned[ci] == b) {
                v.push_back(classes[ci].rep);
                if (classes[ci].mate != classes[ci].rep) v.push_back(classes[ci].mate);
            }
        std::sort(v.begin(), v.end());
        return v;
    }

    // True while the branch is still viable; false prunes it.
    bool complete_block(int b) {
        const CanonicalForm f = canonical_form(build_cayley(G, ConnectionSet{block_elems(b)}));
        if (ref && f != *ref) return false;
        form[static_cast<std::size_t>(b)] = f;
        if (!ref) {
            ref = f;
            ref_block = b;
        }
        return true;
    }

    void uncomplete_block(int b) {
        form[static_cast<std::size_t>(b)].reset();
        if (b == ref_block) {
            ref.reset();
            ref_block = -1;
        }
    }

    bool dfs(std::size_t ci) {
        if (out_of_budget) return false;
        if (ci == classes.size()) {
            std::vector<std::vector<Elem>> parts;
            for (int b = 0; b < k; ++b) parts.push_back(block_elems(b));
            found = std::move(parts);
            return true;
        }
        const std::size_t sz = class_size(ci);
        // First-empty-block rule: a class may enter any nonempty block or the
        // first empty one, killing the k! block-relabeling symmetry.
        for (int b = 0; b < k; ++b) {
            if (b > 0 && block_fill[static_cast<std::size_t>(b) - 1] == 0) break;
            if (block_fill[static_cast<std::size_t>(b)] + sz > target) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            assigned[ci] = b;
            block_fill[static_cast<std::size_t>(b)] += sz;
            bool viable = true;
            const bool completed = block_fill[static_cast<std::size_t>(b)] == target;
            if (completed) viable = complete_block(b);
            if (viable && dfs(ci + 1)) return true;
            if (completed) uncomplete_block(b);
            block_fill[static_cast<std::size_t>(b)] -= sz;
            assigned[ci] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult brute_force_kif(const Group& G, int k, const OracleOptions& opts) {
    if (G.order() > 10) throw guard_error("oracle search guarded at group order 10");
    if (k < 2) throw precondition_error("k must be >= 2");
    OracleResult result;
    if ((G.order() - 1) % static_cast<std::uint64_t>(k) != 0) {
        result.outcome = OracleOutcome::refuted;  // parts of equal size cannot exist
        return result;
    }
    if (opts.use_census_filter && !census_filter(G, k)) {
        result.outcome = OracleOutcome::refuted;
        return result;
    }
    Search search(G, k, opts.budget);
    const bool hit = search.dfs(0);
    result.nodes = search.nodes;
    if (search.out_of_budget) {
        result.outcome = OracleOutcome::exhausted;
        return result;
    }
    if (!hit) {
        result.outcome = OracleOutcome::refuted;
        return result;
    }
    Factorization f;
    f.group = G;
    f.k = k;
    for (auto& elems : *search.found) f.parts.push_back(ConnectionSet{std::move(elems)});
    std::vector<Automorphism> witnesses;
    bool all_witnessed = true;
    for (int j = 1; j < k && all_witnessed; ++j) {
        if (auto w = ci_equivalent(G, f.parts[0], f.parts[static_cast<std::size_t>(j)]))
            witnesses.push_back(std::move(*w));
        else
            all_witnessed = false;
    }
    if (all_witnessed) f.witnesses = std::move(witnesses);
    check_factorization(f);
    result.outcome = OracleOutcome::found;
    result.factorization = std::move(f);
    return result;
}

std::optional<Automorphism> ci_equivalent(const Group& G, const ConnectionSet& S, const ConnectionSet& T) {
    std::vector<Elem> s = S.elems;
    std::vector<Elem> t = T.elems;
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    for (const Automorphism& a : enumerate_automorphisms(G))
        if (apply_automorphism(G, a, s) == t) return a;
    return std::nullopt;
}

std::vector<Group> oracle_catalog() {
    return {
        Group::catalog("Z4"),
        Group::elementary({Block{5, 1}}),
        Group::catalog("Z6"),
        Group::elementary({Block{7, 1}}),
        Group::catalog("Z8"),
        Group::catalog("Z9"),
        Group::elementary({Block{2, 2}}),
        Group::elementary({Block{2, 3}}),
        Group::elementary({Block{3, 2}}),
        Group::catalog("Q8"),
        Group::catalog("S3"),
        Group::catalog("D10"),
    };
}

}  // namespace cayfact
