#include "cayfact/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cayfact/errors.hpp"

namespace cayfact {

std::vector<PairClass> pair_classes(const Group& G) {
    if (G.order() > (std::uint64_t{1} << 20)) throw guard_error("pair class enumeration guarded at 2^20");
    std::vector<PairClass> classes;
    for (Elem g = 1; g < G.order(); ++g) {
        const Elem h = G.inv(g);
        if (g <= h) classes.push_back({g, h});
    }
    return classes;
}

void check_factorization(const Factorization& f) {
    const Group& G = f.group;
    const std::uint64_t n = G.order();
    if (n < 2) throw construction_error("factorization over a trivial group");
    if (f.k < 2) throw construction_error("factorization needs k >= 2");
    const std::uint64_t gstar = n - 1;
    if (static_cast<std::uint64_t>(f.parts.size()) != static_cast<std::uint64_t>(f.k))
        throw construction_error("part count differs from k");
    if (gstar % static_cast<std::uint64_t>(f.k) != 0)
        throw construction_error("k does not divide |G| - 1");
    const std::uint64_t part_size = gstar / static_cast<std::uint64_t>(f.k);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        const auto& elems = f.parts[i].elems;
        if (elems.size() != part_size)
            throw construction_error("part " + std::to_string(i) + " has size " + std::to_string(elems.size()) +
                                     ", expected " + std::to_string(part_size));
        for (std::size_t t = 0; t < elems.size(); ++t) {
            const Elem g = elems[t];
            G.check_element(g);
            if (g == G.identity()) throw construction_error("part " + std::to_string(i) + " contains the identity");
            if (t && elems[t] <= elems[t - 1])
                throw construction_error("part " + std::to_string(i) + " is not sorted/unique");
            if (seen[g]) throw construction_error("element " + std::to_string(g) + " appears in two parts");
            seen[g] = 1;
        }
        for (Elem g : elems)
            if (!std::binary_search(elems.begin(), elems.end(), G.inv(g)))
                throw construction_error("part " + std::to_string(i) + " is not inverse-closed at element " +
                                         std::to_string(g));
    }
    for (Elem g = 1; g < n; ++g)
        if (!seen[g]) throw construction_error("element " + std::to_string(g) + " is covered by no part");
    if (!f.witnesses.empty()) {
        if (f.witnesses.size() != static_cast<std::size_t>(f.k) - 1)
            throw construction_error("witness count must be k - 1");
        for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
            std::string why;
            if (!is_valid_automorphism(G, f.witnesses[i], &why))
                throw construction_error("witness " + std::to_string(i + 1) + " invalid: " + why);
            if (apply_automorphism(G, f.witnesses[i], f.parts[0].elems) != f.parts[i + 1].elems)
                throw construction_error("witness " + std::to_string(i + 1) +
                                         " does not map part 0 onto part " + std::to_string(i + 1));
        }
    }
}

// ----- decision -----

namespace {

BlockReason block_reason(const Block& b, int k) {
    BlockReason r;
    r.p = b.p;
    r.r = b.r;
    std::uint64_t order = 1;
    for (int t = 0; t < b.r; ++t) order *= static_cast<std::uint64_t>(b.p);
    r.block_order_minus_one = order - 1;
    r.required_divisor = (b.p == 2) ? static_cast<std::uint64_t>(k) : 2 * static_cast<std::uint64_t>(k);
    r.divides = r.block_order_minus_one % r.required_divisor == 0;
    std::ostringstream os;
    os << "Z_" << b.p;
    if (b.r > 1) os << "^" << b.r;
    r.block = os.str();
    return r;
}

bool is_abelian(const Group& G) {
    for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = a + 1; b < G.order(); ++b)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

// For an abelian table group whose element orders are all squarefree, each
// Sylow subgroup is elementary, so the group is a product of blocks
// (p, v_p(|G|)).
std::vector<Block> elementary_blocks_of_table(const Group& G) {
    std::vector<Block> blocks;
    std::uint64_t n = G.order();
    for (const auto& [p, e] : factorize(n)) blocks.push_back({static_cast<int>(p), e});
    return blocks;
}

}  // namespace

Decision decide_kif(const Group& G, int k) {
    if (k < 2) throw precondition_error("k must be >= 2");
    Decision d;
    if (G.kind() == GroupKind::elementary_product) {
        d.ok = true;
        for (const Block& b : G.blocks()) {
            d.block_reasons.push_back(block_reason(b, k));
            d.ok = d.ok && d.block_reasons.back().divides;
        }
        return d;
    }
    const auto census = G.order_census();
    const bool squarefree_orders = std::all_of(census.begin(), census.end(), [](const auto& kv) {
        const auto fac = factorize(static_cast<std::uint64_t>(kv.first));
        return std::all_of(fac.begin(), fac.end(), [](const auto& pe) { return pe.second == 1; });
    });
    if (is_abelian(G)) {
        if (squarefree_orders) {
            d.ok = true;
            for (const Block& b : elementary_blocks_of_table(G)) {
                d.block_reasons.push_back(block_reason(b, k));
                d.ok = d.ok && d.block_reasons.back().divides;
            }
            d.detail = "table group recognized as a product of elementary abelian blocks";
            return d;
        }
        d.ok = false;
        d.tag = "Z489";
        d.detail = "abelian group with a non-elementary Sylow subgroup (an element of order 4, 8 or 9)";
        return d;
    }
    d.ok = false;
    const bool quaternion_shape = G.order() == 8 && census.count(2) && census.at(2) == 1;
    d.tag = quaternion_shape ? "Case2" : "Case3";
    d.detail = quaternion_shape ? "nonabelian group of quaternion shape (single involution)"
                                : "nonabelian group";
    return d;
}

// ----- cyclotomic construction -----

Factorization cyclotomic_factorization(const FieldRep& f, int k) {
    if (k < 2) throw precondition_error("k must be >= 2");
    const std::uint64_t m = f.q - 1;
    const std::uint64_t required = (f.p == 2) ? static_cast<std::uint64_t>(k) : 2 * static_cast<std::uint64_t>(k);
    if (m % required != 0)
        throw precondition_error("coset construction needs " + std::to_string(required) + " | " +
                                 std::to_string(m) + " for p = " + std::to_string(f.p));
    const auto log = discrete_log_table(f);
    Factorization fact;
    fact.group = f.additive_group();
    fact.k = k;
    fact.parts.assign(static_cast<std::size_t>(k), {});
    for (Elem v = 1; v < f.q; ++v)
        fact.parts[log[v] % static_cast<std::uint32_t>(k)].elems.push_back(v);
    for (auto& part : fact.parts) std::sort(part.elems.begin(), part.elems.end());
    for (int j = 1; j < k; ++j)
        fact.witnesses.push_back(Automorphism::linear({f.gamma.pow(static_cast<std::uint64_t>(j))}));
    check_factorization(fact);
    return fact;
}

Factorization cyclotomic_factorization(int p, int n, int k) {
    return cyclotomic_factorization(FieldRep::make(p, n), k);
}

// ----- rotational construction -----

Factorization rotational_factorization(const Group& G, const Automorphism& sigma, int k) {
    if (k < 2) throw precondition_error("k must be >= 2");
    if (G.order() < 2) throw precondition_error("group is trivial");
    std::string why;
    if (!is_valid_automorphism(G, sigma, &why)) throw precondition_error("sigma invalid: " + why);
    const std::uint64_t n = G.order();

    std::vector<Elem> image(n);
    for (Elem g = 0; g < n; ++g) image[g] = apply_automorphism(G, sigma, g);
    for (Elem g = 1; g < n; ++g)
        if (image[g] == g) throw precondition_error("sigma is not fixed-point-free (fixes " + std::to_string(g) + ")");

    const std::uint64_t o = automorphism_order(G, sigma);
    std::uint64_t t = o;
    while (t % static_cast<std::uint64_t>(k) == 0) t /= static_cast<std::uint64_t>(k);
    if (t != 1 || o == 1)
        throw precondition_error("order of sigma is " + std::to_string(o) + ", not a positive power of k = " +
                                 std::to_string(k));

    if (k % 2 == 0 && 2 * static_cast<std::uint64_t>(k) != n - 1) {
        const Automorphism sigma2 = compose(G, sigma, sigma);
        for (Elem g = 1; g < n; ++g)
            if (apply_automorphism(G, sigma2, g) == g)
                throw precondition_error("sigma^2 is not fixed-point-free (required for even k)");
    }

    // sigma acts on the pair classes {g, g^-1}.
    const auto classes = pair_classes(G);
    const std::size_t c = classes.size();
    std::vector<std::size_t> class_of(n, c);
    for (std::size_t i = 0; i < c; ++i) {
        class_of[classes[i].rep] = i;
        class_of[classes[i].mate] = i;
    }
    std::vector<std::size_t> cimg(c);
    for (std::size_t i = 0; i < c; ++i) cimg[i] = class_of[image[classes[i].rep]];
    std::vector<std::size_t> cimg_k(c);  // sigma^k on classes
    for (std::size_t i = 0; i < c; ++i) {
        std::size_t x = i;
        for (int j = 0; j < k; ++j) x = cimg[x];
        cimg_k[i] = x;
    }

    // Pick one <sigma^k>-suborbit per <sigma>-orbit, anchored at the orbit's
    // smallest class; the union of the chosen suborbits is part 0.
    std::vector<char> in_orbit_seen(c, 0);
    std::vector<Elem> part0;
    for (std::size_t i = 0; i < c; ++i) {
        if (in_orbit_seen[i]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t x = i; !in_orbit_seen[x]; x = cimg[x]) {
            in_orbit_seen[x] = 1;
            orbit.push_back(x);
        }
        std::vector<char> sub_seen(c, 0);
        int suborbits = 0;
        for (std::size_t x : orbit)
            if (!sub_seen[x]) {
                ++suborbits;
                for (std::size_t y = x; !sub_seen[y]; y = cimg_k[y]) sub_seen[y] = 1;
            }
        if (suborbits != k)
            throw construction_error("suborbit count mismatch: orbit of pair class {" +
                                     std::to_string(classes[i].rep) + "," + std::to_string(classes[i].mate) +
                                     "} splits into " + std::to_string(suborbits) + " suborbits, need " +
                                     std::to_string(k));
        std::vector<char> chosen(c, 0);
        for (std::size_t y = i; !chosen[y]; y = cimg_k[y]) {
            chosen[y] = 1;
            part0.push_back(classes[y].rep);
            if (classes[y].mate != classes[y].rep) part0.push_back(classes[y].mate);
        }
    }
    std::sort(part0.begin(), part0.end());

    Factorization fact;
    fact.group = G;
    fact.k = k;
    fact.parts.resize(static_cast<std::size_t>(k));
    fact.parts[0].elems = part0;
    std::vector<Elem> cur = part0;
    for (int j = 1; j < k; ++j) {
        for (Elem& g : cur) g = image[g];
        fact.parts[static_cast<std::size_t>(j)].elems = cur;
        auto& elems = fact.parts[static_cast<std::size_t>(j)].elems;
        std::sort(elems.begin(), elems.end());
        fact.witnesses.push_back(automorphism_power(G, sigma, static_cast<std::uint64_t>(j)));
    }
    check_factorization(fact);
    return fact;
}

// ----- product lifting -----

Factorization lift_product(const Factorization& fh, const Factorization& fk) {
    if (fh.k != fk.k)
        throw precondition_error("factor count mismatch: " + std::to_string(fh.k) + " vs " + std::to_string(fk.k));
    if (fh.group.kind() != GroupKind::elementary_product || fk.group.kind() != GroupKind::elementary_product)
        throw precondition_error("product lifting requires elementary product groups");
    check_factorization(fh);
    check_factorization(fk);
    for (const Block& a : fh.group.blocks())
        for (const Block& b : fk.group.blocks())
            if (a.p == b.p) throw precondition_error("factor group orders are not coprime (shared prime " +
                                                     std::to_string(a.p) + ")");
    std::vector<Block> blocks = fh.group.blocks();
    blocks.insert(blocks.end(), fk.group.blocks().begin(), fk.group.blocks().end());
    Factorization out;
    out.group = Group::elementary(std::move(blocks));
    out.k = fh.k;
    const std::uint64_t nh = fh.group.order();
    out.parts.resize(static_cast<std::size_t>(out.k));
    for (int i = 0; i < out.k; ++i) {
        auto& elems = out.parts[static_cast<std::size_t>(i)].elems;
        for (Elem a : fh.parts[static_cast<std::size_t>(i)].elems)
            for (Elem kk = 0; kk < fk.group.order(); ++kk)
                elems.push_back(static_cast<Elem>(a + nh * kk));
        for (Elem b : fk.parts[static_cast<std::size_t>(i)].elems)
            elems.push_back(static_cast<Elem>(nh * b));
        std::sort(elems.begin(), elems.end());
    }
    if (fh.has_witnesses() && fk.has_witnesses()) {
        for (int i = 0; i + 1 < out.k; ++i) {
            std::vector<ModMatrix> ms = fh.witnesses[static_cast<std::size_t>(i)].matrices;
            const auto& kms = fk.witnesses[static_cast<std::size_t>(i)].matrices;
            ms.insert(ms.end(), kms.begin(), kms.end());
            out.witnesses.push_back(Automorphism::linear(std::move(ms)));
        }
    }
    check_factorization(out);
    return out;
}

// ----- restriction -----

Factorization restrict_to_subgroup(const Factorization& fact, const Group& H) {
    check_factorization(fact);
    const Group& G = fact.group;
    if (G.kind() != GroupKind::elementary_product || H.kind() != GroupKind::elementary_product)
        throw precondition_error("restriction requires elementary product groups");
    // Each H block must coincide with a host Sylow block.
    std::vector<int> host_block;
    for (const Block& hb : H.blocks()) {
        int found = -1;
        for (int bi = 0; bi < G.block_count(); ++bi)
            if (G.blocks()[static_cast<std::size_t>(bi)] == hb) found = bi;
        if (found < 0)
            throw precondition_error("H is not a recognized characteristic subgroup: block Z_" +
                                     std::to_string(hb.p) + "^" + std::to_string(hb.r) +
                                     " is not a Sylow block of the host group");
        host_block.push_back(found);
    }
    // Digits of the host coordinate vector that H occupies, in H digit order.
    std::vector<int> digit_map;
    for (int bi : host_block) {
        const auto [off, len] = G.block_span(bi);
        for (int d = 0; d < len; ++d) digit_map.push_back(off + d);
    }
    std::vector<char> is_h_digit(G.coords(0).size(), 0);
    for (int d : digit_map) is_h_digit[static_cast<std::size_t>(d)] = 1;

    Factorization out;
    out.group = H;
    out.k = fact.k;
    out.parts.resize(static_cast<std::size_t>(fact.k));
    for (int i = 0; i < fact.k; ++i) {
        for (Elem g : fact.parts[static_cast<std::size_t>(i)].elems) {
            const std::vector<int> c = G.coords(g);
            bool inside = true;
            for (std::size_t d = 0; d < c.size(); ++d)
                if (!is_h_digit[d] && c[d] != 0) inside = false;
            if (!inside) continue;
            std::vector<int> hc(digit_map.size());
            for (std::size_t d = 0; d < digit_map.size(); ++d) hc[d] = c[static_cast<std::size_t>(digit_map[d])];
            out.parts[static_cast<std::size_t>(i)].elems.push_back(H.from_coords(hc));
        }
        auto& elems = out.parts[static_cast<std::size_t>(i)].elems;
        std::sort(elems.begin(), elems.end());
        if (elems.empty())
            throw construction_error("restriction produced an empty part " + std::to_string(i) +
                                     "; input factorization does not restrict to H");
    }
    if (fact.has_witnesses()) {
        bool ok = true;
        std::vector<Automorphism> ws;
        for (const Automorphism& w : fact.witnesses) {
            if (w.kind != Automorphism::Kind::block_linear) {
                ok = false;  // permutation witnesses need not stabilize H; drop
                break;
            }
            std::vector<ModMatrix> ms;
            for (int bi : host_block) ms.push_back(w.matrices[static_cast<std::size_t>(bi)]);
            ws.push_back(Automorphism::linear(std::move(ms)));
        }
        if (ok) out.witnesses = std::move(ws);
    }
    check_factorization(out);
    return out;
}

// ----- end-to-end construction -----

KifConstruction construct_kif(const Group& G, int k) {
    if (k < 2) throw precondition_error("k must be >= 2");
    if (G.kind() != GroupKind::elementary_product)
        throw precondition_error("construction requires an elementary product description");
    const Decision d = decide_kif(G, k);
    if (!d.ok) {
        std::ostringstream os;
        os << "no " << k << "-factorization exists:";
        for (const auto& r : d.block_reasons)
            if (!r.divides)
                os << " block " << r.block << " fails " << r.required_divisor << " | " << r.block_order_minus_one
                   << ";";
        throw precondition_error(os.str());
    }
    KifConstruction out;
    bool first = true;
    for (const Block& b : G.blocks()) {
        out.block_fields.push_back(FieldRep::make(b.p, b.r));
        Factorization f = cyclotomic_factorization(out.block_fields.back(), k);
        out.factorization = first ? std::move(f) : lift_product(out.factorization, f);
        first = false;
    }
    check_factorization(out.factorization);
    return out;
}

}  // namespace cayfact
