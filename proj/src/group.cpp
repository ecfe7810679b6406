#include "cayfact/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// Dihedral group of order 2n: element t*n + a encodes r^a s^t with s r = r^-1 s.
std::vector<std::vector<int>> dihedral_table(int n) {
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const int a = x % n, b = x / n;
            const int c = y % n, d = y / n;
            const int e = (a + (b ? n - c : c)) % n;
            t[x][y] = ((b + d) % 2) * n + e;
        }
    return t;
}

std::vector<std::string> dihedral_labels(int n) {
    std::vector<std::string> lab;
    for (int a = 0; a < n; ++a) lab.push_back(a == 0 ? "e" : "r" + std::to_string(a));
    for (int a = 0; a < n; ++a) lab.push_back(a == 0 ? "s" : "sr" + std::to_string(a));
    return lab;
}

// Quaternion group: element 2u + s encodes (-1)^s * q_u with (q_0,..,q_3) = (1,i,j,k).
std::vector<std::vector<int>> quaternion_table() {
    auto unit_mul = [](int u, int v) -> std::pair<int, int> {  // (sign flip, unit)
        if (u == 0) return {0, v};
        if (v == 0) return {0, u};
        if (u == v) return {1, 0};
        const bool cyclic = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
        return {cyclic ? 0 : 1, 6 - u - v};
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const auto [flip, unit] = unit_mul(x / 2, y / 2);
            const int sign = (x % 2) ^ (y % 2) ^ flip;
            t[x][y] = 2 * unit + sign;
        }
    return t;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> lab;
    for (int i = 0; i < n; ++i) lab.push_back(std::to_string(i));
    return lab;
}

}  // namespace

Group Group::elementary(std::vector<Block> blocks) {
    if (blocks.empty()) throw precondition_error("elementary product needs at least one block");
    Group g;
    g.kind_ = GroupKind::elementary_product;
    g.blocks_ = std::move(blocks);
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < g.blocks_.size(); ++i) {
        const auto& b = g.blocks_[i];
        if (b.r < 1) throw precondition_error("block rank must be >= 1");
        if (!is_prime(static_cast<std::uint64_t>(b.p)))
            throw precondition_error("block modulus " + std::to_string(b.p) + " is not prime");
        for (std::size_t j = 0; j < i; ++j)
            if (g.blocks_[j].p == b.p)
                throw precondition_error("block primes must be pairwise distinct");
        for (int t = 0; t < b.r; ++t) {
            if (order > (std::uint64_t{1} << 32) / static_cast<std::uint64_t>(b.p))
                throw guard_error("group order exceeds 2^32");
            order *= static_cast<std::uint64_t>(b.p);
            g.radix_.push_back(b.p);
        }
    }
    g.order_ = order;
    return g;
}

Group Group::from_table(std::string name, const std::vector<std::vector<int>>& table,
                        std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw precondition_error("empty table");
    if (n > max_table_order) throw guard_error("table order exceeds " + std::to_string(max_table_order));
    for (const auto& row : table)
        if (row.size() != n) throw precondition_error("table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw precondition_error("table entry out of range");
    for (std::size_t j = 0; j < n; ++j)
        if (table[0][j] != static_cast<int>(j) || table[j][0] != static_cast<int>(j))
            throw precondition_error("index 0 is not a two-sided identity");
    for (std::size_t i = 0; i < n; ++i) {  // Latin square: rows and columns are permutations
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (row_seen[table[i][j]]++) throw precondition_error("row " + std::to_string(i) + " repeats an entry");
            if (col_seen[table[j][i]]++) throw precondition_error("column " + std::to_string(i) + " repeats an entry");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw precondition_error("table is not associative");

    Group g;
    g.kind_ = GroupKind::small_table;
    g.order_ = n;
    g.name_ = std::move(name);
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = static_cast<std::uint8_t>(table[i][j]);
    g.inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == 0) g.inv_[i] = static_cast<std::uint8_t>(j);
    g.labels_ = labels.empty() ? default_labels(static_cast<int>(n)) : std::move(labels);
    if (g.labels_.size() != n) throw precondition_error("label count does not match table order");
    return g;
}

const std::vector<std::string>& Group::catalog_names() {
    static const std::vector<std::string> names = {"Z4", "Z6", "Z8", "Z9", "Q8", "S3", "D10"};
    return names;
}

bool Group::is_catalog_name(std::string_view name) {
    const auto& names = catalog_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Group Group::catalog(std::string_view name) {
    if (name == "Z4") return from_table("Z4", cyclic_table(4));
    if (name == "Z6") return from_table("Z6", cyclic_table(6));
    if (name == "Z8") return from_table("Z8", cyclic_table(8));
    if (name == "Z9") return from_table("Z9", cyclic_table(9));
    if (name == "Q8")
        return from_table("Q8", quaternion_table(), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    if (name == "S3") return from_table("S3", dihedral_table(3), dihedral_labels(3));
    if (name == "D10") return from_table("D10", dihedral_table(5), dihedral_labels(5));
    throw precondition_error("unknown catalog group: " + std::string(name));
}

std::uint64_t Group::block_order(int bi) const {
    const auto& b = blocks_.at(static_cast<std::size_t>(bi));
    std::uint64_t o = 1;
    for (int t = 0; t < b.r; ++t) o *= static_cast<std::uint64_t>(b.p);
    return o;
}

std::pair<int, int> Group::block_span(int bi) const {
    int off = 0;
    for (int i = 0; i < bi; ++i) off += blocks_[static_cast<std::size_t>(i)].r;
    return {off, blocks_.at(static_cast<std::size_t>(bi)).r};
}

void Group::check_element(Elem g) const {
    if (g >= order_) throw precondition_error("element id " + std::to_string(g) + " out of range");
}

std::vector<int> Group::coords(Elem g) const {
    if (kind_ != GroupKind::elementary_product)
        throw precondition_error("coordinates are defined for elementary products only");
    check_element(g);
    std::vector<int> c(radix_.size());
    std::uint64_t v = g;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
        c[i] = static_cast<int>(v % static_cast<std::uint64_t>(radix_[i]));
        v /= static_cast<std::uint64_t>(radix_[i]);
    }
    return c;
}

Elem Group::from_coords(const std::vector<int>& c) const {
    if (kind_ != GroupKind::elementary_product)
        throw precondition_error("coordinates are defined for elementary products only");
    if (c.size() != radix_.size()) throw precondition_error("coordinate vector length mismatch");
    std::uint64_t v = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) {
        if (c[i] < 0 || c[i] >= radix_[i]) throw precondition_error("coordinate out of range");
        v = v * static_cast<std::uint64_t>(radix_[i]) + static_cast<std::uint64_t>(c[i]);
    }
    return static_cast<Elem>(v);
}

Elem Group::mul(Elem a, Elem b) const {
    check_element(a);
    check_element(b);
    if (kind_ == GroupKind::small_table) return table_[static_cast<std::size_t>(a) * order_ + b];
    std::uint64_t va = a, vb = b, out = 0, w = 1;
    for (int r : radix_) {
        const std::uint64_t ru = static_cast<std::uint64_t>(r);
        out += (va % ru + vb % ru) % ru * w;
        va /= ru;
        vb /= ru;
        w *= ru;
    }
    return static_cast<Elem>(out);
}

Elem Group::inv(Elem a) const {
    check_element(a);
    if (kind_ == GroupKind::small_table) return inv_[a];
    std::uint64_t va = a, out = 0, w = 1;
    for (int r : radix_) {
        const std::uint64_t ru = static_cast<std::uint64_t>(r);
        const std::uint64_t d = va % ru;
        out += (d ? ru - d : 0) * w;
        va /= ru;
        w *= ru;
    }
    return static_cast<Elem>(out);
}

Elem Group::power(Elem g, std::uint64_t e) const {
    check_element(g);
    Elem acc = 0, base = g;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int Group::element_order(Elem g) const {
    check_element(g);
    if (kind_ == GroupKind::small_table) {
        int o = 1;
        Elem x = g;
        while (x != 0) {
            x = mul(x, g);
            ++o;
        }
        return o;
    }
    // Each nonzero block contributes a factor p; block primes are distinct.
    std::uint64_t v = g;
    long long o = 1;
    std::size_t digit = 0;
    for (const auto& b : blocks_) {
        bool nonzero = false;
        for (int t = 0; t < b.r; ++t, ++digit) {
            if (v % static_cast<std::uint64_t>(radix_[digit]) != 0) nonzero = true;
            v /= static_cast<std::uint64_t>(radix_[digit]);
        }
        if (nonzero) o *= b.p;
    }
    return static_cast<int>(o);
}

std::map<int, std::uint64_t> Group::order_census() const {
    std::map<int, std::uint64_t> census;
    if (kind_ == GroupKind::small_table) {
        for (Elem g = 0; g < order_; ++g) ++census[element_order(g)];
        return census;
    }
    if (order_ > 1'000'000) throw guard_error("order census guarded at 10^6 elements");
    // Elements whose nonzero blocks are exactly T have order prod_{T} p and
    // count prod_{T} (p^r - 1); sum over block subsets.
    const std::size_t m = blocks_.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        long long ord = 1;
        std::uint64_t cnt = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                ord *= blocks_[i].p;
                cnt *= block_order(static_cast<int>(i)) - 1;
            }
        census[static_cast<int>(ord)] += cnt;
    }
    return census;
}

std::optional<Elem> Group::element_by_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
}

bool Group::operator==(const Group& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == GroupKind::elementary_product) return blocks_ == o.blocks_;
    return table_ == o.table_;
}

std::string Group::describe() const {
    if (kind_ == GroupKind::small_table) return name_.empty() ? "table[" + std::to_string(order_) + "]" : name_;
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << " x ";
        os << "Z_" << blocks_[i].p;
        if (blocks_[i].r > 1) os << "^" << blocks_[i].r;
    }
    return os.str();
}

// ----- automorphisms -----

Automorphism Automorphism::linear(std::vector<ModMatrix> ms) {
    Automorphism a;
    a.kind = Kind::block_linear;
    a.matrices = std::move(ms);
    return a;
}

Automorphism Automorphism::permutation_of(std::vector<Elem> p) {
    Automorphism a;
    a.kind = Kind::permutation;
    a.perm = std::move(p);
    return a;
}

Automorphism Automorphism::identity_for(const Group& G) {
    if (G.kind() == GroupKind::elementary_product) {
        std::vector<ModMatrix> ms;
        for (int i = 0; i < G.block_count(); ++i)
            ms.push_back(ModMatrix::identity(G.blocks()[static_cast<std::size_t>(i)].r,
                                             G.blocks()[static_cast<std::size_t>(i)].p));
        return linear(std::move(ms));
    }
    std::vector<Elem> p(G.order());
    std::iota(p.begin(), p.end(), 0u);
    return permutation_of(std::move(p));
}

Elem apply_automorphism(const Group& G, const Automorphism& a, Elem g) {
    G.check_element(g);
    if (a.kind == Automorphism::Kind::permutation) {
        if (a.perm.size() != G.order()) throw precondition_error("permutation length mismatch");
        return a.perm[g];
    }
    if (G.kind() != GroupKind::elementary_product)
        throw precondition_error("block-linear automorphism applied to a table group");
    if (static_cast<int>(a.matrices.size()) != G.block_count())
        throw precondition_error("matrix count does not match block count");
    std::vector<int> c = G.coords(g);
    std::vector<int> out(c.size());
    for (int bi = 0; bi < G.block_count(); ++bi) {
        const auto [off, len] = G.block_span(bi);
        const ModMatrix& m = a.matrices[static_cast<std::size_t>(bi)];
        if (m.n != len || m.p != G.blocks()[static_cast<std::size_t>(bi)].p)
            throw precondition_error("matrix shape does not match block");
        std::vector<int> v(c.begin() + off, c.begin() + off + len);
        std::vector<int> w = m.apply(v);
        std::copy(w.begin(), w.end(), out.begin() + off);
    }
    return G.from_coords(out);
}

std::vector<Elem> apply_automorphism(const Group& G, const Automorphism& a, const std::vector<Elem>& set) {
    std::vector<Elem> out;
    out.reserve(set.size());
    for (Elem g : set) out.push_back(apply_automorphism(G, a, g));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_automorphism(const Group& G, const Automorphism& a, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.kind == Automorphism::Kind::block_linear) {
        if (G.kind() != GroupKind::elementary_product)
            return fail("block-linear automorphism on a table group");
        if (static_cast<int>(a.matrices.size()) != G.block_count()) return fail("matrix count mismatch");
        for (int bi = 0; bi < G.block_count(); ++bi) {
            const auto& b = G.blocks()[static_cast<std::size_t>(bi)];
            const ModMatrix& m = a.matrices[static_cast<std::size_t>(bi)];
            if (m.n != b.r || m.p != b.p) return fail("matrix shape mismatch at block " + std::to_string(bi));
            for (int v : m.a)
                if (v < 0 || v >= m.p) return fail("matrix entry out of range at block " + std::to_string(bi));
            if (!m.invertible()) return fail("matrix singular at block " + std::to_string(bi));
        }
        return true;
    }
    if (a.perm.size() != G.order()) return fail("permutation length mismatch");
    if (G.order() > 4096) return fail("permutation automorphism check guarded at order 4096");
    std::vector<char> seen(G.order(), 0);
    for (Elem v : a.perm) {
        if (v >= G.order()) return fail("permutation value out of range");
        if (seen[v]++) return fail("permutation is not a bijection");
    }
    if (a.perm[0] != 0) return fail("permutation does not fix the identity");
    for (Elem x = 0; x < G.order(); ++x)
        for (Elem y = 0; y < G.order(); ++y)
            if (a.perm[G.mul(x, y)] != G.mul(a.perm[x], a.perm[y]))
                return fail("permutation is not a homomorphism");
    return true;
}

Automorphism compose(const Group& G, const Automorphism& a, const Automorphism& b) {
    if (a.kind != b.kind) throw precondition_error("cannot compose automorphisms of different kinds");
    if (a.kind == Automorphism::Kind::block_linear) {
        if (a.matrices.size() != b.matrices.size()) throw precondition_error("block count mismatch");
        std::vector<ModMatrix> ms;
        for (std::size_t i = 0; i < a.matrices.size(); ++i) ms.push_back(a.matrices[i] * b.matrices[i]);
        return Automorphism::linear(std::move(ms));
    }
    if (a.perm.size() != G.order() || b.perm.size() != G.order())
        throw precondition_error("permutation length mismatch");
    std::vector<Elem> p(G.order());
    for (Elem g = 0; g < G.order(); ++g) p[g] = a.perm[b.perm[g]];
    return Automorphism::permutation_of(std::move(p));
}

Automorphism automorphism_power(const Group& G, const Automorphism& a, std::uint64_t e) {
    Automorphism acc = Automorphism::identity_for(G);
    Automorphism base = a;
    while (e) {
        if (e & 1) acc = compose(G, acc, base);
        base = compose(G, base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t automorphism_order(const Group& G, const Automorphism& a) {
    if (a.kind == Automorphism::Kind::permutation) {
        if (a.perm.size() != G.order()) throw precondition_error("permutation length mismatch");
        std::uint64_t o = 1;
        std::vector<char> seen(G.order(), 0);
        for (Elem s = 0; s < G.order(); ++s) {
            if (seen[s]) continue;
            std::uint64_t len = 0;
            for (Elem x = s; !seen[x]; x = a.perm[x]) {
                seen[x] = 1;
                ++len;
            }
            o = std::lcm(o, len);
        }
        return o;
    }
    std::uint64_t o = 1;
    for (const auto& m : a.matrices) o = std::lcm(o, m.order(std::uint64_t{1} << 21));
    return o;
}

namespace {

std::vector<Automorphism> enumerate_table_automorphisms(const Group& G) {
    const int n = static_cast<int>(G.order());
    // Greedy generating sequence: repeatedly add the smallest element outside
    // the closure of what we have.
    auto closure_of = [&](const std::vector<Elem>& gens) {
        std::vector<char> in(n, 0);
        in[0] = 1;
        std::vector<Elem> q{0};
        for (std::size_t qi = 0; qi < q.size(); ++qi)
            for (Elem g : gens) {
                const Elem x = G.mul(q[qi], g);
                if (!in[x]) {
                    in[x] = 1;
                    q.push_back(x);
                }
            }
        return in;
    };
    std::vector<Elem> gens;
    std::vector<char> cl = closure_of(gens);
    for (;;) {
        Elem next = 0;
        bool full = true;
        for (Elem g = 1; g < static_cast<Elem>(n); ++g)
            if (!cl[g]) {
                next = g;
                full = false;
                break;
            }
        if (full) break;
        gens.push_back(next);
        cl = closure_of(gens);
    }

    std::vector<int> ord(n);
    for (Elem g = 0; g < static_cast<Elem>(n); ++g) ord[g] = G.element_order(g);

    std::vector<Automorphism> result;
    std::vector<Elem> img(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == gens.size()) {
            // Extend generator images to a full map by closure; conflicts kill it.
            std::vector<int> phi(n, -1);
            phi[0] = 0;
            std::vector<Elem> q{0};
            for (std::size_t qi = 0; qi < q.size(); ++qi)
                for (std::size_t t = 0; t < gens.size(); ++t) {
                    const Elem xn = G.mul(q[qi], gens[t]);
                    const Elem yn = G.mul(static_cast<Elem>(phi[q[qi]]), img[t]);
                    if (phi[xn] < 0) {
                        phi[xn] = static_cast<int>(yn);
                        q.push_back(xn);
                    } else if (phi[xn] != static_cast<int>(yn)) {
                        return;
                    }
                }
            std::vector<Elem> perm(n);
            std::vector<char> seen(n, 0);
            for (int x = 0; x < n; ++x) {
                if (phi[x] < 0 || seen[phi[x]]) return;
                seen[phi[x]] = 1;
                perm[static_cast<std::size_t>(x)] = static_cast<Elem>(phi[x]);
            }
            Automorphism a = Automorphism::permutation_of(std::move(perm));
            if (is_valid_automorphism(G, a)) result.push_back(std::move(a));
            return;
        }
        for (Elem c = 1; c < static_cast<Elem>(n); ++c) {
            if (ord[c] != ord[gens[gi]]) continue;
            img[gi] = c;
            rec(gi + 1);
        }
    };
    rec(0);
    return result;
}

std::vector<Automorphism> enumerate_single_block_automorphisms(const Group& G) {
    const Block b = G.blocks()[0];
    const int r = b.r, p = b.p;
    const std::size_t cells = static_cast<std::size_t>(r) * r;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(p);
    std::vector<Automorphism> result;
    for (std::uint64_t ctr = 0; ctr < total; ++ctr) {
        ModMatrix m(r, p);
        std::uint64_t v = ctr;
        for (std::size_t i = 0; i < cells; ++i) {
            m.a[i] = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (m.invertible()) result.push_back(Automorphism::linear({m}));
    }
    return result;
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const Group& G) {
    if (G.kind() == GroupKind::small_table) return enumerate_table_automorphisms(G);
    if (G.block_count() != 1)
        throw guard_error("automorphism enumeration supports single-block products only");
    if (G.order() > 16) throw guard_error("automorphism enumeration guarded at block order 16");
    return enumerate_single_block_automorphisms(G);
}

}  // namespace cayfact
