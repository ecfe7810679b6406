#include "cayfact/field.hpp"

#include <algorithm>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

// Polynomials are coefficient vectors, lowest degree first, not necessarily
// normalized; deg is the index of the last nonzero coefficient.
int poly_deg(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of f by a monic divisor m over GF(p).
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& m, int p) {
    const int dm = poly_deg(m);
    for (int d = poly_deg(f); d >= dm; d = poly_deg(f)) {
        const int lead = f[static_cast<std::size_t>(d)];
        for (int i = 0; i <= dm; ++i) {
            auto& c = f[static_cast<std::size_t>(d - dm + i)];
            c = static_cast<int>((c - static_cast<long long>(lead) * m[static_cast<std::size_t>(i)] % p + p) % p);
        }
    }
    return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void check_pn(int p, int n) {
    if (n < 1) throw precondition_error("field degree must be >= 1");
    if (p < 2) throw precondition_error("field characteristic must be a prime >= 2");
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) throw precondition_error("field characteristic " + std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > FieldRep::max_order) throw guard_error("field order exceeds 2^20");
    }
}

bool companion_is_primitive(const ModMatrix& gamma, std::uint64_t m,
                            const std::vector<std::pair<std::uint64_t, int>>& fac) {
    if (!gamma.pow(m).is_identity()) return false;
    for (const auto& [q, e] : fac) {
        (void)e;
        if (gamma.pow(m / q).is_identity()) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, int>> fac;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        fac.emplace_back(d, e);
    }
    if (m > 1) fac.emplace_back(m, 1);
    return fac;
}

ModMatrix companion_matrix(int p, const std::vector<int>& poly) {
    const int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || poly[static_cast<std::size_t>(n)] != 1)
        throw precondition_error("companion matrix needs a monic polynomial of degree >= 1");
    ModMatrix m(n, p);
    for (int j = 0; j + 1 < n; ++j) m.at(j + 1, j) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = (p - poly[static_cast<std::size_t>(i)] % p) % p;
    return m;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
    const int n = poly_deg(poly);
    if (n < 1) return false;
    if (n == 1) return true;
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int d = 1; 2 * d <= n; ++d) {
        const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), d);
        for (std::uint64_t ctr = 0; ctr < total; ++ctr) {
            std::vector<int> div(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t v = ctr;
            for (int i = 0; i < d; ++i) {
                div[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(p));
                v /= static_cast<std::uint64_t>(p);
            }
            div[static_cast<std::size_t>(d)] = 1;
            if (poly_deg(poly_rem(poly, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> find_primitive_polynomial(int p, int n) {
    check_pn(p, n);
    const std::uint64_t q = ipow(static_cast<std::uint64_t>(p), n);
    const std::uint64_t m = q - 1;
    const auto fac = factorize(m);
    // Candidates ordered by (c_{n-1}, .., c_0) ascending — the low-degree
    // coefficient varies fastest. This picks the classical table polynomials:
    // x^3+x+1 for GF(8), x^2+x+2 for GF(9), x^3+2x+1 for GF(27).
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (std::uint64_t ctr = 0; ctr < q; ++ctr) {
        std::uint64_t v = ctr;
        for (int i = 0; i < n; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (c[0] == 0) continue;  // singular companion, cannot have full order
        std::vector<int> poly = c;
        poly.push_back(1);
        if (companion_is_primitive(companion_matrix(p, poly), m, fac)) return poly;
    }
    throw construction_error("no primitive polynomial found (unreachable for prime p)");
}

FieldRep FieldRep::make(int p, int n) {
    return from_poly(p, n, find_primitive_polynomial(p, n));
}

FieldRep FieldRep::from_poly(int p, int n, std::vector<int> poly) {
    check_pn(p, n);
    if (poly.size() != static_cast<std::size_t>(n) + 1)
        throw precondition_error("polynomial must have n+1 coefficients");
    if (poly.back() != 1) throw precondition_error("polynomial must be monic");
    for (int c : poly)
        if (c < 0 || c >= p) throw precondition_error("polynomial coefficient out of range [0, p)");
    FieldRep f;
    f.p = p;
    f.n = n;
    f.poly = std::move(poly);
    f.gamma = companion_matrix(p, f.poly);
    f.q = ipow(static_cast<std::uint64_t>(p), n);
    const std::uint64_t m = f.q - 1;
    if (m == 0) throw precondition_error("field must have at least two elements");
    if (!is_irreducible(p, f.poly)) throw construction_error("polynomial is reducible over GF(p)");
    if (!companion_is_primitive(f.gamma, m, factorize(m)))
        throw construction_error("polynomial is irreducible but not primitive (root order < p^n - 1)");
    return f;
}

Group FieldRep::additive_group() const { return Group::elementary({Block{p, n}}); }

Automorphism singer_generator(const FieldRep& f) { return Automorphism::linear({f.gamma}); }

std::vector<std::uint32_t> discrete_log_table(const FieldRep& f) {
    const std::uint64_t m = f.q - 1;
    std::vector<std::uint32_t> log(f.q, static_cast<std::uint32_t>(m));
    std::vector<int> v(static_cast<std::size_t>(f.n), 0);
    v[0] = 1;  // base point e_0
    auto encode = [&](const std::vector<int>& w) {
        std::uint64_t id = 0;
        for (std::size_t i = w.size(); i-- > 0;) id = id * static_cast<std::uint64_t>(f.p) + static_cast<std::uint64_t>(w[i]);
        return id;
    };
    for (std::uint64_t j = 0; j < m; ++j) {
        const std::uint64_t id = encode(v);
        if (id == 0 || log[id] != m)
            throw construction_error("Singer orbit revisited an element; gamma is not primitive");
        log[id] = static_cast<std::uint32_t>(j);
        v = f.gamma.apply(v);
    }
    if (encode(v) != 1) throw construction_error("Singer orbit did not close at the base point");
    return log;
}

}  // namespace cayfact
