#include "cayfact/modmat.hpp"

#include <algorithm>

#include "cayfact/errors.hpp"

namespace cayfact {

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    x %= m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return r;
}

ModMatrix::ModMatrix(int n_, int p_) : n(n_), p(p_), a(static_cast<std::size_t>(n_) * n_, 0) {
    if (n_ <= 0 || p_ < 2) throw precondition_error("matrix dimension and modulus must be positive");
}

ModMatrix ModMatrix::identity(int n, int p) {
    ModMatrix m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
    if (n != rhs.n || p != rhs.p) throw precondition_error("matrix shape/modulus mismatch in product");
    ModMatrix r(n, p);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const long long aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) = static_cast<int>((r.at(i, j) + aik * rhs.at(k, j)) % p);
        }
    return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& rhs) const {
    if (n != rhs.n || p != rhs.p) throw precondition_error("matrix shape/modulus mismatch in difference");
    ModMatrix r(n, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<int>((a[i] - rhs.a[i] + p) % p);
    return r;
}

ModMatrix ModMatrix::pow(std::uint64_t e) const {
    ModMatrix base = *this;
    ModMatrix r = identity(n, p);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::vector<int> ModMatrix::apply(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != n) throw precondition_error("vector length does not match matrix");
    std::vector<int> w(n, 0);
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(at(i, j)) * v[j];
        w[i] = static_cast<int>(s % p);
    }
    return w;
}

int ModMatrix::det() const {
    std::vector<int> m = a;
    auto cell = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i) * n + j]; };
    long long d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (cell(row, col) != 0) { piv = row; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(cell(piv, j), cell(col, j));
            d = (p - d % p) % p;
        }
        const int pv = cell(col, col);
        d = d * pv % p;
        const std::uint64_t inv = pow_mod(static_cast<std::uint64_t>(pv), static_cast<std::uint64_t>(p - 2),
                                          static_cast<std::uint64_t>(p));
        for (int row = col + 1; row < n; ++row) {
            const long long f = cell(row, col) * static_cast<long long>(inv) % p;
            if (!f) continue;
            for (int j = col; j < n; ++j)
                cell(row, j) = static_cast<int>((cell(row, j) - f * cell(col, j) % p + p) % p);
        }
    }
    return static_cast<int>(d % p);
}

bool ModMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::uint64_t ModMatrix::order(std::uint64_t cap) const {
    ModMatrix acc = *this;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        if (acc.is_identity()) return e;
        acc = acc * *this;
    }
    throw guard_error("matrix order exceeds cap (or matrix is singular)");
}

}  // namespace cayfact
