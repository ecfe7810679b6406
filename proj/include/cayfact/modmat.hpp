#pragma once

#include <cstdint>
#include <vector>

namespace cayfact {

// Square matrix over GF(p), p prime. Entries are kept reduced to [0, p).
// Matrices act on column coordinate vectors; composition applies the
// rightmost factor first, so (A*B).apply(v) == A.apply(B.apply(v)).
struct ModMatrix {
    int n = 0;
    int p = 0;
    std::vector<int> a;  // row-major, size n*n

    ModMatrix() = default;
    ModMatrix(int n_, int p_);

    static ModMatrix identity(int n, int p);

    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

    ModMatrix operator*(const ModMatrix& rhs) const;
    ModMatrix operator-(const ModMatrix& rhs) const;
    ModMatrix pow(std::uint64_t e) const;
    std::vector<int> apply(const std::vector<int>& v) const;

    int det() const;  // determinant mod p
    bool invertible() const { return det() != 0; }
    bool is_identity() const;

    // Least e >= 1 with M^e = I. Throws guard_error past `cap` iterations
    // (also for singular matrices, which never reach the identity).
    std::uint64_t order(std::uint64_t cap) const;

    bool operator==(const ModMatrix&) const = default;
};

// x^e mod m for m prime or not; used for inverses via Fermat when m is prime.
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

}  // namespace cayfact
