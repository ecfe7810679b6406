#include <doctest.h>

#include <set>

#include "cayfact/errors.hpp"
#include "cayfact/field.hpp"

using namespace cayfact;

TEST_CASE("factorize") {
    using fac = std::vector<std::pair<std::uint64_t, int>>;
    CHECK(factorize(1) == fac{});
    CHECK(factorize(12) == fac{{2, 2}, {3, 1}});
    CHECK(factorize(26) == fac{{2, 1}, {13, 1}});
    CHECK(factorize(255) == fac{{3, 1}, {5, 1}, {17, 1}});
    CHECK(factorize(97) == fac{{97, 1}});
}

TEST_CASE("primitive polynomial search is deterministic and classical") {
    // Coefficients are listed lowest degree first, leading 1 last.
    CHECK(find_primitive_polynomial(2, 2) == std::vector<int>{1, 1, 1});        // x^2+x+1
    CHECK(find_primitive_polynomial(2, 3) == std::vector<int>{1, 1, 0, 1});     // x^3+x+1
    CHECK(find_primitive_polynomial(2, 4) == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(find_primitive_polynomial(3, 2) == std::vector<int>{2, 1, 1});        // x^2+x+2
    CHECK(find_primitive_polynomial(3, 3) == std::vector<int>{1, 2, 0, 1});     // x^3+2x+1
    CHECK(find_primitive_polynomial(5, 1) == std::vector<int>{2, 1});           // x+2, root 3
    CHECK(find_primitive_polynomial(7, 1) == std::vector<int>{2, 1});           // x+2, root 5
    CHECK(find_primitive_polynomial(13, 1) == std::vector<int>{2, 1});          // x+2, root 11
}

TEST_CASE("companion matrix layout") {
    const ModMatrix g = companion_matrix(3, {2, 1, 1});
    CHECK(g.n == 2);
    CHECK(g.a == std::vector<int>{0, 1, 1, 2});  // row-major [[0,1],[1,2]]
    CHECK(companion_matrix(13, {2, 1}).a == std::vector<int>{11});
    CHECK_THROWS_AS(companion_matrix(3, {2, 1, 2}), precondition_error);  // not monic
    CHECK_THROWS_AS(companion_matrix(3, {1}), precondition_error);        // degree 0
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible(2, {1, 1, 1}));       // x^2+x+1
    CHECK(!is_irreducible(2, {1, 0, 1}));      // x^2+1 = (x+1)^2
    CHECK(is_irreducible(3, {1, 0, 1}));       // x^2+1 has no root mod 3
    CHECK(!is_irreducible(3, {2, 0, 1}));      // x^2+2 = (x+1)(x+2)
    CHECK(is_irreducible(5, {2, 1}));          // linear
    CHECK(!is_irreducible(2, {0, 1, 1}));      // x^2+x = x(x+1)
}

TEST_CASE("field construction and validation") {
    const FieldRep f = FieldRep::make(3, 2);
    CHECK(f.p == 3);
    CHECK(f.n == 2);
    CHECK(f.q == 9);
    CHECK(f.poly == std::vector<int>{2, 1, 1});
    CHECK(f.additive_group().describe() == "Z_3^2");

    CHECK_THROWS_AS(FieldRep::make(4, 1), precondition_error);   // 4 is not prime
    CHECK_THROWS_AS(FieldRep::make(2, 0), precondition_error);   // degree < 1
    CHECK_THROWS_AS(FieldRep::make(2, 21), guard_error);         // 2^21 > 2^20

    CHECK_THROWS_AS(FieldRep::from_poly(3, 2, {2, 1}), precondition_error);      // wrong length
    CHECK_THROWS_AS(FieldRep::from_poly(3, 2, {2, 1, 2}), precondition_error);   // not monic
    CHECK_THROWS_AS(FieldRep::from_poly(3, 2, {3, 1, 1}), precondition_error);   // coeff out of range
    CHECK_THROWS_AS(FieldRep::from_poly(2, 2, {1, 0, 1}), construction_error);   // reducible
    CHECK_THROWS_AS(FieldRep::from_poly(3, 2, {1, 0, 1}), construction_error);   // order 4, not primitive
    CHECK_THROWS_AS(FieldRep::from_poly(5, 1, {0, 1}), construction_error);      // x itself: singular root
}

TEST_CASE("alternate primitive polynomials give the documented generators") {
    const FieldRep f5 = FieldRep::from_poly(5, 1, {3, 1});  // x+3, root 2
    CHECK(f5.gamma.a == std::vector<int>{2});
    const auto log5 = discrete_log_table(f5);
    CHECK(log5 == std::vector<std::uint32_t>{4, 0, 1, 3, 2});

    const FieldRep f7 = FieldRep::from_poly(7, 1, {4, 1});  // x+4, root 3
    CHECK(f7.gamma.a == std::vector<int>{3});
    const auto log7 = discrete_log_table(f7);
    CHECK(log7 == std::vector<std::uint32_t>{6, 0, 2, 1, 4, 5, 3});
}

TEST_CASE("Singer generator order and regular action") {
    for (const auto [p, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 1}, {7, 1}, {13, 1}, {3, 3}}) {
        CAPTURE(p);
        CAPTURE(n);
        const FieldRep f = FieldRep::make(p, n);
        const Group G = f.additive_group();
        const Automorphism s = singer_generator(f);
        REQUIRE(is_valid_automorphism(G, s));
        CHECK(automorphism_order(G, s) == f.q - 1);
        // Proper powers gamma^j (0 < j < q-1) are fixed-point free: both the
        // determinant criterion and the direct orbit scan must agree.
        const ModMatrix I = ModMatrix::identity(f.n, f.p);
        for (std::uint64_t j = 1; j + 1 < f.q; ++j) {
            const ModMatrix gj = f.gamma.pow(j);
            CHECK((gj - I).det() != 0);
            const Automorphism sj = automorphism_power(G, s, j);
            for (Elem v = 1; v < G.order(); ++v)
                CHECK(apply_automorphism(G, sj, v) != v);
        }
        if (p % 2 == 1) {
            // Odd characteristic: the half-order power is -I.
            const ModMatrix half = f.gamma.pow((f.q - 1) / 2);
            ModMatrix minus_I = ModMatrix(f.n, f.p);
            for (int i = 0; i < f.n; ++i) minus_I.at(i, i) = f.p - 1;
            CHECK(half == minus_I);
        }
    }
}

TEST_CASE("discrete log table enumerates the Singer orbit") {
    const FieldRep f = FieldRep::make(2, 3);
    const auto log = discrete_log_table(f);
    // Orbit of e_0 = id 1 under gamma: 1, 2, 4, 3, 6, 7, 5.
    CHECK(log == std::vector<std::uint32_t>{7, 0, 1, 3, 2, 6, 4, 5});

    const FieldRep f9 = FieldRep::make(3, 2);
    const auto log9 = discrete_log_table(f9);
    CHECK(log9 == std::vector<std::uint32_t>{8, 0, 4, 1, 7, 6, 5, 2, 3});

    const FieldRep f13 = FieldRep::make(13, 1);
    const auto log13 = discrete_log_table(f13);
    CHECK(log13 == std::vector<std::uint32_t>{12, 0, 7, 4, 2, 3, 11, 5, 9, 8, 10, 1, 6});

    // log is a bijection {nonzero ids} -> {0..q-2} and log(gamma v) = log(v) + 1.
    for (const auto [p, n] : {std::pair{2, 4}, {3, 3}, {7, 1}}) {
        const FieldRep g = FieldRep::make(p, n);
        const Group G = g.additive_group();
        const auto lg = discrete_log_table(g);
        REQUIRE(lg.size() == g.q);
        CHECK(lg[0] == g.q - 1);  // sentinel
        std::set<std::uint32_t> seen;
        for (Elem v = 1; v < G.order(); ++v) {
            CHECK(lg[v] < g.q - 1);
            seen.insert(lg[v]);
            const Elem w = apply_automorphism(G, singer_generator(g), v);
            CHECK(lg[w] == (lg[v] + 1) % (g.q - 1));
        }
        CHECK(seen.size() == g.q - 1);
    }
}
