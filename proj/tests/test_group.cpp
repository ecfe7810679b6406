#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayfact/errors.hpp"
#include "cayfact/group.hpp"

using namespace cayfact;

namespace {

// Every group axiom we rely on, checked exhaustively.
void check_group_axioms(const Group& G) {
    const Elem n = static_cast<Elem>(G.order());
    REQUIRE(G.identity() == 0);
    for (Elem a = 0; a < n; ++a) {
        CHECK(G.mul(0, a) == a);
        CHECK(G.mul(a, 0) == a);
        CHECK(G.mul(a, G.inv(a)) == 0);
        CHECK(G.mul(G.inv(a), a) == 0);
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

}  // namespace

TEST_CASE("elementary product construction and arithmetic") {
    const Group z5 = Group::elementary({{5, 1}});
    CHECK(z5.kind() == GroupKind::elementary_product);
    CHECK(z5.order() == 5);
    CHECK(z5.describe() == "Z_5");
    CHECK(z5.mul(3, 4) == 2);
    CHECK(z5.inv(2) == 3);
    CHECK(z5.power(2, 3) == 1);  // 2+2+2 = 6 = 1 mod 5

    const Group z22 = Group::elementary({{2, 2}});
    CHECK(z22.order() == 4);
    CHECK(z22.describe() == "Z_2^2");
    // id 1 = (1,0), id 2 = (0,1), id 3 = (1,1); first coordinate is least significant.
    CHECK(z22.coords(3) == std::vector<int>{1, 1});
    CHECK(z22.from_coords({0, 1}) == 2);
    CHECK(z22.mul(1, 3) == 2);
    CHECK(z22.inv(3) == 3);

    const Group g = Group::elementary({{2, 2}, {7, 1}});
    CHECK(g.order() == 28);
    CHECK(g.describe() == "Z_2^2 x Z_7");
    CHECK(g.block_count() == 2);
    CHECK(g.block_order(0) == 4);
    CHECK(g.block_order(1) == 7);
    CHECK(g.block_span(0) == std::pair<int, int>(0, 2));
    CHECK(g.block_span(1) == std::pair<int, int>(2, 1));
    // (1,1,3) has id 1 + 2*1 + 4*3 = 15.
    CHECK(g.from_coords({1, 1, 3}) == 15);
    CHECK(g.coords(15) == std::vector<int>{1, 1, 3});
    CHECK(g.mul(15, 15) == g.from_coords({0, 0, 6}));
}

TEST_CASE("elementary product rejects bad block lists") {
    CHECK_THROWS_AS(Group::elementary({}), precondition_error);
    CHECK_THROWS_AS(Group::elementary({{4, 1}}), precondition_error);   // not prime
    CHECK_THROWS_AS(Group::elementary({{5, 0}}), precondition_error);   // rank < 1
    CHECK_THROWS_AS(Group::elementary({{3, 1}, {3, 2}}), precondition_error);  // repeated prime
}

TEST_CASE("coordinate round trip and range checks") {
    const Group g = Group::elementary({{3, 2}});
    for (Elem v = 0; v < g.order(); ++v) CHECK(g.from_coords(g.coords(v)) == v);
    CHECK_THROWS_AS(g.coords(9), precondition_error);
    CHECK_THROWS_AS(g.from_coords({3, 0}), precondition_error);
    CHECK_THROWS_AS(g.from_coords({0}), precondition_error);
    const Group z9 = Group::catalog("Z9");
    CHECK_THROWS_AS(z9.coords(1), precondition_error);  // table groups have no coordinates
}

TEST_CASE("catalog groups: identity conventions and sample products") {
    for (const auto& name : Group::catalog_names()) {
        const Group g = Group::catalog(name);
        CHECK(g.kind() == GroupKind::small_table);
        CHECK(g.name() == name);
        CHECK(g.describe() == name);
    }
    CHECK_THROWS_AS(Group::catalog("Z5"), precondition_error);
    CHECK(Group::is_catalog_name("Q8"));
    CHECK(!Group::is_catalog_name("Z5"));

    const Group q8 = Group::catalog("Q8");
    CHECK(q8.labels() == std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    CHECK(q8.element_by_label("k") == Elem{6});
    CHECK(q8.element_by_label("x") == std::nullopt);
    const Elem i = *q8.element_by_label("i");
    const Elem j = *q8.element_by_label("j");
    CHECK(q8.mul(i, j) == *q8.element_by_label("k"));
    CHECK(q8.mul(j, i) == *q8.element_by_label("-k"));
    CHECK(q8.mul(i, i) == *q8.element_by_label("-1"));
    CHECK(q8.inv(i) == *q8.element_by_label("-i"));

    const Group s3 = Group::catalog("S3");
    const Elem r = *s3.element_by_label("r1");
    const Elem s = *s3.element_by_label("s");
    CHECK(s3.mul(s, r) == *s3.element_by_label("sr2"));  // s r = r^-1 s
    CHECK(s3.mul(r, s) == *s3.element_by_label("sr1"));
    CHECK(s3.inv(s) == s);
}

TEST_CASE("group axioms hold on a sample of catalog and product groups") {
    check_group_axioms(Group::catalog("Q8"));
    check_group_axioms(Group::catalog("S3"));
    check_group_axioms(Group::catalog("D10"));
    check_group_axioms(Group::elementary({{2, 3}}));
    check_group_axioms(Group::elementary({{3, 2}}));
    check_group_axioms(Group::elementary({{2, 1}, {3, 1}}));
}

TEST_CASE("element orders and order census") {
    const Group z9 = Group::catalog("Z9");
    CHECK(z9.element_order(0) == 1);
    CHECK(z9.element_order(3) == 3);
    CHECK(z9.element_order(1) == 9);
    CHECK(z9.order_census() == std::map<int, std::uint64_t>{{1, 1}, {3, 2}, {9, 6}});

    const Group z23 = Group::elementary({{2, 3}});
    for (Elem g = 1; g < z23.order(); ++g) CHECK(z23.element_order(g) == 2);
    CHECK(z23.order_census() == std::map<int, std::uint64_t>{{1, 1}, {2, 7}});

    const Group q8 = Group::catalog("Q8");
    CHECK(q8.element_order(*q8.element_by_label("-1")) == 2);
    CHECK(q8.element_order(*q8.element_by_label("i")) == 4);
    CHECK(q8.order_census() == std::map<int, std::uint64_t>{{1, 1}, {2, 1}, {4, 6}});

    const Group g = Group::elementary({{2, 2}, {7, 1}});
    CHECK(g.element_order(3) == 2);
    CHECK(g.element_order(g.from_coords({0, 0, 1})) == 7);
    CHECK(g.element_order(g.from_coords({1, 0, 1})) == 14);
    CHECK(g.order_census() ==
          std::map<int, std::uint64_t>{{1, 1}, {2, 3}, {7, 6}, {14, 18}});
}

TEST_CASE("from_table validates the table") {
    const std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    CHECK(Group::from_table("Z3", z3).order() == 3);

    CHECK_THROWS_AS(Group::from_table("", {}), precondition_error);
    CHECK_THROWS_AS(Group::from_table("bad", {{0, 1}, {1}}), precondition_error);  // not square
    CHECK_THROWS_AS(Group::from_table("bad", {{0, 1}, {1, 5}}), precondition_error);  // out of range
    // Index 0 must be a two-sided identity.
    CHECK_THROWS_AS(Group::from_table("bad", {{1, 0}, {0, 1}}), precondition_error);
    // Latin square violation: row repeats an entry.
    CHECK_THROWS_AS(Group::from_table("bad", {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), precondition_error);
    // Non-associative Latin square with identity.
    CHECK_THROWS_AS(Group::from_table("bad", {{0, 1, 2, 3, 4},
                                              {1, 0, 3, 4, 2},
                                              {2, 4, 0, 1, 3},
                                              {3, 2, 4, 0, 1},
                                              {4, 3, 1, 2, 0}}),
                    precondition_error);
    // Label count must match the order.
    CHECK_THROWS_AS(Group::from_table("Z3", z3, {"e"}), precondition_error);
    // Order guard.
    const int n = 17;
    std::vector<std::vector<int>> big(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) big[a][b] = (a + b) % n;
    CHECK_THROWS_AS(Group::from_table("Z17", big), guard_error);
}

TEST_CASE("group equality") {
    CHECK(Group::elementary({{5, 1}}) == Group::elementary({{5, 1}}));
    CHECK(!(Group::elementary({{5, 1}}) == Group::elementary({{7, 1}})));
    CHECK(Group::catalog("Z9") == Group::catalog("Z9"));
    CHECK(!(Group::catalog("Z9") == Group::catalog("Q8")));
    CHECK(!(Group::catalog("Z4") == Group::elementary({{2, 2}})));
}

TEST_CASE("automorphism application and validity") {
    const Group z7 = Group::elementary({{7, 1}});
    ModMatrix two(1, 7);
    two.a = {2};
    const Automorphism a = Automorphism::linear({two});
    std::string why;
    CHECK(is_valid_automorphism(z7, a, &why));
    CHECK(apply_automorphism(z7, a, 3) == 6);
    CHECK(apply_automorphism(z7, a, {1, 6}) == std::vector<Elem>{2, 5});

    // Singular matrix is rejected.
    ModMatrix zero(1, 7);
    zero.a = {0};
    CHECK(!is_valid_automorphism(z7, Automorphism::linear({zero}), &why));
    CHECK(why == "matrix singular at block 0");

    // Matrix shape must match the block.
    const Group z33 = Group::elementary({{3, 3}});
    CHECK(!is_valid_automorphism(z33, a, &why));

    // Permutation automorphisms: x -> 2x on the Z9 table.
    const Group z9 = Group::catalog("Z9");
    std::vector<Elem> dbl(9);
    for (Elem g = 0; g < 9; ++g) dbl[g] = (2 * g) % 9;
    const Automorphism pa = Automorphism::permutation_of(dbl);
    CHECK(is_valid_automorphism(z9, pa, &why));
    CHECK(apply_automorphism(z9, pa, 4) == 8);
    CHECK(automorphism_order(z9, pa) == 6);  // 2 has order 6 mod 9

    // x -> x+1 fails: not a homomorphism (and moves the identity).
    std::vector<Elem> shift(9);
    for (Elem g = 0; g < 9; ++g) shift[g] = (g + 1) % 9;
    CHECK(!is_valid_automorphism(z9, Automorphism::permutation_of(shift), &why));
}

TEST_CASE("automorphism composition, powers and order") {
    const Group z13 = Group::elementary({{13, 1}});
    ModMatrix m(1, 13);
    m.a = {4};
    const Automorphism a = Automorphism::linear({m});
    CHECK(automorphism_order(z13, a) == 6);  // 4^6 = 4096 = 1 mod 13
    const Automorphism a3 = automorphism_power(z13, a, 3);
    CHECK(a3.matrices[0].a == std::vector<int>{12});  // 4^3 = 64 = -1 mod 13
    const Automorphism a6 = compose(z13, a3, a3);
    CHECK(a6.matrices[0].is_identity());
    CHECK(automorphism_order(z13, Automorphism::identity_for(z13)) == 1);

    const Group q8 = Group::catalog("Q8");
    const Automorphism id = Automorphism::identity_for(q8);
    CHECK(id.kind == Automorphism::Kind::permutation);
    CHECK(automorphism_order(q8, id) == 1);
    CHECK_THROWS_AS(compose(q8, id, a), precondition_error);  // mixed kinds
}

TEST_CASE("automorphism enumeration matches known group-automorphism counts") {
    CHECK(enumerate_automorphisms(Group::elementary({{5, 1}})).size() == 4);     // units mod 5
    CHECK(enumerate_automorphisms(Group::elementary({{2, 2}})).size() == 6);     // GL(2,2)
    CHECK(enumerate_automorphisms(Group::elementary({{3, 2}})).size() == 48);    // GL(2,3)
    CHECK(enumerate_automorphisms(Group::elementary({{2, 3}})).size() == 168);   // GL(3,2)
    CHECK(enumerate_automorphisms(Group::catalog("Z4")).size() == 2);
    CHECK(enumerate_automorphisms(Group::catalog("Z6")).size() == 2);
    CHECK(enumerate_automorphisms(Group::catalog("Z9")).size() == 6);
    CHECK(enumerate_automorphisms(Group::catalog("Q8")).size() == 24);
    CHECK(enumerate_automorphisms(Group::catalog("S3")).size() == 6);
    CHECK(enumerate_automorphisms(Group::catalog("D10")).size() == 20);

    // Every enumerated map is valid, and they are pairwise distinct.
    const Group g = Group::catalog("S3");
    const auto autos = enumerate_automorphisms(g);
    std::set<std::vector<Elem>> images;
    for (const auto& a : autos) {
        CHECK(is_valid_automorphism(g, a));
        images.insert(a.perm);
    }
    CHECK(images.size() == autos.size());

    CHECK_THROWS_AS(enumerate_automorphisms(Group::elementary({{2, 1}, {3, 1}})), guard_error);
    CHECK_THROWS_AS(enumerate_automorphisms(Group::elementary({{5, 2}})), guard_error);
}
