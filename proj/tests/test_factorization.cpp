#include <doctest.h>

#include <string>

#include "cayfact/errors.hpp"
#include "cayfact/factorization.hpp"

using namespace cayfact;

namespace {

using Parts = std::vector<ConnectionSet>;

Factorization make_fact(Group g, int k, std::vector<std::vector<Elem>> parts) {
    Factorization f;
    f.group = std::move(g);
    f.k = k;
    for (auto& p : parts) f.parts.push_back(ConnectionSet{std::move(p)});
    return f;
}

Automorphism scalar(int value, int p) {
    ModMatrix m(1, p);
    m.a = {value};
    return Automorphism::linear({m});
}

}  // namespace

TEST_CASE("pair classes") {
    const Group z7 = Group::elementary({{7, 1}});
    CHECK(pair_classes(z7) == std::vector<PairClass>{{1, 6}, {2, 5}, {3, 4}});

    const Group z23 = Group::elementary({{2, 3}});
    const auto self_paired = pair_classes(z23);
    REQUIRE(self_paired.size() == 7);
    for (Elem g = 1; g < 8; ++g) {
        CHECK(self_paired[g - 1].rep == g);
        CHECK(self_paired[g - 1].mate == g);
    }

    const Group z9 = Group::catalog("Z9");
    CHECK(pair_classes(z9) == std::vector<PairClass>{{1, 8}, {2, 7}, {3, 6}, {4, 5}});

    CHECK_THROWS_AS(pair_classes(Group::elementary({{2, 21}})), guard_error);
}

TEST_CASE("factorization structural check") {
    const Group z5 = Group::elementary({{5, 1}});
    CHECK_NOTHROW(check_factorization(make_fact(z5, 2, {{1, 4}, {2, 3}})));

    CHECK_THROWS_WITH_AS(check_factorization(make_fact(z5, 2, {{1, 4}})),
                         "part count differs from k", construction_error);
    CHECK_THROWS_WITH_AS(check_factorization(make_fact(z5, 3, {{1}, {2}, {3}})),
                         "k does not divide |G| - 1", construction_error);
    CHECK_THROWS_AS(check_factorization(make_fact(z5, 2, {{1}, {2, 3, 4}})), construction_error);
    CHECK_THROWS_AS(check_factorization(make_fact(z5, 2, {{0, 1}, {2, 3}})), construction_error);
    CHECK_THROWS_AS(check_factorization(make_fact(z5, 2, {{4, 1}, {2, 3}})), construction_error);
    CHECK_THROWS_WITH_AS(check_factorization(make_fact(z5, 2, {{1, 4}, {1, 4}})),
                         "element 1 appears in two parts", construction_error);
    // {1,2} is not inverse-closed: 1^-1 = 4 lives elsewhere.
    CHECK_THROWS_AS(check_factorization(make_fact(z5, 2, {{1, 2}, {3, 4}})), construction_error);
    CHECK_THROWS_AS(check_factorization(make_fact(z5, 1, {{1, 2, 3, 4}})), construction_error);

    // Witness handling.
    Factorization f = make_fact(z5, 2, {{1, 4}, {2, 3}});
    f.witnesses = {scalar(2, 5)};  // 2*{1,4} = {2,3}
    CHECK_NOTHROW(check_factorization(f));
    f.witnesses = {scalar(2, 5), scalar(3, 5)};
    CHECK_THROWS_WITH_AS(check_factorization(f), "witness count must be k - 1", construction_error);
    f.witnesses = {scalar(1, 5)};  // identity maps part 0 to itself, not to part 1
    CHECK_THROWS_WITH_AS(check_factorization(f), "witness 1 does not map part 0 onto part 1",
                         construction_error);
    f.witnesses = {scalar(0, 5)};
    CHECK_THROWS_AS(check_factorization(f), construction_error);  // singular witness
}

TEST_CASE("divisibility decision on elementary products") {
    const auto decide = [](std::vector<Block> blocks, int k) {
        return decide_kif(Group::elementary(std::move(blocks)), k);
    };
    // Odd p wants 2k | p^r - 1, p = 2 wants k | 2^r - 1.
    CHECK(decide({{5, 1}}, 2).ok);
    CHECK(!decide({{7, 1}}, 2).ok);
    CHECK(decide({{7, 1}}, 3).ok);
    CHECK(decide({{13, 1}}, 2).ok);
    CHECK(decide({{13, 1}}, 3).ok);
    CHECK(decide({{13, 1}}, 6).ok);
    CHECK(!decide({{13, 1}}, 4).ok);
    CHECK(decide({{3, 2}}, 2).ok);
    CHECK(decide({{3, 2}}, 4).ok);
    CHECK(!decide({{3, 2}}, 8).ok);
    CHECK(decide({{2, 2}}, 3).ok);
    CHECK(!decide({{2, 2}}, 2).ok);
    CHECK(decide({{2, 3}}, 7).ok);
    CHECK(decide({{2, 4}}, 3).ok);
    CHECK(decide({{2, 4}}, 5).ok);
    CHECK(decide({{2, 4}}, 15).ok);
    CHECK(decide({{2, 2}, {7, 1}}, 3).ok);
    CHECK(!decide({{2, 2}, {7, 1}}, 2).ok);

    const Decision d = decide({{2, 2}, {7, 1}}, 3);
    REQUIRE(d.block_reasons.size() == 2);
    CHECK(d.block_reasons[0].block == "Z_2^2");
    CHECK(d.block_reasons[0].p == 2);
    CHECK(d.block_reasons[0].r == 2);
    CHECK(d.block_reasons[0].block_order_minus_one == 3);
    CHECK(d.block_reasons[0].required_divisor == 3);  // p = 2: k itself
    CHECK(d.block_reasons[0].divides);
    CHECK(d.block_reasons[1].block == "Z_7");
    CHECK(d.block_reasons[1].block_order_minus_one == 6);
    CHECK(d.block_reasons[1].required_divisor == 6);  // odd p: 2k
    CHECK(d.block_reasons[1].divides);

    CHECK_THROWS_AS(decide_kif(Group::elementary({{5, 1}}), 1), precondition_error);
}

TEST_CASE("divisibility decision on table descriptors") {
    // Cyclic groups with a non-elementary Sylow subgroup are refused wholesale.
    for (const char* name : {"Z4", "Z8", "Z9"}) {
        const Decision d = decide_kif(Group::catalog(name), 2);
        CHECK(!d.ok);
        CHECK(d.tag == "Z489");
        CHECK(d.block_reasons.empty());
    }
    const Decision q8 = decide_kif(Group::catalog("Q8"), 7);
    CHECK(!q8.ok);
    CHECK(q8.tag == "Case2");
    const Decision s3 = decide_kif(Group::catalog("S3"), 5);
    CHECK(!s3.ok);
    CHECK(s3.tag == "Case3");
    CHECK(decide_kif(Group::catalog("D10"), 3).tag == "Case3");

    // Abelian with squarefree orders decomposes into elementary blocks.
    const Decision z6 = decide_kif(Group::catalog("Z6"), 5);
    CHECK(!z6.ok);
    CHECK(z6.tag == "");
    REQUIRE(z6.block_reasons.size() == 2);
    CHECK(z6.block_reasons[0].block == "Z_2");
    CHECK(z6.block_reasons[1].block == "Z_3");
    CHECK(!z6.block_reasons[0].divides);  // 5 does not divide 2 - 1
}

TEST_CASE("cyclotomic coset factorizations: frozen partitions") {
    const Factorization f52 = cyclotomic_factorization(5, 1, 2);
    CHECK(f52.parts == Parts{{{1, 4}}, {{2, 3}}});
    REQUIRE(f52.witnesses.size() == 1);
    CHECK(f52.witnesses[0].matrices[0].a == std::vector<int>{3});

    const Factorization f73 = cyclotomic_factorization(7, 1, 3);
    CHECK(f73.parts == Parts{{{1, 6}}, {{2, 5}}, {{3, 4}}});

    const Factorization f87 = cyclotomic_factorization(2, 3, 7);
    CHECK(f87.parts == Parts{{{1}}, {{2}}, {{4}}, {{3}}, {{6}}, {{7}}, {{5}}});

    const Factorization f94 = cyclotomic_factorization(3, 2, 4);
    CHECK(f94.parts == Parts{{{1, 2}}, {{3, 6}}, {{5, 7}}, {{4, 8}}});

    const Factorization f136 = cyclotomic_factorization(13, 1, 6);
    CHECK(f136.parts == Parts{{{1, 12}}, {{2, 11}}, {{4, 9}}, {{5, 8}}, {{3, 10}}, {{6, 7}}});
}

TEST_CASE("cyclotomic parts advance by one power of the generator") {
    for (const auto [p, n, k] : {std::tuple{3, 2, 4}, {13, 1, 6}, {2, 4, 5}, {3, 3, 13}}) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        const FieldRep f = FieldRep::make(p, n);
        const Factorization fact = cyclotomic_factorization(f, k);
        const Group G = f.additive_group();
        const Automorphism gamma = singer_generator(f);
        REQUIRE(fact.witnesses.size() == static_cast<std::size_t>(k - 1));
        for (int j = 0; j < k; ++j)
            CHECK(apply_automorphism(G, gamma, fact.parts[static_cast<std::size_t>(j)].elems) ==
                  fact.parts[static_cast<std::size_t>((j + 1) % k)].elems);
    }
}

TEST_CASE("cyclotomic preconditions") {
    CHECK_THROWS_WITH_AS(cyclotomic_factorization(7, 1, 2), "coset construction needs 4 | 6 for p = 7",
                         precondition_error);
    CHECK_THROWS_WITH_AS(cyclotomic_factorization(2, 3, 5), "coset construction needs 5 | 7 for p = 2",
                         precondition_error);
    CHECK_THROWS_AS(cyclotomic_factorization(5, 1, 1), precondition_error);
}

TEST_CASE("rotational orbit splitting") {
    const Group z7 = Group::elementary({{7, 1}});
    const Factorization f = rotational_factorization(z7, scalar(2, 7), 3);
    CHECK(f.parts == Parts{{{1, 6}}, {{2, 5}}, {{3, 4}}});
    REQUIRE(f.witnesses.size() == 2);
    CHECK(f.witnesses[0].matrices[0].a == std::vector<int>{2});
    CHECK(f.witnesses[1].matrices[0].a == std::vector<int>{4});

    // Order of sigma may be a proper power of k: mult-by-2 has order 4 = 2^2.
    const Group z5 = Group::elementary({{5, 1}});
    const Factorization g = rotational_factorization(z5, scalar(2, 5), 2);
    CHECK(g.parts == Parts{{{1, 4}}, {{2, 3}}});
}

TEST_CASE("rotational construction fails loudly when orbits do not split") {
    // Mult-by-4 on Z_13 has order 6 and is fixed-point-free, but 4^3 = -1
    // stabilizes every inverse pair, so each class orbit splits into only 3
    // suborbits instead of 6.
    const Group z13 = Group::elementary({{13, 1}});
    CHECK_THROWS_WITH_AS(rotational_factorization(z13, scalar(4, 13), 6),
                         "suborbit count mismatch: orbit of pair class {1,12} splits into 3 suborbits, "
                         "need 6",
                         construction_error);

    // Negation collapses every pair class to itself; with 2k = |G^*| the
    // sigma^2 screen is waived and the failure surfaces as a suborbit count.
    const Group z5 = Group::elementary({{5, 1}});
    CHECK_THROWS_WITH_AS(rotational_factorization(z5, scalar(4, 5), 2),
                         "suborbit count mismatch: orbit of pair class {1,4} splits into 1 suborbits, "
                         "need 2",
                         construction_error);
}

TEST_CASE("rotational preconditions") {
    const Group z7 = Group::elementary({{7, 1}});
    CHECK_THROWS_AS(rotational_factorization(z7, scalar(2, 7), 1), precondition_error);
    CHECK_THROWS_AS(rotational_factorization(z7, scalar(0, 7), 3), precondition_error);  // singular
    // Mult-by-3 has order 6, which is not a power of 3.
    CHECK_THROWS_WITH_AS(rotational_factorization(z7, scalar(3, 7), 3),
                         "order of sigma is 6, not a positive power of k = 3", precondition_error);
    // Negation has order 2, but its square is the identity and 2k != |G^*|.
    CHECK_THROWS_WITH_AS(rotational_factorization(z7, scalar(6, 7), 2),
                         "sigma^2 is not fixed-point-free (required for even k)", precondition_error);

    // A map fixing a nonzero vector is rejected up front.
    const Group z33 = Group::elementary({{3, 2}});
    ModMatrix m(2, 3);
    m.a = {1, 0, 0, 2};
    CHECK_THROWS_WITH_AS(rotational_factorization(z33, Automorphism::linear({m}), 2),
                         "sigma is not fixed-point-free (fixes 1)", precondition_error);
}

TEST_CASE("product lifting") {
    const Factorization fh = cyclotomic_factorization(2, 2, 3);
    CHECK(fh.parts == Parts{{{1}}, {{2}}, {{3}}});
    const Factorization fk = cyclotomic_factorization(7, 1, 3);
    const Factorization lifted = lift_product(fh, fk);

    CHECK(lifted.group.describe() == "Z_2^2 x Z_7");
    CHECK(lifted.group.order() == 28);
    CHECK(lifted.k == 3);
    for (const auto& part : lifted.parts) CHECK(part.elems.size() == 9);
    CHECK(lifted.parts[0].elems == std::vector<Elem>{1, 4, 5, 9, 13, 17, 21, 24, 25});
    REQUIRE(lifted.witnesses.size() == 2);
    CHECK(lifted.witnesses[0].matrices.size() == 2);

    // Edge accounting: three 9-regular factors on 28 vertices tile K_28.
    const std::uint64_t per_factor = 28 * 9 / 2;
    CHECK(3 * per_factor == 28 * 27 / 2);

    CHECK_THROWS_WITH_AS(lift_product(fh, cyclotomic_factorization(5, 1, 2)),
                         "factor count mismatch: 3 vs 2", precondition_error);
    CHECK_THROWS_WITH_AS(lift_product(fk, fk),
                         "factor group orders are not coprime (shared prime 7)", precondition_error);

    Factorization table = make_fact(Group::catalog("Z9"), 2, {{1, 3, 6, 8}, {2, 4, 5, 7}});
    CHECK_NOTHROW(check_factorization(table));
    CHECK_THROWS_AS(lift_product(table, fk), precondition_error);
}

TEST_CASE("restriction to a Sylow block recovers the lifted factors") {
    const Factorization lifted =
        lift_product(cyclotomic_factorization(2, 2, 3), cyclotomic_factorization(7, 1, 3));

    const Factorization back_k = restrict_to_subgroup(lifted, Group::elementary({{7, 1}}));
    CHECK(back_k.parts == Parts{{{1, 6}}, {{2, 5}}, {{3, 4}}});
    REQUIRE(back_k.witnesses.size() == 2);
    CHECK(back_k.witnesses[0].matrices.size() == 1);

    const Factorization back_h = restrict_to_subgroup(lifted, Group::elementary({{2, 2}}));
    CHECK(back_h.parts == Parts{{{1}}, {{2}}, {{3}}});

    // Restricting to the full block list is the identity.
    const Factorization full = restrict_to_subgroup(lifted, lifted.group);
    CHECK(full.parts == lifted.parts);

    // A line inside the Z_2^2 block is not a Sylow block.
    CHECK_THROWS_WITH_AS(restrict_to_subgroup(lifted, Group::elementary({{2, 1}})),
                         "H is not a recognized characteristic subgroup: block Z_2^1 is not a Sylow "
                         "block of the host group",
                         precondition_error);
}

TEST_CASE("restriction reports parts that miss the subgroup") {
    // A hand-built 2-factorization of Z_3 x Z_7 that packs all of the Z_3 and
    // Z_7 elements into part 0; part 1 meets neither subgroup.
    const Group g = Group::elementary({{3, 1}, {7, 1}});
    const Factorization f = make_fact(g, 2,
                                      {{1, 2, 3, 4, 6, 9, 12, 15, 18, 20},
                                       {5, 7, 8, 10, 11, 13, 14, 16, 17, 19}});
    CHECK_NOTHROW(check_factorization(f));
    CHECK_THROWS_AS(restrict_to_subgroup(f, Group::elementary({{3, 1}})), construction_error);
}

TEST_CASE("end-to-end construction") {
    const KifConstruction c52 = construct_kif(Group::elementary({{5, 1}}), 2);
    CHECK(c52.factorization.parts == Parts{{{1, 4}}, {{2, 3}}});
    REQUIRE(c52.block_fields.size() == 1);
    CHECK(c52.block_fields[0].q == 5);

    const KifConstruction c136 = construct_kif(Group::elementary({{13, 1}}), 6);
    CHECK(c136.factorization.parts ==
          Parts{{{1, 12}}, {{2, 11}}, {{4, 9}}, {{5, 8}}, {{3, 10}}, {{6, 7}}});

    const KifConstruction c283 = construct_kif(Group::elementary({{2, 2}, {7, 1}}), 3);
    CHECK(c283.factorization.group.order() == 28);
    CHECK(c283.factorization.parts[0].elems == std::vector<Elem>{1, 4, 5, 9, 13, 17, 21, 24, 25});
    CHECK(c283.block_fields.size() == 2);
    CHECK(c283.factorization.has_witnesses());

    CHECK_THROWS_WITH_AS(construct_kif(Group::elementary({{7, 1}}), 2),
                         "no 2-factorization exists: block Z_7 fails 4 | 6;", precondition_error);
    CHECK_THROWS_AS(construct_kif(Group::catalog("Z9"), 2), precondition_error);
    CHECK_THROWS_AS(construct_kif(Group::elementary({{5, 1}}), 1), precondition_error);
}
