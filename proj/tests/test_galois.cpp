#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mku/galois.hpp"

using namespace mku;

static mpq_class Q(long n, long d = 1) { return mpq_class(n, d); }

static GroupTable klein() {
    /* C2 x C2: xor on {0,1,2,3} */
    std::vector<std::vector<int>> m(4, std::vector<int>(4));
    for (int a = 0; a < 4; a++)
        for (int b = 0; b < 4; b++) m[a][b] = a ^ b;
    return GroupTable::from_mul(m);
}

static GroupTable cyclic(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) m[a][b] = (a + b) % n;
    return GroupTable::from_mul(m);
}

static GroupTable sym3() {
    /* permutations of {0,1,2} listed as id, (01), (02), (12), (012), (021) */
    int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                      {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        /* a after b */
        int c[3];
        for (int i = 0; i < 3; i++) c[i] = perm[a][perm[b][i]];
        for (int k = 0; k < 6; k++)
            if (std::equal(c, c + 3, perm[k])) return k;
        return -1;
    };
    std::vector<std::vector<int>> m(6, std::vector<int>(6));
    for (int a = 0; a < 6; a++)
        for (int b = 0; b < 6; b++) m[a][b] = compose(a, b);
    return GroupTable::from_mul(m);
}

TEST_CASE("table validation rejects broken tables") {
    std::vector<std::vector<int>> bad{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(GroupTable::from_mul(bad), structure_violation);
    std::vector<std::vector<int>> shifted{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(GroupTable::from_mul(shifted), structure_violation);
    CHECK_NOTHROW(cyclic(5));
}

TEST_CASE("element orders and inverses") {
    GroupTable c6 = cyclic(6);
    CHECK(c6.element_order(0) == 1);
    CHECK(c6.element_order(1) == 6);
    CHECK(c6.element_order(2) == 3);
    CHECK(c6.element_order(3) == 2);
    CHECK(c6.inverse(2) == 4);
    GroupTable v4 = klein();
    for (int a = 1; a < 4; a++) CHECK(v4.element_order(a) == 2);
}

TEST_CASE("subgroup predicates") {
    GroupTable s3 = sym3();
    CHECK(is_subgroup(s3, {0}));
    CHECK(is_subgroup(s3, {0, 1}));
    CHECK(is_subgroup(s3, {0, 4, 5}));
    CHECK(!is_subgroup(s3, {0, 4}));
    CHECK(!is_subgroup(s3, {1, 4}));
    CHECK(is_normal(s3, {0, 4, 5}));
    CHECK(!is_normal(s3, {0, 1}));
    CHECK(is_normal(klein(), {0, 1}));
}

TEST_CASE("generated subgroups and enumeration") {
    GroupTable s3 = sym3();
    CHECK(subgroup_generated(s3, {4}) == Subgroup({0, 4, 5}));
    CHECK(subgroup_generated(s3, {1, 2}).size() == 6);
    auto all = all_subgroups(s3);
    /* S3: trivial, three order-2, one order-3, full */
    REQUIRE(all.size() == 6);
    CHECK(all.front() == Subgroup({0}));
    CHECK(all.back().size() == 6);
    int order2 = 0, order3 = 0;
    for (auto const & h : all) {
        if (h.size() == 2) order2++;
        if (h.size() == 3) order3++;
    }
    CHECK(order2 == 3);
    CHECK(order3 == 1);

    auto allv4 = all_subgroups(klein());
    CHECK(allv4.size() == 5); /* trivial, three C2, full */
}

TEST_CASE("cosets and transversals") {
    GroupTable s3 = sym3();
    Subgroup a3{0, 4, 5};
    auto cosets = left_cosets(s3, a3);
    REQUIRE(cosets.size() == 2);
    CHECK(cosets[0] == std::vector<int>({0, 4, 5}));
    CHECK(cosets[1] == std::vector<int>({1, 2, 3}));
    CHECK(coset_transversal(s3, a3) == std::vector<int>({0, 1}));
    CHECK(coset_of(cosets, 2) == 1);
    CHECK(coset_of(cosets, 5) == 0);

    Subgroup h{0, 1};
    auto ch = left_cosets(s3, h);
    REQUIRE(ch.size() == 3);
    CHECK(ch[0] == std::vector<int>({0, 1}));
    CHECK(coset_transversal(s3, h).front() == 0);
}

TEST_CASE("subgroup products") {
    GroupTable s3 = sym3();
    CHECK(product_subgroup(s3, {0, 4, 5}, {0, 1}).size() == 6);
    CHECK(product_subgroup(s3, {0}, {0, 1}) == Subgroup({0, 1}));
    /* two distinct order-2 subgroups of S3 generate a 4-element non-group */
    CHECK_THROWS_AS(product_subgroup(s3, {0, 1}, {0, 2}), not_normal);
}

TEST_CASE("quadratic fields have the expected involution") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    GaloisGroup G = recover_automorphisms(k);
    REQUIRE(G.order() == 2);
    CHECK(G.at(0).image == RatPoly({Q(0), Q(1)}));
    CHECK(G.at(1).image == RatPoly({Q(0), Q(-1)}));
    CHECK(G.compose(1, 1) == 0);
    CHECK(G.inverse(1) == 1);
    FieldElement u(k, RatPoly{Q(1), Q(1)});
    CHECK(G.apply(1, u) == FieldElement(k, RatPoly{Q(1), Q(-1)}));
    CHECK(G.apply(0, u) == u);

    NumberField gauss("gauss", IntPoly({1, 0, 1}));
    GaloisGroup Gg = recover_automorphisms(gauss);
    REQUIRE(Gg.order() == 2);
    CHECK(Gg.at(1).image == RatPoly({Q(0), Q(-1)}));
}

TEST_CASE("the fifth cyclotomic field is cyclic of order four") {
    NumberField z5("zeta5", IntPoly({1, 1, 1, 1, 1}));
    GaloisGroup G = recover_automorphisms(z5);
    REQUIRE(G.order() == 4);

    RatPoly sq{Q(0), Q(0), Q(1)};              /* zeta -> zeta^2 */
    RatPoly cube{Q(0), Q(0), Q(0), Q(1)};      /* zeta -> zeta^3 */
    RatPoly conj{Q(-1), Q(-1), Q(-1), Q(-1)};  /* zeta -> zeta^4 */
    int i2 = G.find(sq), i3 = G.find(cube), i4 = G.find(conj);
    REQUIRE(i2 > 0);
    REQUIRE(i3 > 0);
    REQUIRE(i4 > 0);
    CHECK(G.table().element_order(i2) == 4);
    CHECK(G.table().element_order(i3) == 4);
    CHECK(G.table().element_order(i4) == 2);
    /* zeta -> zeta^2 twice is zeta -> zeta^4 */
    CHECK(G.compose(i2, i2) == i4);
    CHECK(G.compose(i2, i3) == 0); /* 2 * 3 = 6 = 1 mod 5 */
    CHECK(G.inverse(i2) == i3);
}

TEST_CASE("the biquadratic field is Klein four") {
    NumberField l("biquad", IntPoly({1, 0, -10, 0, 1}));
    GaloisGroup G = recover_automorphisms(l);
    REQUIRE(G.order() == 4);
    for (int i = 1; i < 4; i++) CHECK(G.table().element_order(i) == 2);

    /* theta -> -sqrt2 + sqrt3 = 10 theta - theta^3 */
    int s = G.find(RatPoly{Q(0), Q(10), Q(0), Q(-1)});
    REQUIRE(s > 0);
    FieldElement r2(l, RatPoly{Q(0), Q(-9, 2), Q(0), Q(1, 2)});
    CHECK(G.apply(s, r2) == elem_neg(r2));
    FieldElement r3(l, RatPoly{Q(0), Q(11, 2), Q(0), Q(-1, 2)});
    CHECK(G.apply(s, r3) == r3);
}

TEST_CASE("composition is a homomorphism on elements") {
    NumberField l("biquad", IntPoly({1, 0, -10, 0, 1}));
    GaloisGroup G = recover_automorphisms(l);
    FieldElement a(l, RatPoly{Q(1), Q(2), Q(0), Q(1, 2)});
    for (int i = 0; i < G.order(); i++)
        for (int j = 0; j < G.order(); j++)
            CHECK(G.apply(G.compose(i, j), a) == G.apply(i, G.apply(j, a)));
}

TEST_CASE("the twentieth cyclotomic field is C4 x C2") {
    NumberField l("zeta20", IntPoly({1, 0, -1, 0, 1, 0, -1, 0, 1}));
    GaloisGroup G = recover_automorphisms(l);
    REQUIRE(G.order() == 8);
    std::vector<int> orders;
    for (int i = 0; i < 8; i++) orders.push_back(G.table().element_order(i));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>({1, 2, 2, 2, 4, 4, 4, 4}));

    /* zeta -> zeta^11 = -zeta has order two */
    int i11 = G.find(RatPoly{Q(0), Q(-1)});
    REQUIRE(i11 > 0);
    CHECK(G.table().element_order(i11) == 2);
    /* zeta -> zeta^3 has order four */
    int i3 = G.find(RatPoly{Q(0), Q(0), Q(0), Q(1)});
    REQUIRE(i3 > 0);
    CHECK(G.table().element_order(i3) == 4);
}

TEST_CASE("a non-normal cubic is refused") {
    NumberField k("cbrt2", IntPoly({-2, 0, 0, 1}));
    PrecisionPolicy tight;
    tight.start = 128;
    tight.ceiling = 512;
    CHECK_THROWS_AS(recover_automorphisms(k, tight), not_normal);
}
