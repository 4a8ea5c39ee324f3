#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mku/groupfunc.hpp"
#include "mku/matrixlab.hpp"

using namespace mku;

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

static int basis_rank(std::vector<CosetFunction> const & basis) {
    QMat rows;
    for (auto const & f : basis) {
        std::vector<mpq_class> row;
        for (long v : f.values) row.push_back(mpq_class(v));
        rows.push_back(std::move(row));
    }
    return rank_rational(std::move(rows));
}

TEST_CASE("cyclic four with trivial stabilizer") {
    GroupTable g = cyclic(4);
    Subgroup h{0, 2}, k{0};

    CosetFunction lam = build_lambda(g, h, k);
    CHECK(lam.values == std::vector<long>{1, 0, -1, 0});
    CHECK(lam.sum() == 0);
    CHECK(one_norm(lam) == 2); /* 2 (J - 1) with J = 2 */
    CHECK(lam.at(0) == 1);
    CHECK(lam.at(2) == -1);
    CHECK(lam.at_coset(3) == 0);

    auto fibers = coset_fibers(g, h, k);
    REQUIRE(fibers.size() == 2);
    CHECK(fibers[0] == std::vector<int>{0, 2});
    CHECK(fibers[1] == std::vector<int>{1, 3});
    CHECK(in_difference_lattice(lam, fibers));

    /* translates: shifting lam around the circle spans a rank-2 space */
    CHECK(translate_rank(g, lam) == 2);

    auto basis = lattice_basis(g, h, k);
    REQUIRE(basis.size() == 2); /* cosets - fibers */
    for (auto const & e : basis) CHECK(in_difference_lattice(e, fibers));
    CHECK(basis_rank(basis) == 2);
    CHECK(basis[0].values == std::vector<long>{1, 0, -1, 0});
    CHECK(basis[1].values == std::vector<long>{0, 1, 0, -1});
}

TEST_CASE("left translation action") {
    GroupTable g = cyclic(4);
    CosetFunction lam = build_lambda(g, {0, 2}, {0});

    CHECK(act(g, 0, lam) == lam);
    CHECK(act(g, 1, lam).values == std::vector<long>{0, 1, 0, -1});
    CHECK(act(g, 2, lam).values == std::vector<long>{-1, 0, 1, 0});
    CHECK(act(g, 3, lam).values == std::vector<long>{0, -1, 0, 1});

    /* (sigma tau) f = sigma (tau f), checked over every pair */
    GroupTable s3 = sym3();
    CosetFunction f = build_lambda(s3, {0, 4, 5}, {0, 1});
    for (int s = 0; s < 6; s++)
        for (int t = 0; t < 6; t++)
            CHECK(act(s3, s3.op(s, t), f) == act(s3, s, act(s3, t, f)));
}

TEST_CASE("symmetric group with stabilizer meeting H trivially") {
    GroupTable g = sym3();
    Subgroup h{0, 4, 5}; /* A3, normal */
    Subgroup k{0, 1};

    CosetFunction lam = build_lambda(g, h, k);
    CHECK(lam.values == std::vector<long>{2, -1, -1}); /* J = |HK| / |K| = 3 */
    CHECK(lam.sum() == 0);
    CHECK(one_norm(lam) == 4);

    auto fibers = coset_fibers(g, h, k);
    REQUIRE(fibers.size() == 1); /* A3 pushes the coset of K around all three */
    CHECK(fibers[0] == std::vector<int>{0, 1, 2});
    CHECK(in_difference_lattice(lam, fibers));

    CHECK(translate_rank(g, lam) == 2); /* cosets - fibers */
    CHECK(lattice_basis(g, h, k).size() == 2);
}

TEST_CASE("cyclic six with index two fixing group") {
    GroupTable g = cyclic(6);
    Subgroup h{0, 3}, k{0, 2, 4};

    CosetFunction lam = build_lambda(g, h, k);
    CHECK(lam.values == std::vector<long>{1, -1});
    CHECK(one_norm(lam) == 2);

    auto fibers = coset_fibers(g, h, k);
    REQUIRE(fibers.size() == 1);
    CHECK(fibers[0] == std::vector<int>{0, 1});
    CHECK(in_difference_lattice(lam, fibers));
    CHECK(translate_rank(g, lam) == 1);
    CHECK(lattice_basis(g, h, k).size() == 1);
}

TEST_CASE("degenerate case H equal to K") {
    GroupTable g = cyclic(4);
    Subgroup hk{0, 2};

    CosetFunction lam = build_lambda(g, hk, hk);
    CHECK(lam.values == std::vector<long>{0, 0}); /* J = 1 */
    CHECK(one_norm(lam) == 0);

    auto fibers = coset_fibers(g, hk, hk);
    REQUIRE(fibers.size() == 2); /* H stabilizes each of its own cosets */
    CHECK(in_difference_lattice(lam, fibers));
    CHECK(translate_rank(g, lam) == 0);
    CHECK(lattice_basis(g, hk, hk).empty());
}

TEST_CASE("membership is a real test") {
    GroupTable g = cyclic(4);
    auto fibers = coset_fibers(g, {0, 2}, {0});
    CosetFunction delta;
    delta.cosets = left_cosets(g, {0});
    delta.values = {1, 0, 0, 0};
    CHECK_FALSE(in_difference_lattice(delta, fibers));
}

TEST_CASE("lambda validation") {
    GroupTable s3 = sym3();
    CHECK_THROWS_AS(build_lambda(s3, {0, 1}, {0}), not_normal);
    /* K = S3 meets A3 in more than the identity without lying inside it */
    CHECK_THROWS_AS(build_lambda(s3, {0, 4, 5}, {0, 1, 2, 3, 4, 5}),
                    case_violation);
    CHECK_THROWS_AS(build_lambda(s3, {0, 4}, {0}), structure_violation);
    CHECK_THROWS_AS(coset_fibers(s3, {0, 4}, {0}), structure_violation);
    /* K inside H is the other supported position */
    GroupTable c4 = cyclic(4);
    CHECK_NOTHROW(build_lambda(c4, {0, 1, 2, 3}, {0, 2}));
}

TEST_CASE("coset transversals") {
    GroupTable g = cyclic(4);
    CHECK(coset_transversal(g, {0, 2}) == std::vector<int>{0, 1});
    CHECK(coset_transversal(g, {0}) == std::vector<int>{0, 1, 2, 3});
    CHECK(coset_transversal_in(g, {0}, {0, 2}) == std::vector<int>{0, 2});
    CHECK(coset_transversal_in(g, {0, 2}, {0, 2}) == std::vector<int>{0});

    GroupTable s3 = sym3();
    CHECK(coset_transversal_in(s3, {0, 1}, {0, 1, 2, 3, 4, 5}) ==
          std::vector<int>{0, 2, 3});
    CHECK_THROWS_AS(coset_transversal(g, {0, 3}), structure_violation);
    CHECK_THROWS_AS(coset_transversal_in(s3, {0, 1}, {0, 4, 5}),
                    structure_violation);
}

TEST_CASE("independent translates span the lattice") {
    GroupTable g = cyclic(4);
    Subgroup h{0, 2}, k{0};
    auto s = coset_transversal(g, product_subgroup(g, h, k));
    auto t = coset_transversal_in(g, k, product_subgroup(g, h, k));
    REQUIRE(s == std::vector<int>{0, 1});
    REQUIRE(t == std::vector<int>{0, 2});

    TranslateFamily fam = independent_translates(g, h, k, s, t);
    REQUIRE(fam.members.size() == 2); /* cosets - fibers */
    CHECK(fam.rank == 2);
    CHECK(fam.members[0].values == std::vector<long>{1, 0, -1, 0});
    CHECK(fam.members[1].values == std::vector<long>{0, 1, 0, -1});
    CHECK(fam.labels == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});

    auto fibers = coset_fibers(g, h, k);
    for (auto const & m : fam.members) CHECK(in_difference_lattice(m, fibers));
}

TEST_CASE("translate family on the symmetric group") {
    GroupTable g = sym3();
    Subgroup h{0, 4, 5}, k{0, 1};
    std::vector<int> s{0};
    std::vector<int> t{0, 2, 3};

    TranslateFamily fam = independent_translates(g, h, k, s, t);
    REQUIRE(fam.members.size() == 2);
    CHECK(fam.rank == 2);
    CHECK(fam.members[0].values == std::vector<long>{2, -1, -1});
    CHECK(fam.members[1].values == std::vector<long>{-1, 2, -1});

    /* keeping a different pair of t positions works just as well */
    TranslateFamily alt = independent_translates(g, h, k, s, t, {{1, 2}});
    CHECK(alt.rank == 2);
    CHECK(alt.members[0].values == std::vector<long>{-1, 2, -1});
    CHECK(alt.members[1].values == std::vector<long>{-1, -1, 2});

    /* all three t translates: any two are independent and the whole set
     * collapses under the all-ones dependency */
    CosetFunction lam = build_lambda(g, h, k);
    std::vector<CosetFunction> all{lam, act(g, 2, lam), act(g, 3, lam)};
    std::vector<long> total(3, 0);
    for (auto const & f : all)
        for (size_t c = 0; c < 3; c++) total[c] += f.values[c];
    CHECK(total == std::vector<long>{0, 0, 0});
    for (int drop = 0; drop < 3; drop++) {
        std::vector<CosetFunction> pair;
        for (int i = 0; i < 3; i++)
            if (i != drop) pair.push_back(all[i]);
        CHECK(basis_rank(pair) == 2);
    }
}

TEST_CASE("degenerate translate family") {
    GroupTable g = cyclic(4);
    Subgroup hk{0, 2};
    auto s = coset_transversal(g, hk);
    auto t = coset_transversal_in(g, hk, hk);
    TranslateFamily fam = independent_translates(g, hk, hk, s, t);
    CHECK(fam.members.empty());
    CHECK(fam.rank == 0);
}

TEST_CASE("translate family validation") {
    GroupTable g = cyclic(4);
    Subgroup h{0, 2}, k{0};
    std::vector<int> s{0, 1}, t{0, 2};
    CHECK_THROWS_AS(independent_translates(g, h, k, {0, 2}, t),
                    structure_violation); /* 0 and 2 share an HK coset */
    CHECK_THROWS_AS(independent_translates(g, h, k, {0}, t),
                    structure_violation);
    CHECK_THROWS_AS(independent_translates(g, h, k, s, {0, 1}),
                    structure_violation); /* 1 is outside HK */
    CHECK_THROWS_AS(independent_translates(g, h, k, s, {0}),
                    structure_violation);
    CHECK_THROWS_AS(independent_translates(g, h, k, s, t, {{0}}),
                    structure_violation); /* keep list shorter than s */
    CHECK_THROWS_AS(independent_translates(g, h, k, s, t, {{0, 1}, {0}}),
                    structure_violation); /* keeps too many positions */
    CHECK_THROWS_AS(independent_translates(g, h, k, s, t, {{2}, {0}}),
                    structure_violation); /* index out of range */
}
