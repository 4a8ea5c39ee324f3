#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mku/minkowski.hpp"

using namespace mku;

static mpq_class Q(long n, long d = 1) { return mpq_class(n, d); }

static bool overlaps(Interval const & a, Interval const & b) {
    return a.sub(b).contains_zero();
}

struct Context {
    NumberField field;
    GaloisGroup group;
    PlaceSet places;

    Context(std::string label, IntPoly p, mpfr_prec_t prec = 128)
        : field(std::move(label), std::move(p)),
          group(recover_automorphisms(field)),
          places(compute_places(field, prec)) {}
};

TEST_CASE("one-sided unit over the square root of 2") {
    Context c("sqrt2", IntPoly({-2, 0, 1}));
    FieldElement u(c.field, RatPoly{Q(1), Q(1)}); /* 1 + sqrt 2 */

    SpecialUnitCertificate cert = construct_special_unit(c.places, {u}, 0);
    CHECK(cert.beta == u);
    CHECK(cert.place_index == 0);
    CHECK(cert.xi == std::vector<mpz_class>{-1});
    CHECK(cert.sign_checks ==
          std::vector<Sign>{Sign::Positive, Sign::Negative});
    CHECK(std::abs(cert.height.mid_double() - 0.4406867935097715) < 1e-13);
    CHECK(cert.height.rad_double() < 1e-20);
    CHECK(overlaps(cert.height_bound, cert.height.mul_2exp(1)));
    CHECK(cert.height_bound_ok);

    /* the other place flips the construction to the inverse */
    SpecialUnitCertificate flip = construct_special_unit(c.places, {u}, 1);
    CHECK(flip.beta == FieldElement(c.field, RatPoly{Q(-1), Q(1)}));
    CHECK(flip.xi == std::vector<mpz_class>{1});
    CHECK(flip.sign_checks ==
          std::vector<Sign>{Sign::Negative, Sign::Positive});

    /* identical input, identical output */
    SpecialUnitCertificate again = construct_special_unit(c.places, {u}, 0);
    CHECK(again.beta == cert.beta);
    CHECK(again.xi == cert.xi);
}

TEST_CASE("verification decides both ways") {
    Context c("sqrt2", IntPoly({-2, 0, 1}));
    FieldElement u(c.field, RatPoly{Q(1), Q(1)});

    CHECK(verify_special(c.group, c.places, u, 0));
    CHECK_FALSE(verify_special(c.group, c.places, u, 1));
    CHECK_FALSE(verify_special(c.group, c.places, elem_inv(u), 0));
    CHECK(verify_special(c.group, c.places, elem_inv(u), 1));

    /* torsion: every log vanishes, nothing is certified negative */
    CHECK_FALSE(verify_special(c.group, c.places, elem_from_int(c.field, -1), 0));
    CHECK_FALSE(verify_special(c.group, c.places, elem_one(c.field), 0));

    CHECK_THROWS_AS(verify_special(c.group, c.places, elem_generator(c.field), 0),
                    not_a_unit);
    CHECK_THROWS_AS(verify_special(c.group, c.places, u, 2), structure_violation);

    /* products of one-sided units at the same place stay one-sided */
    CHECK(verify_special(c.group, c.places, elem_mul(u, u), 0));
}

TEST_CASE("conjugate log matrix over the square root of 2") {
    Context c("sqrt2", IntPoly({-2, 0, 1}));
    FieldElement u(c.field, RatPoly{Q(1), Q(1)});

    LogMatrixCertificate m = minkowski_matrix(c.group, c.places, u, 0);
    REQUIRE(m.mat.size() == 2);
    CHECK(m.transversal == std::vector<int>{0, 1});
    CHECK(m.rank == 1);

    /* [[a, -a], [-a, a]] with a half the log of the fundamental unit */
    double const a = 0.4406867935097715;
    CHECK(std::abs(m.mat[0][0].mid_double() - a) < 1e-13);
    CHECK(std::abs(m.mat[0][1].mid_double() + a) < 1e-13);
    CHECK(std::abs(m.mat[1][0].mid_double() + a) < 1e-13);
    CHECK(std::abs(m.mat[1][1].mid_double() - a) < 1e-13);
    for (auto const & s : m.column_sums) CHECK(s.contains_zero());
    for (auto const & s : m.row_sums) CHECK(s.contains_zero());

    CHECK(m.null_sign == Sign::Positive);
    REQUIRE(m.null_vector.size() == 2);
    CHECK(overlaps(m.null_vector[0], m.null_vector[1]));

    CHECK(m.witness == u); /* real places: the matrix is its own witness */
    CHECK(m.cofactor_constant.sign() == Sign::Positive);
    CHECK(std::abs(m.cofactor_constant.mid_double() - a) < 1e-13);

    CHECK_THROWS_AS(minkowski_matrix(c.group, c.places, elem_inv(u), 0),
                    hypothesis_violated);
}

TEST_CASE("conjugate subgroup index over the square root of 2") {
    Context c("sqrt2", IntPoly({-2, 0, 1}));
    FieldElement u(c.field, RatPoly{Q(1), Q(1)});

    ConjugateSubgroupCertificate cert =
        conjugate_subgroup_certificate(c.group, c.places, u, 0, {u});
    CHECK(cert.minors_checked == 4);
    CHECK(cert.product_torsion); /* (1 + sqrt 2)(-1 + sqrt 2) = 1 */

    /* the bound is an exact equality here: both sides are the regulator */
    double const r = 0.8813735870195430;
    CHECK(std::abs(cert.conjugate_regulator.mid_double() - r) < 1e-13);
    CHECK(std::abs(cert.bound_rhs.mid_double() - r) < 1e-13);
    CHECK(overlaps(cert.index_ratio, Interval::exact(1, 128)));
    CHECK(cert.bound_ok);
    CHECK_FALSE(cert.bound_certified); /* equality cannot be strict */

    /* squaring the unit scales the conjugate lattice by 2 per row */
    ConjugateSubgroupCertificate sq = conjugate_subgroup_certificate(
        c.group, c.places, elem_mul(u, u), 0, {u});
    CHECK(overlaps(sq.index_ratio, cert.index_ratio.mul_2exp(1)));
    CHECK(sq.product_torsion);
    CHECK(sq.bound_ok);
}

TEST_CASE("biquadratic field at every place") {
    Context c("biquad", IntPoly({1, 0, -10, 0, 1}));
    std::vector<FieldElement> units{
        FieldElement(c.field, RatPoly{Q(1), Q(-9, 2), Q(0), Q(1, 2)}),  /* 1+sqrt2 */
        FieldElement(c.field, RatPoly{Q(2), Q(11, 2), Q(0), Q(-1, 2)}), /* 2+sqrt3 */
        elem_generator(c.field)};                                       /* sqrt2+sqrt3 */
    REQUIRE(c.places.count() == 4);

    for (int w = 0; w < 4; w++) {
        SpecialUnitCertificate cert =
            construct_special_unit(c.places, units, w);
        CHECK(cert.height_bound_ok);
        int negatives = 0;
        for (Sign s : cert.sign_checks) negatives += s == Sign::Negative;
        CHECK(negatives == 3);
        CHECK(cert.sign_checks[w] == Sign::Positive);
        CHECK(verify_special(c.group, c.places, cert.beta, w));

        LogMatrixCertificate m = minkowski_matrix(c.group, c.places, cert.beta, w);
        CHECK(m.rank == 3);
        CHECK(m.null_sign != Sign::Undecided);
        for (int i = 0; i < 4; i++) CHECK(m.mat[i][i].sign() == Sign::Positive);

        ConjugateSubgroupCertificate sub = conjugate_subgroup_certificate(
            c.group, c.places, cert.beta, w, units);
        CHECK(sub.minors_checked == 16);
        CHECK(sub.product_torsion); /* totally real: the product is the norm */
        CHECK(sub.bound_ok);
    }

    /* squared system again scales the index, now by 2^3 */
    SpecialUnitCertificate cert =
        construct_special_unit(c.places, units, 0);
    FieldElement sq = elem_mul(cert.beta, cert.beta);
    ConjugateSubgroupCertificate one = conjugate_subgroup_certificate(
        c.group, c.places, cert.beta, 0, units);
    ConjugateSubgroupCertificate two =
        conjugate_subgroup_certificate(c.group, c.places, sq, 0, units);
    CHECK(overlaps(two.index_ratio, one.index_ratio.mul_2exp(3)));
}

TEST_CASE("totally complex fifth cyclotomic field") {
    Context c("zeta5", IntPoly({1, 1, 1, 1, 1}));
    REQUIRE(c.places.count() == 2);
    FieldElement u(c.field, RatPoly{Q(1), Q(1), Q(0), Q(0)}); /* 1 + zeta */

    SpecialUnitCertificate cert = construct_special_unit(c.places, {u}, 0);
    CHECK(cert.beta == u);
    CHECK(cert.xi == std::vector<mpz_class>{-1});

    /* conjugation fixes the place, so it maps one-sided units to
     * one-sided units */
    Subgroup stab = place_stabilizer(c.group, c.places, 0);
    REQUIRE(stab.size() == 2);
    FieldElement rho_u = c.group.apply(stab.back(), u);
    CHECK(verify_special(c.group, c.places, rho_u, 0));
    CHECK(verify_special(c.group, c.places, elem_mul(u, rho_u), 0));

    LogMatrixCertificate m = minkowski_matrix(c.group, c.places, u, 0);
    CHECK(m.rank == 1);
    CHECK(m.null_sign != Sign::Undecided);

    /* the witness is u * rho(u); its rows sum to zero */
    CHECK(m.witness == elem_mul(u, rho_u));
    for (auto const & s : m.row_sums) CHECK(s.contains_zero());
    CHECK(m.cofactor_constant.sign() != Sign::Undecided);

    ConjugateSubgroupCertificate sub =
        conjugate_subgroup_certificate(c.group, c.places, u, 0, {u});
    CHECK(sub.minors_checked == 4);
    CHECK(sub.bound_ok);
}

TEST_CASE("construction rejects unusable input") {
    Context c("biquad", IntPoly({1, 0, -10, 0, 1}));
    FieldElement e1(c.field, RatPoly{Q(1), Q(-9, 2), Q(0), Q(1, 2)});
    FieldElement e2(c.field, RatPoly{Q(2), Q(11, 2), Q(0), Q(-1, 2)});

    CHECK_THROWS_AS(construct_special_unit(c.places, {e1, e2}, 0),
                    structure_violation); /* needs three units */
    CHECK_THROWS_AS(construct_special_unit(c.places,
                                           {e1, e2, elem_inv(e1)}, 0),
                    undecided); /* dependent system has regulator zero */
    CHECK_THROWS_AS(construct_special_unit(c.places, {e1, e2, e1}, 5),
                    structure_violation);
    CHECK_THROWS_AS(
        conjugate_subgroup_certificate(c.group, c.places, e1, 0, {e1, e2}),
        hypothesis_violated); /* e1 is not one-sided at place 0 */
}
