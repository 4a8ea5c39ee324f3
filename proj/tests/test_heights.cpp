#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mku/heights.hpp"

using namespace mku;

static mpq_class Q(long n, long d = 1) { return mpq_class(n, d); }

/* Reference values built by straight interval arithmetic on exact input,
 * independent of the root-isolation route the height code takes. */
static Interval ref_log_of_sqrt_plus(long n, long add, mpfr_prec_t prec) {
    /* log(add + sqrt(n)) */
    return Interval::exact(n, prec).sqrt_nonneg().add(Interval::exact(add, prec)).log();
}

static bool overlaps(Interval const & a, Interval const & b) {
    return a.sub(b).contains_zero();
}

TEST_CASE("fundamental unit of the square root of 2") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    FieldElement u(k, RatPoly{Q(1), Q(1)}); /* 1 + sqrt 2 */

    Interval h = weil_height(u, ps);
    Interval ref = ref_log_of_sqrt_plus(2, 1, 192).mul_2exp(-1);
    CHECK(overlaps(h, ref));
    CHECK(h.rad_double() < 1e-20);
    CHECK(std::abs(h.mid_double() - 0.4406867935097715) < 1e-13);

    Interval reg = regulator({u}, ps);
    CHECK(overlaps(reg, ref_log_of_sqrt_plus(2, 1, 192)));
    CHECK(std::abs(reg.mid_double() - 0.8813735870195430) < 1e-13);

    /* height is invariant under inversion and doubles under squaring */
    CHECK(overlaps(weil_height(elem_inv(u), ps), h));
    CHECK(overlaps(weil_height(elem_mul(u, u), ps), h.mul_2exp(1)));
}

TEST_CASE("product formula") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    FieldElement u(k, RatPoly{Q(1), Q(1)});
    CHECK(product_formula_sum(u, ps).contains_zero());
    CHECK(product_formula_sum(elem_inv(u), ps).contains_zero());

    /* non-units sum to log |norm| instead: sqrt 2 has norm -2 */
    Interval s = product_formula_sum(elem_generator(k), ps);
    CHECK(overlaps(s, Interval::exact(2, 192).log()));
    CHECK_FALSE(s.contains_zero());
}

TEST_CASE("height gates") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    CHECK_THROWS_AS(weil_height(elem_generator(k), ps), not_a_unit);
    CHECK_THROWS_AS(weil_height(elem_from_int(k, 3), ps), not_a_unit);

    /* torsion units have height exactly zero: every log is an exact 0 */
    CHECK(weil_height(elem_from_int(k, -1), ps).is_exact_zero());
}

TEST_CASE("regulator gates") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    FieldElement u(k, RatPoly{Q(1), Q(1)});
    CHECK_THROWS_AS(regulator({u, u}, ps), hypothesis_violated);
    CHECK_THROWS_AS(regulator({elem_generator(k)}, ps), not_a_unit);
}

TEST_CASE("golden ratio field") {
    NumberField k("sqrt5", IntPoly({-5, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    FieldElement phi(k, RatPoly{Q(1, 2), Q(1, 2)});
    CHECK(is_unit(phi));

    /* log phi = log(1 + sqrt 5) - log 2 */
    Interval logphi = ref_log_of_sqrt_plus(5, 1, 192)
                          .sub(Interval::exact(2, 192).log());
    CHECK(overlaps(regulator({phi}, ps), logphi));
    CHECK(overlaps(weil_height(phi, ps), logphi.mul_2exp(-1)));
    CHECK(std::abs(regulator({phi}, ps).mid_double() - 0.4812118250596035) < 1e-13);
}

TEST_CASE("unit of the square root of 3") {
    NumberField k("sqrt3", IntPoly({-3, 0, 1}));
    PlaceSet ps = compute_places(k, 128);
    FieldElement u(k, RatPoly{Q(2), Q(1)}); /* 2 + sqrt 3, norm 1 */
    CHECK(overlaps(regulator({u}, ps), ref_log_of_sqrt_plus(3, 2, 192)));
}

TEST_CASE("complex places carry weight two") {
    NumberField z5("zeta5", IntPoly({1, 1, 1, 1, 1}));
    PlaceSet ps = compute_places(z5, 128);
    REQUIRE(ps.count() == 2);
    FieldElement u(z5, RatPoly{Q(1), Q(1), Q(0), Q(0)}); /* 1 + zeta */
    CHECK(is_unit(u));

    for (int w = 0; w < ps.count(); w++) {
        CHECK(ps.places[w].local_degree == 2);
        CHECK(overlaps(weighted_place_log(u, ps, w),
                       place_log(u, ps, w).mul_2exp(1)));
    }

    /* |1 + zeta| at the two places is phi and 1/phi */
    Interval logphi = ref_log_of_sqrt_plus(5, 1, 192)
                          .sub(Interval::exact(2, 192).log());
    CHECK(overlaps(place_log(u, ps, 0), logphi));
    CHECK(overlaps(place_log(u, ps, 1), logphi.neg()));

    CHECK(product_formula_sum(u, ps).contains_zero());
    CHECK(overlaps(weil_height(u, ps), logphi.mul_2exp(-1)));
    CHECK(overlaps(regulator({u}, ps), logphi.mul_2exp(1)));

    /* torsion: the generator sits on the unit circle, so its height is a
     * tiny ball around zero (not exact: the root enclosure has width) */
    Interval ht = weil_height(elem_generator(z5), ps);
    CHECK(ht.contains(mpq_class(0)));
    CHECK(ht.rad_double() < 1e-30);

    std::vector<Interval> lv = log_vector(u, ps);
    REQUIRE(static_cast<int>(lv.size()) == ps.count());
    CHECK(overlaps(lv[0], weighted_place_log(u, ps, 0)));
}

TEST_CASE("rank three regulator in the biquadratic field") {
    NumberField l("biquad", IntPoly({1, 0, -10, 0, 1}));
    PlaceSet ps = compute_places(l, 128);
    REQUIRE(ps.count() == 4);
    FieldElement e1(l, RatPoly{Q(1), Q(-9, 2), Q(0), Q(1, 2)}); /* 1 + sqrt 2 */
    FieldElement e2(l, RatPoly{Q(2), Q(11, 2), Q(0), Q(-1, 2)}); /* 2 + sqrt 3 */
    FieldElement e3 = elem_generator(l);                         /* sqrt2 + sqrt3 */
    CHECK(is_unit(e1));
    CHECK(is_unit(e2));
    CHECK(is_unit(e3));

    Interval reg = regulator({e1, e2, e3}, ps);
    CHECK(reg.sign() == Sign::Positive);

    /* the log matrix works out to |det| = 4 log(1+sqrt2) log(2+sqrt3) log(sqrt2+sqrt3) */
    Interval s2 = Interval::exact(2, 192).sqrt_nonneg();
    Interval s3 = Interval::exact(3, 192).sqrt_nonneg();
    Interval ref = ref_log_of_sqrt_plus(2, 1, 192)
                       .mul(ref_log_of_sqrt_plus(3, 2, 192))
                       .mul(s2.add(s3).log())
                       .mul_2exp(2);
    CHECK(overlaps(reg, ref));
    CHECK(std::abs(reg.mid_double() - 5.321797160380741) < 1e-9);
}

TEST_CASE("height does not depend on the ambient field") {
    NumberField k("sqrt2", IntPoly({-2, 0, 1}));
    NumberField l("biquad", IntPoly({1, 0, -10, 0, 1}));
    PlaceSet psk = compute_places(k, 128);
    PlaceSet psl = compute_places(l, 128);
    FieldElement small(k, RatPoly{Q(1), Q(1)});
    FieldElement big(l, RatPoly{Q(1), Q(-9, 2), Q(0), Q(1, 2)});
    CHECK(overlaps(weil_height(small, psk), weil_height(big, psl)));
}
