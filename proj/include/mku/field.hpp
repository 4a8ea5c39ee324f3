#ifndef MKU_FIELD_HPP_
#define MKU_FIELD_HPP_

#include <memory>
#include <string>
#include <vector>

#include "mku/polynomial.hpp"

namespace mku {

/* Number field Q[x]/(p) for a monic integer polynomial p of degree >= 2,
 * verified squarefree and without rational roots at construction.
 * Irreducibility beyond that is a fixture promise; everything downstream
 * that would break on a reducible p fails loudly (non-invertible nonzero
 * elements, wrong automorphism counts). */
class NumberField {
  public:
    NumberField(std::string label, IntPoly min_poly);

    std::string const & label() const { return label_; }
    IntPoly const & min_poly() const { return min_poly_; }
    RatPoly const & min_poly_rat() const { return min_poly_rat_; }
    int degree() const { return degree_; }
    mpz_class const & discriminant() const { return disc_; }

  private:
    std::string label_;
    IntPoly min_poly_;
    RatPoly min_poly_rat_;
    int degree_;
    mpz_class disc_;
};

/* Element in the power basis 1, θ, ..., θ^(d-1); coeffs always has exactly
 * d entries. */
class FieldElement {
  public:
    FieldElement(NumberField const & field, RatPoly coeffs);

    NumberField const & field() const { return *field_; }
    RatPoly const & coeffs() const { return coeffs_; }
    bool is_zero() const;

    bool operator==(FieldElement const & o) const;
    bool operator!=(FieldElement const & o) const { return !(*this == o); }

  private:
    NumberField const * field_;
    RatPoly coeffs_; /* size == degree, trailing zeros kept */
};

FieldElement elem_zero(NumberField const & f);
FieldElement elem_one(NumberField const & f);
FieldElement elem_generator(NumberField const & f);
FieldElement elem_from_int(NumberField const & f, long v);

FieldElement elem_add(FieldElement const & a, FieldElement const & b);
FieldElement elem_sub(FieldElement const & a, FieldElement const & b);
FieldElement elem_neg(FieldElement const & a);
FieldElement elem_mul(FieldElement const & a, FieldElement const & b);
FieldElement elem_inv(FieldElement const & a); /* not_invertible / division_by_zero */
FieldElement elem_div(FieldElement const & a, FieldElement const & b);
FieldElement elem_pow(FieldElement const & a, mpz_class const & e);

/* Characteristic polynomial of multiplication by a (monic, degree d),
 * computed exactly from the multiplication matrix. */
RatPoly char_poly(FieldElement const & a);

/* Norm and trace from the characteristic polynomial. */
mpq_class norm(FieldElement const & a);
mpq_class trace(FieldElement const & a);

/* Norm computed independently as Res(p, a(x)); equals norm() for monic p. */
mpq_class norm_by_resultant(FieldElement const & a);

/* Minimal polynomial of a over Q: the squarefree part of char_poly (the
 * characteristic polynomial of an element of a field is a prime power). */
RatPoly minimal_polynomial(FieldElement const & a);

/* True iff a is an algebraic integer (char_poly has integer coefficients)
 * whose norm is +-1; both checks exact. */
bool is_unit(FieldElement const & a);

/* True iff a is a root of unity: a integral, and a^m = 1 for some m with
 * phi(m) | degree. Exact. Returns the witness order through *order. */
bool is_torsion(FieldElement const & a, long * order = nullptr);

FieldElement eval_poly_at(FieldElement const & a, RatPoly const & p);

std::vector<std::string> coeff_strings(FieldElement const & a);

} // namespace mku

#endif
