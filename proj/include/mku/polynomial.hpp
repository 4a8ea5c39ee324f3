#ifndef MKU_POLYNOMIAL_HPP_
#define MKU_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mku/interval.hpp"

namespace mku {

/* Dense exact polynomials, lowest coefficient first. The zero polynomial is
 * the empty vector; every nonzero polynomial keeps a nonzero leading
 * coefficient (normalize() enforces this). */
using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

/* "p/q" or "p"; throws invalid_fixture on parse failure or zero
 * denominator. */
mpq_class parse_rational(std::string const & s);
std::string rational_string(mpq_class const & q);

RatPoly to_rat(IntPoly const & p);

void normalize(RatPoly & p);
int degree(RatPoly const & p); /* -1 for the zero polynomial */
bool is_zero(RatPoly const & p);

RatPoly poly_add(RatPoly const & a, RatPoly const & b);
RatPoly poly_sub(RatPoly const & a, RatPoly const & b);
RatPoly poly_mul(RatPoly const & a, RatPoly const & b);
RatPoly poly_scale(RatPoly const & a, mpq_class const & c);

/* Euclidean division: a = q*b + r with deg r < deg b. */
void poly_divmod(RatPoly const & a, RatPoly const & b, RatPoly & q, RatPoly & r);
RatPoly poly_mod(RatPoly const & a, RatPoly const & b);
RatPoly poly_mulmod(RatPoly const & a, RatPoly const & b, RatPoly const & m);

RatPoly derivative(RatPoly const & p);

/* Monic gcd. */
RatPoly poly_gcd(RatPoly a, RatPoly b);

/* g = gcd(a,b) monic together with u,v such that u*a + v*b = g. */
RatPoly poly_extended_gcd(RatPoly const & a, RatPoly const & b,
                          RatPoly & u, RatPoly & v);

/* Substitution a(b) reduced mod m. */
RatPoly poly_compose_mod(RatPoly const & a, RatPoly const & b, RatPoly const & m);

mpq_class poly_eval(RatPoly const & p, mpq_class const & x);
Interval poly_eval(RatPoly const & p, Interval const & x);
ComplexInterval poly_eval(RatPoly const & p, ComplexInterval const & x);

/* Resultant via the Euclidean remainder sequence over Q. */
mpq_class resultant(RatPoly const & a, RatPoly const & b);

mpz_class poly_discriminant(IntPoly const & p); /* disc = (-1)^(d(d-1)/2) Res(p,p')/lc */

bool is_squarefree(IntPoly const & p);

/* Exact count of distinct real roots (Sturm). */
int count_real_roots(IntPoly const & p);

/* Rational roots p/q (q | lc, p | constant term); divisor enumeration is
 * capped, which is fine for fixture-scale inputs. */
std::optional<mpq_class> find_rational_root(IntPoly const & p);

} // namespace mku

#endif
