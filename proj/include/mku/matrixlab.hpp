#ifndef MKU_MATRIXLAB_HPP_
#define MKU_MATRIXLAB_HPP_

#include <vector>

#include "mku/interval.hpp"

namespace mku {

using IMat = std::vector<std::vector<Interval>>;
using QMat = std::vector<std::vector<mpq_class>>;

/* Division-free determinant: Laplace expansion shared over column subsets,
 * O(2^n n) ball operations. No pivoting ever happens, so exact inputs
 * propagate to an exact result. */
Interval interval_det(IMat const & a);

/* Determinant of the submatrix on the given rows and columns (ascending). */
Interval interval_minor(IMat const & a, std::vector<int> const & rows,
                        std::vector<int> const & cols);

/* All signed cofactors c[v][n] = (-1)^(v+n) det(a minus row v, column n). */
IMat interval_cofactors(IMat const & a);

/* True when some r x r minor has a determinant of certified sign. */
bool rank_at_least(IMat const & a, int r);

/* Exact rational linear algebra; sizes stay tiny, plain elimination. */
mpq_class det_rational(QMat a);
int rank_rational(QMat a);
/* Unique solution of a square system; throws rank_deficient otherwise. */
std::vector<mpq_class> solve_rational(QMat a, std::vector<mpq_class> b);

/* Exact rational value of a dyadic mpfr number. */
mpq_class dyadic_to_rational(mpfr_srcptr x);

/* Integer vector xi with 0 < sum_n a[m][n] xi[n] <= sum_n |a[m][n]| in
 * every row m. The strict lower bound is certified by the interval sign;
 * the upper bound is compared on interval upper endpoints. Requires a
 * square matrix whose determinant enclosure excludes zero (undecided
 * otherwise, so callers can escalate precision).
 *
 * Candidates come from the scaled solutions of the midpoint system: with
 * s the vector of row sums of |a[m][n]| and x the exact solution of
 * (mid a) x = (mid s), the vector (1/2 + 1/l) x is rounded to integers
 * for l = 1, 2, 3, ... and each rounding is tested rigorously. Some l
 * always works in exact arithmetic; if the schedule is exhausted an
 * expanding box sweep takes over. The number of rigorously tested
 * candidates is capped (iteration_cap_exceeded). Deterministic for
 * identical input. */
std::vector<mpz_class> positive_integer_point(IMat const & a, long cap = 1000000);

/* The same two-sided predicate decided exactly for rational data. */
bool positive_point_valid(QMat const & a, std::vector<mpz_class> const & xi);

/* Exact-or-certified rank. The lower bound comes from a minor whose
 * determinant enclosure excludes zero; the upper bound starts at
 * min(rows, cols) minus the number of caller-supplied independent linear
 * dependencies and is lowered while every minor of the next size is
 * exactly zero. Returns the rank only when the bounds meet; throws
 * undecided when fuzz keeps them apart. */
int certified_rank(IMat const & a, int dependencies = 0);

/* Nonsingularity through structure: certified positive column sums plus
 * certified negative off-diagonal entries force a nonzero determinant.
 * Checks the hypotheses entrywise (hypothesis_violated), then requires
 * the determinant enclosure to exclude zero as numerical confirmation
 * (undecided when it cannot). Returns the determinant enclosure. */
Interval check_minkowski_nonsingular(IMat const & a);

/* For a square matrix whose row sums and column sums all vanish, the
 * signed cofactors (-1)^(v+n) det(a minus row v, column n) share one
 * common value. Hypotheses are checked as enclosures containing zero
 * (hypothesis_violated); certified disagreement between two cofactors is
 * consistency_failure. Returns an enclosure of the common value. */
Interval check_cofactor_constancy(IMat const & a);

/* Kernel vector with a certified uniform sign: for a matrix with zero
 * column sums and certified negative off-diagonal entries, the signed
 * cofactors along the first row span the kernel and share one sign.
 * Verifies the hypotheses (hypothesis_violated), that a y encloses the
 * zero vector (consistency_failure), and that every coordinate has the
 * same decided sign (undecided otherwise). Returns y. */
std::vector<Interval> check_null_sign(IMat const & a);

} // namespace mku

#endif
