#ifndef MKU_HEIGHTS_HPP_
#define MKU_HEIGHTS_HPP_

#include <vector>

#include "mku/field.hpp"
#include "mku/places.hpp"

namespace mku {

/* log |a| at the embedding attached to place w (unweighted). Throws
 * undecided when the value enclosure cannot be bounded away from zero. */
Interval place_log(FieldElement const & a, PlaceSet const & ps, int w);

/* Local-degree weighted log: d_w log |a|_w. These are the coordinates in
 * which the product formula for units reads "the coordinates sum to 0". */
Interval weighted_place_log(FieldElement const & a, PlaceSet const & ps, int w);

std::vector<Interval> log_vector(FieldElement const & a, PlaceSet const & ps);

/* Sum of all weighted logs; encloses 0 for every unit. */
Interval product_formula_sum(FieldElement const & a, PlaceSet const & ps);

/* Height of a unit: half the total variation of the weighted log vector,
 * divided by the field degree,
 *     h(a) = (1 / 2d) sum_w d_w |log |a|_w|.
 * Exact-arithmetic gate: refuses non-units (not_a_unit), and checks that
 * the weighted logs are consistent with summing to zero. */
Interval weil_height(FieldElement const & a, PlaceSet const & ps);

/* Regulator of N-1 units (N = number of places): absolute value of the
 * determinant of the weighted log matrix with the last place dropped.
 * Any dropped place gives the same value because the columns sum to zero.
 * An empty unit list (N = 1) gives 1. */
Interval regulator(std::vector<FieldElement> const & units, PlaceSet const & ps);

} // namespace mku

#endif
