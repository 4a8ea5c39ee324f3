#ifndef MKU_LLL_HPP_
#define MKU_LLL_HPP_

#include <gmpxx.h>

#include <vector>

namespace mku {

/* In-place LLL reduction (delta = 3/4) of the rows of b, exact rational
 * Gram-Schmidt arithmetic. Row count and dimension stay as given; rows of
 * zero norm are tolerated at the front. Desk-scale dimensions only. */
void lll_reduce(std::vector<std::vector<mpz_class>> & b);

} // namespace mku

#endif
