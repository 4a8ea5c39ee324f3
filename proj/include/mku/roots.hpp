#ifndef MKU_ROOTS_HPP_
#define MKU_ROOTS_HPP_

#include <vector>

#include "mku/polynomial.hpp"

namespace mku {

/* One certified root enclosure. Real roots carry an exact-zero imaginary
 * interval; non-real roots are reported once per conjugate pair with the
 * positive-imaginary representative. */
struct RootBox {
    bool is_real;
    ComplexInterval box;
};

/* Certified, pairwise-disjoint enclosures of all complex roots of a
 * squarefree integer polynomial.
 *
 * Method: Durand-Kerner in hardware floats for starting points, an exact
 * Sturm count to decide how many roots are real, MPFR Newton refinement,
 * then a-posteriori Weierstrass inclusion disks D(z_i, n|W_i|) with
 *   W_i = p(z_i) / prod_{j != i} (z_i - z_j)
 * evaluated in interval arithmetic: the union of the disks contains every
 * root and any component of k disks contains exactly k roots, so pairwise
 * disjoint disks pin one root each. A disk centered on the real axis that
 * is disjoint from the others must hold a real root (the conjugate of its
 * root lies in the mirrored disk, which is the disk itself); a disk
 * certified away from the axis holds a strictly complex one.
 *
 * Throws undecided when disjointness cannot be certified at this precision
 * (drivers escalate). */
std::vector<RootBox> isolate_roots(IntPoly const & p, mpfr_prec_t prec);

} // namespace mku

#endif
