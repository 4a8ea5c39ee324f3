#ifndef MKU_RELATIVE_HPP_
#define MKU_RELATIVE_HPP_

#include <utility>
#include <vector>

#include "mku/galois.hpp"
#include "mku/groupfunc.hpp"
#include "mku/heights.hpp"
#include "mku/minkowski.hpp"
#include "mku/places.hpp"

namespace mku {

/* A subfield presented by a generator: H is the exact stabilizer of the
 * generator in the automorphism group, the fibers partition the places
 * over the subfield places, and the unit ranks follow from the counts
 * (rank below = fiber count minus one, rank above = place count minus
 * one). Only proper intermediate fields with 1 <= r_k < r_l are
 * accepted; anything else is an excluded case. */
struct RelativeExtension {
    Subgroup H;
    FieldElement k_generator;
    std::vector<std::vector<int>> fibers;
    int r_l;
    int r_k;
    int relative_rank; /* r_l - r_k */
};

RelativeExtension make_relative_extension(GaloisGroup const & G,
                                          PlaceSet const & ps,
                                          FieldElement const & k_generator);

/* Exact product of the H-conjugates; the result is verified fixed by
 * every element of H. */
FieldElement relative_norm(GaloisGroup const & G, FieldElement const & a,
                           Subgroup const & H);

/* True iff the relative norm of a is a root of unity (exact test),
 * cross-checked numerically: the weighted logs of a summed over each
 * fiber must be consistent with zero. A certified-nonzero fiber sum on
 * an exact yes is an internal contradiction (consistency_failure). */
bool is_relative_unit(GaloisGroup const & G, PlaceSet const & ps,
                      RelativeExtension const & E, FieldElement const & a);

/* True iff every automorphism image of every listed unit is again a
 * relative unit (exhaustive over the group). */
bool galois_action_preserves(GaloisGroup const & G, PlaceSet const & ps,
                             RelativeExtension const & E,
                             std::vector<FieldElement> const & units);

/* The weight-function product: the coset representatives (fronts) act on
 * a and the images are multiplied with the coset values as exponents.
 * Exact; multiplicative in a and additive in f by construction. */
FieldElement delta(GaloisGroup const & G, FieldElement const & a,
                   CosetFunction const & f);

/* Exact test of the action identity eta(delta(a, f)) = delta(a, act(eta, f)).
 * Holds for every a when the coset chart is by singletons (trivial
 * stabilizer); with a stabilizer of order two it needs a invariant under
 * the stabilizing conjugation (such as beta * rho(beta)). */
bool delta_equivariance_check(GaloisGroup const & G, FieldElement const & a,
                              CosetFunction const & f, int eta);

/* Rank facts tying the conjugate log matrix to the relative unit group:
 * the matrix of beta at the place has certified rank N-1 with a kernel
 * vector of uniform sign, and the difference-lattice basis maps into the
 * relative units through delta(beta, .), exactly, member by member. */
struct KernelImageCertificate {
    int matrix_rank;
    Sign kernel_sign;
    int lattice_rank;
    bool images_relative;
};

KernelImageCertificate kernel_and_image_ranks(GaloisGroup const & G,
                                              PlaceSet const & ps,
                                              RelativeExtension const & E,
                                              FieldElement const & beta,
                                              int what);

/* The relative unit gamma = delta(base, lambda) together with all its
 * certificates: exact relative-norm torsion (with the witness order),
 * the independent conjugate family (labels and certified log rank R),
 * the action-transport identity on every conjugate, and height bounds
 * against the one-sided unit and against the fixture basis. The
 * conjugate-lattice regulator is informational. */
struct RelativeUnitCertificate {
    FieldElement gamma;
    CosetFunction lambda;
    FieldElement base;
    std::vector<std::pair<int, int>> conjugate_set;
    int independence_rank;
    long norm_torsion_witness;
    Interval height;
    Interval height_bound;
    Interval conjugate_regulator;
};

RelativeUnitCertificate construct_relative_unit(GaloisGroup const & G,
                                                PlaceSet const & ps,
                                                RelativeExtension const & E,
                                                std::vector<FieldElement> const & units,
                                                int what);

} // namespace mku

#endif
