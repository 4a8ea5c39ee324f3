#ifndef MKU_PLACES_HPP_
#define MKU_PLACES_HPP_

#include <vector>

#include "mku/field.hpp"
#include "mku/galois.hpp"
#include "mku/roots.hpp"

namespace mku {

/* Archimedean place of the field: a certified root enclosure of the
 * defining polynomial, one per conjugate pair (positive-imaginary
 * representative), local degree 1 (real) or 2 (complex). */
struct Place {
    ComplexInterval root;
    bool is_real;
    int local_degree;
};

struct PlaceSet {
    NumberField const * field;
    mpfr_prec_t prec;
    std::vector<Place> places;

    int count() const { return static_cast<int>(places.size()); }
};

/* All archimedean places, certified pairwise disjoint and deterministically
 * ordered: descending real-part midpoint, then descending imaginary-part
 * midpoint. The sum of local degrees must equal the field degree. */
PlaceSet compute_places(NumberField const & field, mpfr_prec_t prec);

/* Image place of w under sigma, defined by |a| at (sigma w) = |sigma^{-1} a|
 * at w: the root of sigma w is the image of w's root under the inverse
 * automorphism, matched against the certified enclosures. Throws
 * ambiguous_match (escalate) if the evaluation overlaps more than one
 * enclosure. */
int act_on_place(GaloisGroup const & G, int sigma, PlaceSet const & ps, int w);

/* Stabilizer of w in G; order 1 when the field is totally real, 2 when
 * totally complex (the restriction of complex conjugation), anything else
 * is a structure_violation. */
Subgroup place_stabilizer(GaloisGroup const & G, PlaceSet const & ps, int w);

/* Partition of the places into fibers over the archimedean places of the
 * subfield fixed by H (H = exact stabilizer of the subfield generator):
 * fibers are the H-orbits. Cross-checked against the embedded values of
 * the generator: enclosures must overlap (up to conjugation) within a
 * fiber and be certified separated across fibers. Fibers have equal
 * cardinality and are permuted transitively by G. */
std::vector<std::vector<int>> fiber_over_subfield(GaloisGroup const & G,
                                                  PlaceSet const & ps,
                                                  Subgroup const & H,
                                                  FieldElement const & gen);

/* One automorphism per place, aligned with the place order: entry m is the
 * first group index carrying place `what` to place m. Entry `what` is the
 * identity. These representatives form a transversal of the left cosets of
 * the stabilizer of `what`. */
std::vector<int> place_transversal(GaloisGroup const & G, PlaceSet const & ps,
                                   int what);

} // namespace mku

#endif
