#ifndef MKU_MINKOWSKI_HPP_
#define MKU_MINKOWSKI_HPP_

#include <vector>

#include "mku/galois.hpp"
#include "mku/heights.hpp"
#include "mku/matrixlab.hpp"
#include "mku/places.hpp"

namespace mku {

/* A unit whose log absolute value is certified negative at every place
 * except one, where it is certified positive. beta^{-1} is the product of
 * the input units raised to the exponents xi. The height bound is twice
 * the height sum of the inputs; the certificate only exists once the
 * bound is certified on interval endpoints. */
struct SpecialUnitCertificate {
    FieldElement beta;
    int place_index;
    std::vector<mpz_class> xi;
    std::vector<Sign> sign_checks; /* per place, aligned with the PlaceSet */
    Interval height;
    Interval height_bound;
    bool height_bound_ok;
};

/* Conjugate log matrix at the distinguished place: entry (m, n) is the
 * log of the normalized absolute value (exponent d_w / d) of
 * tau_m^{-1} tau_n (beta) there, with tau the place-aligned transversal,
 * so row m reads the log vector of tau_n(beta) at place m. Carries the structure certificates: positive diagonal,
 * negative off-diagonal, column sums consistent with zero, certified rank
 * one less than the matrix size, and a kernel vector of uniform sign.
 * Row sums and the common cofactor value are certified on the witness
 * matrix: the matrix itself when every place is real, the matrix of
 * beta * rho(beta) when every place is complex (rho the conjugation
 * fixing the distinguished place). */
struct LogMatrixCertificate {
    std::vector<int> transversal;
    IMat mat;
    std::vector<Interval> column_sums;
    int rank;
    std::vector<Interval> null_vector;
    Sign null_sign;
    FieldElement witness;
    std::vector<Interval> row_sums;
    Interval cofactor_constant;
};

/* Independence and index data for the subgroup generated by the
 * conjugates of beta. The conjugate regulator is the regulator of the
 * first N-1 conjugates: it equals the regulator of the conjugate
 * subgroup when the full conjugate product is torsion (checked exactly;
 * automatic for totally real fields, where the product is the norm) and
 * is an upper bound for it otherwise. The bound compares that regulator
 * against (degree * height)^{N-1}; bound_certified means the comparison
 * held on interval endpoints, bound_ok that it was not refuted. The two
 * differ only when the bound is an exact equality. */
struct ConjugateSubgroupCertificate {
    int minors_checked;
    bool product_torsion;
    Interval conjugate_regulator;
    Interval basis_regulator;
    Interval index_ratio;
    Interval bound_rhs;
    bool bound_certified;
    bool bound_ok;
};

/* Builds the one-sided unit for the distinguished place from N-1
 * independent units (extra units are ignored): solves for an exponent
 * vector making every log away from the place strictly positive within
 * the row-sum cap, inverts the product, and certifies the per-place
 * signs and the height bound. Throws undecided when a sign or the bound
 * cannot be decided at the working precision. */
SpecialUnitCertificate construct_special_unit(PlaceSet const & ps,
                                              std::vector<FieldElement> const & units,
                                              int what);

/* Decides whether beta is one-sided at the place: checks the per-place
 * sign pattern and, independently, the signs of all off-diagonal
 * conjugate logs at the place itself, and insists the two verdicts
 * agree. Torsion elements are rejected exactly. Returns only decided
 * verdicts; throws undecided otherwise. */
bool verify_special(GaloisGroup const & G, PlaceSet const & ps,
                    FieldElement const & beta, int what);

/* Conjugate log matrix with all structure certificates; requires beta to
 * pass verify_special at the place. */
LogMatrixCertificate minkowski_matrix(GaloisGroup const & G, PlaceSet const & ps,
                                      FieldElement const & beta, int what);

/* Certifies that every maximal square submatrix of the conjugate log
 * matrix is nonsingular and bounds the conjugate subgroup's regulator by
 * (degree * height)^{N-1}; the basis regulator and the ratio against it
 * are reported alongside. */
ConjugateSubgroupCertificate conjugate_subgroup_certificate(
    GaloisGroup const & G, PlaceSet const & ps, FieldElement const & beta,
    int what, std::vector<FieldElement> const & basis);

} // namespace mku

#endif
