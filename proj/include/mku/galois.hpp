#ifndef MKU_GALOIS_HPP_
#define MKU_GALOIS_HPP_

#include <vector>

#include "mku/field.hpp"
#include "mku/interval.hpp"

namespace mku {

/* Finite group given by a multiplication table over indices 0..n-1 with 0
 * the identity. Construction validates the full set of axioms (closure,
 * identity, cancellation, associativity by brute force; orders stay small
 * here), so a GroupTable in hand is a group. */
class GroupTable {
  public:
    /* Empty placeholder; only from_mul produces a usable group. */
    GroupTable() = default;

    static GroupTable from_mul(std::vector<std::vector<int>> mul);

    int order() const { return n_; }
    int op(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int element_order(int a) const;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

/* Subgroups travel as sorted index lists containing 0. */
using Subgroup = std::vector<int>;

bool is_subgroup(GroupTable const & g, Subgroup const & h);
bool is_normal(GroupTable const & g, Subgroup const & h);

Subgroup subgroup_generated(GroupTable const & g, std::vector<int> const & gens);

/* Every subgroup, ordered by size then lexicographically. Exhaustive subset
 * scan; refuses orders above 16. */
std::vector<Subgroup> all_subgroups(GroupTable const & g);

/* Left cosets aH, each sorted ascending, listed in order of their smallest
 * member; the coset of the identity (H itself) therefore comes first. */
std::vector<std::vector<int>> left_cosets(GroupTable const & g, Subgroup const & h);

/* Smallest member of each left coset, in coset order. */
std::vector<int> coset_transversal(GroupTable const & g, Subgroup const & h);

/* Index into left_cosets(g, h) of the coset containing a. */
int coset_of(std::vector<std::vector<int>> const & cosets, int a);

/* The product set HK, returned sorted when it is a subgroup; throws
 * not_normal when it is not one (H normal in G suffices). */
Subgroup product_subgroup(GroupTable const & g, Subgroup const & h,
                          Subgroup const & k);

/* Field automorphism, stored as the image of the generator: a polynomial g
 * of degree < d with p(g(x)) = 0 mod p(x), the identity being g = x. The
 * congruence is verified in exact rational arithmetic before an
 * Automorphism is ever created. */
struct Automorphism {
    RatPoly image;
};

/* The full automorphism group of a normal field. Composition is realised
 * on generator images: because ring maps fixing Q slide through rational
 * coefficients, (sigma_i o sigma_j)(theta) = sigma_i(g_j(theta)) =
 * g_j(g_i(theta)), so compose(i, j) names sigma_i o sigma_j with sigma_j
 * acting first. autos[0] is the identity and the rest are sorted by
 * coefficient vector, making the indexing reproducible across runs and
 * precisions. */
class GaloisGroup {
  public:
    NumberField const & field() const { return *field_; }
    int order() const { return static_cast<int>(autos_.size()); }
    Automorphism const & at(int i) const { return autos_[i]; }
    GroupTable const & table() const { return table_; }

    int compose(int i, int j) const { return table_.op(i, j); }
    int inverse(int i) const { return table_.inverse(i); }

    /* sigma_i applied to an element in the power basis. */
    FieldElement apply(int i, FieldElement const & a) const;

    /* Index of an exact generator image, -1 when absent. */
    int find(RatPoly const & image) const;

    friend GaloisGroup recover_automorphisms(NumberField const & k,
                                             PrecisionPolicy const & pol);

  private:
    NumberField const * field_ = nullptr;
    std::vector<Automorphism> autos_;
    GroupTable table_;
};

/* Recovers all d automorphisms of a normal degree-d field numerically and
 * certifies them exactly.
 *
 * One embedding theta -> z0 is tracked as a high-precision enclosure; for
 * every root z_i of p the integer relation
 *     a_0 + a_1 z0 + ... + a_{d-1} z0^{d-1} - b z_i = 0
 * is searched by lattice reduction on a scaled basis, giving the candidate
 * image g = (sum a_j x^j) / b. Candidates whose denominator exceeds the
 * current bound (sqrt |disc p|, widened by 10^3 per retry) are discarded;
 * survivors face the exact gate p(g(x)) = 0 mod p(x). Failure to certify d
 * distinct images escalates the working precision; running out of
 * precision throws not_normal. */
GaloisGroup recover_automorphisms(NumberField const & k,
                                  PrecisionPolicy const & pol = {});

} // namespace mku

#endif
