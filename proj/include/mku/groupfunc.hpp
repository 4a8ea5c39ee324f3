#ifndef MKU_GROUPFUNC_HPP_
#define MKU_GROUPFUNC_HPP_

#include <vector>

#include "mku/galois.hpp"

namespace mku {

/* Integer-valued function on the left cosets of a stabilizer K inside G,
 * stored against the canonical coset order of left_cosets (identity coset
 * first, then by smallest member). */
struct CosetFunction {
    std::vector<std::vector<int>> cosets;
    std::vector<long> values;

    long at_coset(int c) const { return values.at(c); }
    long at(int g) const { return values.at(coset_of(cosets, g)); }
    long sum() const;
    bool operator==(CosetFunction const & o) const {
        return cosets == o.cosets && values == o.values;
    }
};

/* Left translate: (sigma f)(g K) = f(sigma^{-1} g K). */
CosetFunction act(GroupTable const & g, int sigma, CosetFunction const & f);

/* Orbits of H on the left cosets of K, each orbit sorted, orbits ordered
 * by smallest coset index. In the place picture these are the fibers of
 * the places of the big field over the places of the H-fixed field. */
std::vector<std::vector<int>> coset_fibers(GroupTable const & g,
                                           Subgroup const & h,
                                           Subgroup const & k);

/* The weight function driving relative unit constructions:
 *     J - 1 on the coset K, -1 on the other cosets inside HK, 0 outside,
 * with J = |HK| / |K|. Requires H normal (not_normal) and one of the two
 * supported positions of K relative to H: K inside H, or meeting H only
 * in the identity (case_violation otherwise). */
CosetFunction build_lambda(GroupTable const & g, Subgroup const & h,
                           Subgroup const & k);

/* Membership in the difference lattice: the values must sum to zero over
 * every fiber. */
bool in_difference_lattice(CosetFunction const & f,
                           std::vector<std::vector<int>> const & fibers);

/* Elementary-difference basis of that lattice: for each fiber with cosets
 * m_0 < m_1 < ... the functions e_{m_0} - e_{m_j}, j >= 1; their count is
 * (number of cosets) - (number of fibers). */
std::vector<CosetFunction> lattice_basis(GroupTable const & g,
                                         Subgroup const & h,
                                         Subgroup const & k);

/* Exact integer rank of the span of all |G| left translates of f. */
int translate_rank(GroupTable const & g, CosetFunction const & f);

/* l1 norm of the values (one per coset). */
long one_norm(CosetFunction const & f);

/* Representatives of the K-cosets contained in a subgroup big containing
 * K: the smallest member of each such coset, in coset order. */
std::vector<int> coset_transversal_in(GroupTable const & g, Subgroup const & k,
                                      Subgroup const & big);

struct TranslateFamily {
    std::vector<CosetFunction> members;      /* act(s_i t_j, lambda) */
    std::vector<std::pair<int, int>> labels; /* the (s_i, t_j) pairs used */
    int rank;                                /* exact rank = members.size() */
};

/* The independent translates of lambda: s runs over a transversal of the
 * HK-cosets, t over a transversal of the K-cosets inside HK, and for each
 * s all but one t is kept (keep[i] lists the retained t-indices, J-1 of
 * them; empty keep drops the last index everywhere). Verifies that each
 * translate is supported on its own HK-coset and that the exact integer
 * rank equals the member count; a deficit would contradict the
 * construction, so it surfaces as rank_deficient. */
TranslateFamily independent_translates(GroupTable const & g, Subgroup const & h,
                                       Subgroup const & k,
                                       std::vector<int> const & s_transversal,
                                       std::vector<int> const & t_transversal,
                                       std::vector<std::vector<int>> const & keep = {});

} // namespace mku

#endif
