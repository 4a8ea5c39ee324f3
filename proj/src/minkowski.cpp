#include "mku/minkowski.hpp"

#include <utility>

#include "mku/errors.hpp"

namespace mku {

namespace {

/* log of the normalized absolute value at w (exponent d_w / d) */
Interval norm_log(FieldElement const & a, PlaceSet const & ps, int w) {
    mpq_class const e(ps.places[w].local_degree, ps.field->degree());
    return place_log(a, ps, w).scale(e);
}

/* entry (m, n) of the conjugate log matrix of a at the place `what` */
IMat conjugate_log_matrix(GaloisGroup const & G, PlaceSet const & ps,
                          std::vector<int> const & T, FieldElement const & a,
                          int what) {
    int const n = ps.count();
    IMat m(n);
    for (int r = 0; r < n; r++) {
        m[r].reserve(n);
        for (int c = 0; c < n; c++) {
            int const sig = G.compose(G.inverse(T[r]), T[c]);
            m[r].push_back(norm_log(G.apply(sig, a), ps, what));
        }
    }
    return m;
}

} // namespace

SpecialUnitCertificate construct_special_unit(PlaceSet const & ps,
                                              std::vector<FieldElement> const & units,
                                              int what) {
    int const n_places = ps.count();
    if (what < 0 || what >= n_places)
        throw structure_violation("place index out of range");
    if (n_places < 2)
        throw structure_violation("construction needs at least two places");
    if (static_cast<int>(units.size()) < n_places - 1)
        throw structure_violation("construction needs one unit per other place");
    std::vector<FieldElement> eta(units.begin(), units.begin() + (n_places - 1));

    if (regulator(eta, ps).sign() != Sign::Positive)
        throw undecided("unit system not certified independent");

    IMat a;
    for (int w = 0; w < n_places; w++) {
        if (w == what) continue;
        std::vector<Interval> row;
        row.reserve(eta.size());
        for (auto const & e : eta) row.push_back(norm_log(e, ps, w));
        a.push_back(std::move(row));
    }
    std::vector<mpz_class> xi = positive_integer_point(a);

    FieldElement prod = elem_one(eta.front().field());
    for (size_t n = 0; n < eta.size(); n++)
        prod = elem_mul(prod, elem_pow(eta[n], xi[n]));
    FieldElement beta = elem_inv(prod);

    std::vector<Sign> signs;
    signs.reserve(n_places);
    for (int w = 0; w < n_places; w++) {
        Sign const s = place_log(beta, ps, w).sign();
        Sign const expect = w == what ? Sign::Positive : Sign::Negative;
        if (s == Sign::Undecided)
            throw undecided("log sign not decided at a place");
        if (s != expect)
            throw consistency_failure("constructed unit has a wrong log sign");
        signs.push_back(s);
    }

    Interval height = weil_height(beta, ps);
    std::vector<Interval> hs;
    hs.reserve(eta.size());
    for (auto const & e : eta) hs.push_back(weil_height(e, ps));
    Interval bound = sum(hs, ps.prec).scale(2);
    if (!height.le_consistent(bound))
        throw consistency_failure("height exceeds twice the input height sum");
    if (!height.le_certified(bound))
        throw undecided("height bound not certified");

    return SpecialUnitCertificate{std::move(beta), what,       std::move(xi),
                                  std::move(signs), std::move(height),
                                  std::move(bound), true};
}

bool verify_special(GaloisGroup const & G, PlaceSet const & ps,
                    FieldElement const & beta, int what) {
    if (what < 0 || what >= ps.count())
        throw structure_violation("place index out of range");
    if (!is_unit(beta)) throw not_a_unit("only units can be one-sided");
    if (is_torsion(beta)) return false; /* every log vanishes exactly */

    bool direct_true = true, direct_false = false;
    for (int w = 0; w < ps.count(); w++) {
        Sign const s = place_log(beta, ps, w).sign();
        Sign const expect = w == what ? Sign::Positive : Sign::Negative;
        if (s != expect) direct_true = false;
        if (s != Sign::Undecided && s != expect) direct_false = true;
    }

    auto const T = place_transversal(G, ps, what);
    bool conj_true = true, conj_false = false;
    for (size_t m = 0; m < T.size(); m++)
        for (size_t n = 0; n < T.size(); n++) {
            if (m == n) continue;
            int const sig = G.compose(G.inverse(T[m]), T[n]);
            Sign const s = place_log(G.apply(sig, beta), ps, what).sign();
            if (s != Sign::Negative) conj_true = false;
            if (s == Sign::Positive) conj_false = true;
        }

    if ((direct_true && conj_false) || (direct_false && conj_true))
        throw consistency_failure("per-place and conjugate verdicts disagree");
    if (direct_true && conj_true) return true;
    if (direct_false && conj_false) return false;
    throw undecided("log signs not all decided");
}

LogMatrixCertificate minkowski_matrix(GaloisGroup const & G, PlaceSet const & ps,
                                      FieldElement const & beta, int what) {
    if (!verify_special(G, ps, beta, what))
        throw hypothesis_violated("matrix requires a one-sided unit");
    int const n = ps.count();
    std::vector<int> T = place_transversal(G, ps, what);
    IMat mat = conjugate_log_matrix(G, ps, T, beta, what);

    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            Sign const s = mat[i][j].sign();
            if (s == Sign::Undecided)
                throw undecided("matrix entry sign not decided");
            if (s != (i == j ? Sign::Positive : Sign::Negative))
                throw consistency_failure("matrix entry has a wrong sign");
        }

    std::vector<Interval> col_sums;
    col_sums.reserve(n);
    for (int j = 0; j < n; j++) {
        std::vector<Interval> col;
        col.reserve(n);
        for (int i = 0; i < n; i++) col.push_back(mat[i][j]);
        Interval s = sum(col, ps.prec);
        if (!s.contains_zero())
            throw consistency_failure("column sum excludes zero");
        col_sums.push_back(std::move(s));
    }

    std::vector<Interval> null_vec = check_null_sign(mat);
    Sign const null_sign = null_vec.front().sign();
    if (null_sign == Sign::Undecided)
        throw undecided("kernel vector sign not decided");

    int const rank = certified_rank(mat, 1);
    if (rank != n - 1)
        throw consistency_failure("matrix rank fell short");

    /* the witness matrix also has vanishing row sums: the conjugate
     * product is the norm when every place is real, and conjugation is
     * absorbed into beta * rho(beta) when every place is complex */
    bool all_real = true, all_complex = true;
    for (auto const & p : ps.places) (p.is_real ? all_complex : all_real) = false;
    if (!all_real && !all_complex)
        throw structure_violation("places must be all real or all complex");

    FieldElement witness = beta;
    IMat wmat = mat;
    if (all_complex) {
        Subgroup const stab = place_stabilizer(G, ps, what);
        int const rho = stab.back();
        witness = elem_mul(beta, G.apply(rho, beta));
        wmat = conjugate_log_matrix(G, ps, T, witness, what);
    }

    std::vector<Interval> row_sums;
    row_sums.reserve(n);
    for (int i = 0; i < n; i++) {
        Interval s = sum(wmat[i], ps.prec);
        if (!s.contains_zero())
            throw consistency_failure("witness row sum excludes zero");
        row_sums.push_back(std::move(s));
    }

    Interval cof = check_cofactor_constancy(wmat);
    if (cof.sign() == Sign::Undecided)
        throw undecided("cofactor sign not decided");

    return LogMatrixCertificate{std::move(T),       std::move(mat),
                                std::move(col_sums), rank,
                                std::move(null_vec), null_sign,
                                std::move(witness),  std::move(row_sums),
                                std::move(cof)};
}

ConjugateSubgroupCertificate conjugate_subgroup_certificate(
    GaloisGroup const & G, PlaceSet const & ps, FieldElement const & beta,
    int what, std::vector<FieldElement> const & basis) {
    if (!verify_special(G, ps, beta, what))
        throw hypothesis_violated("certificate requires a one-sided unit");
    int const n = ps.count();
    if (static_cast<int>(basis.size()) < n - 1)
        throw structure_violation("basis needs one unit per nontrivial place");
    std::vector<FieldElement> bas(basis.begin(), basis.begin() + (n - 1));

    std::vector<int> const T = place_transversal(G, ps, what);
    IMat const mat = conjugate_log_matrix(G, ps, T, beta, what);

    int minors = 0;
    for (int dr = 0; dr < n; dr++)
        for (int dc = 0; dc < n; dc++) {
            std::vector<int> rows, cols;
            for (int i = 0; i < n; i++) {
                if (i != dr) rows.push_back(i);
                if (i != dc) cols.push_back(i);
            }
            if (interval_minor(mat, rows, cols).sign() == Sign::Undecided)
                throw undecided("a maximal minor is not certified nonzero");
            minors++;
        }

    std::vector<FieldElement> conj;
    conj.reserve(n);
    for (int m = 0; m < n; m++) conj.push_back(G.apply(T[m], beta));
    FieldElement prod = elem_one(beta.field());
    for (auto const & c : conj) prod = elem_mul(prod, c);
    bool const torsion = is_torsion(prod);

    std::vector<FieldElement> const lead(conj.begin(), conj.end() - 1);
    Interval conj_reg = regulator(lead, ps);
    Interval basis_reg = regulator(bas, ps);
    if (basis_reg.sign() != Sign::Positive)
        throw undecided("basis regulator not certified positive");
    Interval ratio = conj_reg.div(basis_reg);

    Interval const h = weil_height(beta, ps);
    Interval rhs = h.scale(beta.field().degree()).pow_int(n - 1);

    bool const certified = conj_reg.le_certified(rhs);
    bool const ok = conj_reg.le_consistent(rhs);
    if (torsion && !ok)
        throw consistency_failure("regulator bound refuted on an exact index");

    return ConjugateSubgroupCertificate{minors,   torsion,
                                        std::move(conj_reg), std::move(basis_reg),
                                        std::move(ratio),    std::move(rhs),
                                        certified, ok};
}

} // namespace mku
