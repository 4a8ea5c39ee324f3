#include "mku/galois.hpp"

#include <algorithm>

#include "mku/errors.hpp"
#include "mku/lll.hpp"
#include "mku/roots.hpp"

namespace mku {

GroupTable GroupTable::from_mul(std::vector<std::vector<int>> mul) {
    int const n = static_cast<int>(mul.size());
    if (n == 0) throw structure_violation("empty multiplication table");
    for (auto const & row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw structure_violation("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw structure_violation("multiplication table entry out of range");
    }
    for (int a = 0; a < n; a++)
        if (mul[0][a] != a || mul[a][0] != a)
            throw structure_violation("index 0 is not the identity");
    for (int a = 0; a < n; a++) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; b++) {
            if (seen_row[mul[a][b]]++)
                throw structure_violation("table row is not a permutation");
            if (seen_col[mul[b][a]]++)
                throw structure_violation("table column is not a permutation");
        }
    }
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw structure_violation("multiplication table is not associative");

    GroupTable t;
    t.n_ = n;
    t.inv_.assign(n, -1);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (mul[a][b] == 0) t.inv_[a] = b;
    /* a finite cancellative associative table with identity is a group, so
     * every inverse was found */
    t.mul_ = std::move(mul);
    return t;
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul_[x][a];
        if (++k > n_) throw structure_violation("element order exceeds group order");
    }
    return k;
}

bool is_subgroup(GroupTable const & g, Subgroup const & h) {
    int const n = g.order();
    if (h.empty() || h.front() != 0) return false;
    std::vector<char> in(n, 0);
    for (size_t i = 0; i < h.size(); i++) {
        if (h[i] < 0 || h[i] >= n) return false;
        if (i > 0 && h[i] <= h[i - 1]) return false;
        in[h[i]] = 1;
    }
    for (int a : h)
        for (int b : h)
            if (!in[g.op(a, b)]) return false;
    return true;
}

bool is_normal(GroupTable const & g, Subgroup const & h) {
    if (!is_subgroup(g, h)) return false;
    std::vector<char> in(g.order(), 0);
    for (int a : h) in[a] = 1;
    for (int x = 0; x < g.order(); x++)
        for (int a : h)
            if (!in[g.op(g.op(x, a), g.inverse(x))]) return false;
    return true;
}

Subgroup subgroup_generated(GroupTable const & g, std::vector<int> const & gens) {
    int const n = g.order();
    std::vector<char> in(n, 0);
    in[0] = 1;
    for (int v : gens) {
        if (v < 0 || v >= n) throw structure_violation("generator index out of range");
        in[v] = 1;
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; a++) {
            if (!in[a]) continue;
            for (int b = 0; b < n; b++) {
                if (!in[b]) continue;
                int c = g.op(a, b);
                if (!in[c]) {
                    in[c] = 1;
                    grew = true;
                }
            }
        }
    }
    Subgroup out;
    for (int a = 0; a < n; a++)
        if (in[a]) out.push_back(a);
    return out;
}

std::vector<Subgroup> all_subgroups(GroupTable const & g) {
    int const n = g.order();
    if (n > 16) throw structure_violation("subgroup enumeration capped at order 16");
    std::vector<Subgroup> out;
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
        int const sz = __builtin_popcount(mask);
        if (n % sz) continue;
        bool closed = true;
        for (int a = 0; a < n && closed; a++) {
            if (!(mask >> a & 1)) continue;
            for (int b = 0; b < n && closed; b++) {
                if (!(mask >> b & 1)) continue;
                if (!(mask >> g.op(a, b) & 1)) closed = false;
            }
        }
        if (!closed) continue;
        Subgroup h;
        for (int a = 0; a < n; a++)
            if (mask >> a & 1) h.push_back(a);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](Subgroup const & a, Subgroup const & b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::vector<int>> left_cosets(GroupTable const & g, Subgroup const & h) {
    if (!is_subgroup(g, h)) throw structure_violation("cosets of a non-subgroup");
    int const n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cosets;
    /* scanning representatives in increasing order makes the first member
     * of each sorted coset its minimum, so the coset order is canonical */
    for (int a = 0; a < n; a++) {
        if (seen[a]) continue;
        std::vector<int> c;
        c.reserve(h.size());
        for (int x : h) c.push_back(g.op(a, x));
        std::sort(c.begin(), c.end());
        for (int v : c) seen[v] = 1;
        cosets.push_back(std::move(c));
    }
    return cosets;
}

std::vector<int> coset_transversal(GroupTable const & g, Subgroup const & h) {
    std::vector<int> reps;
    for (auto const & c : left_cosets(g, h)) reps.push_back(c.front());
    return reps;
}

int coset_of(std::vector<std::vector<int>> const & cosets, int a) {
    for (size_t i = 0; i < cosets.size(); i++)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), a))
            return static_cast<int>(i);
    throw structure_violation("element not covered by the coset list");
}

Subgroup product_subgroup(GroupTable const & g, Subgroup const & h,
                          Subgroup const & k) {
    if (!is_subgroup(g, h) || !is_subgroup(g, k))
        throw structure_violation("product of non-subgroups");
    std::vector<char> in(g.order(), 0);
    for (int a : h)
        for (int b : k) in[g.op(a, b)] = 1;
    Subgroup hk;
    for (int a = 0; a < g.order(); a++)
        if (in[a]) hk.push_back(a);
    if (!is_subgroup(g, hk))
        throw not_normal("product set HK is not a subgroup");
    return hk;
}

FieldElement GaloisGroup::apply(int i, FieldElement const & a) const {
    RatPoly img = poly_compose_mod(a.coeffs(), autos_[i].image,
                                   field_->min_poly_rat());
    return FieldElement(*field_, std::move(img));
}

int GaloisGroup::find(RatPoly const & image) const {
    RatPoly key = image;
    normalize(key);
    for (size_t i = 0; i < autos_.size(); i++)
        if (autos_[i].image == key) return static_cast<int>(i);
    return -1;
}

namespace {

/* every embedding: real enclosures as given, conjugate pairs expanded */
std::vector<ComplexInterval> all_embeddings(std::vector<RootBox> const & boxes) {
    std::vector<ComplexInterval> v;
    for (RootBox const & b : boxes) {
        v.push_back(b.box);
        if (!b.is_real) v.push_back(b.box.conj());
    }
    return v;
}

/* round(coord * 2^s) for both coordinates of z; false when either ball is
 * too wide for the rounded integer to be meaningful at this scale */
bool scaled_coords(ComplexInterval const & z, long s, mpfr_prec_t prec,
                   mpz_class & re, mpz_class & im) {
    mpfr_t lo, up, w, m;
    mpfr_inits2(prec + 64, lo, up, w, m, (mpfr_ptr) 0);
    bool ok = true;
    Interval const * part[2] = {&z.re(), &z.im()};
    mpz_class * out[2] = {&re, &im};
    for (int c = 0; c < 2 && ok; c++) {
        part[c]->lower(lo);
        part[c]->upper(up);
        mpfr_sub(w, up, lo, MPFR_RNDU);
        mpfr_mul_2si(w, w, s, MPFR_RNDU);
        if (mpfr_cmp_d(w, 0.25) > 0) {
            ok = false;
            break;
        }
        part[c]->midpoint(m);
        mpfr_mul_2si(m, m, s, MPFR_RNDN);
        mpfr_get_z(out[c]->get_mpz_t(), m, MPFR_RNDN);
    }
    mpfr_clears(lo, up, w, m, (mpfr_ptr) 0);
    return ok;
}

RatPoly identity_image() { return RatPoly{mpq_class(0), mpq_class(1)}; }

bool verified_automorphism(RatPoly const & g, RatPoly const & prat) {
    return is_zero(poly_compose_mod(prat, g, prat));
}

bool ratpoly_less(RatPoly const & a, RatPoly const & b) {
    size_t const n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; i++) {
        mpq_class const av = i < a.size() ? a[i] : mpq_class(0);
        mpq_class const bv = i < b.size() ? b[i] : mpq_class(0);
        int const c = cmp(av, bv);
        if (c) return c < 0;
    }
    return false;
}

} // namespace

GaloisGroup recover_automorphisms(NumberField const & k, PrecisionPolicy const & pol) {
    int const d = k.degree();
    RatPoly const & prat = k.min_poly_rat();

    mpz_class dbound0;
    {
        mpz_class disc_abs = abs(k.discriminant());
        mpz_sqrt(dbound0.get_mpz_t(), disc_abs.get_mpz_t());
        dbound0 += 1;
    }

    std::vector<RatPoly> images;
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(pol.start, 192);; prec *= 2) {
        if (prec > pol.ceiling)
            throw not_normal("could not certify " + std::to_string(d) +
                             " distinct automorphisms of " + k.label() +
                             " within the precision ceiling");

        std::vector<RootBox> boxes;
        try {
            boxes = isolate_roots(k.min_poly(), prec);
        } catch (undecided const &) {
            continue;
        }
        std::vector<ComplexInterval> emb = all_embeddings(boxes);
        if (static_cast<int>(emb.size()) != d)
            throw structure_violation("embedding count disagrees with the degree");

        std::vector<ComplexInterval> pw;
        pw.reserve(d);
        pw.push_back(ComplexInterval::from_rational(1, 0, prec));
        for (int j = 1; j < d; j++) pw.push_back(pw.back().mul(emb[0]));

        long const s = static_cast<long>(prec) - 48;
        std::vector<mpz_class> pw_re(d), pw_im(d);
        bool narrow = true;
        for (int j = 0; j < d && narrow; j++)
            narrow = scaled_coords(pw[j], s, prec, pw_re[j], pw_im[j]);
        if (!narrow) continue;

        images.assign(1, identity_image());
        bool ok = true;
        for (int i = 1; i < d && ok; i++) {
            mpz_class t_re, t_im;
            if (!scaled_coords(emb[i], s, prec, t_re, t_im)) {
                ok = false;
                break;
            }
            bool found = false;
            mpz_class dbound = dbound0;
            for (int attempt = 0; attempt < 4 && !found; attempt++, dbound *= 1000) {
                std::vector<std::vector<mpz_class>> rows(
                    d + 1, std::vector<mpz_class>(d + 3, mpz_class(0)));
                for (int j = 0; j < d; j++) {
                    rows[j][j] = 1;
                    rows[j][d + 1] = pw_re[j];
                    rows[j][d + 2] = pw_im[j];
                }
                rows[d][d] = 1;
                rows[d][d + 1] = -t_re;
                rows[d][d + 2] = -t_im;
                lll_reduce(rows);

                for (auto const & row : rows) {
                    if (row[d] == 0) continue;
                    if (abs(row[d]) > dbound) continue;
                    RatPoly g(d);
                    for (int j = 0; j < d; j++) {
                        g[j] = mpq_class(row[j], row[d]);
                        g[j].canonicalize();
                    }
                    normalize(g);
                    if (degree(g) < 1) continue;
                    if (!verified_automorphism(g, prat)) continue;
                    images.push_back(g);
                    found = true;
                    break;
                }
            }
            if (!found) ok = false;
        }
        if (!ok) continue;

        /* a duplicate means two root enclosures resolved to the same
         * relation; more precision separates them */
        bool distinct = true;
        for (size_t a = 0; a < images.size() && distinct; a++)
            for (size_t b = a + 1; b < images.size() && distinct; b++)
                if (images[a] == images[b]) distinct = false;
        if (distinct) break;
    }

    std::sort(images.begin() + 1, images.end(), ratpoly_less);

    GaloisGroup gal;
    gal.field_ = &k;
    for (auto & g : images) gal.autos_.push_back(Automorphism{std::move(g)});

    std::vector<std::vector<int>> mul(d, std::vector<int>(d, -1));
    for (int i = 0; i < d; i++)
        for (int j = 0; j < d; j++) {
            /* sigma_i o sigma_j (sigma_j acts first) sends theta to
             * sigma_i(g_j(theta)) = g_j(g_i(theta)) */
            RatPoly comp = poly_compose_mod(gal.autos_[j].image,
                                            gal.autos_[i].image, prat);
            normalize(comp);
            int idx = -1;
            for (int t = 0; t < d; t++)
                if (gal.autos_[t].image == comp) {
                    idx = t;
                    break;
                }
            if (idx < 0)
                throw not_normal("generator images are not closed under composition");
            mul[i][j] = idx;
        }
    gal.table_ = GroupTable::from_mul(std::move(mul));
    return gal;
}

} // namespace mku
