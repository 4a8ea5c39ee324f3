#include "mku/places.hpp"

#include <algorithm>
#include <numeric>

#include "mku/errors.hpp"

namespace mku {

PlaceSet compute_places(NumberField const & field, mpfr_prec_t prec) {
    std::vector<RootBox> boxes = isolate_roots(field.min_poly(), prec);

    size_t const n = boxes.size();
    std::vector<mpfr_t> re_mid(n), im_mid(n);
    for (size_t i = 0; i < n; i++) {
        mpfr_init2(re_mid[i], prec);
        mpfr_init2(im_mid[i], prec);
        boxes[i].box.re().midpoint(re_mid[i]);
        boxes[i].box.im().midpoint(im_mid[i]);
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = mpfr_cmp(re_mid[a], re_mid[b]);
        if (c) return c > 0;
        c = mpfr_cmp(im_mid[a], im_mid[b]);
        return c > 0;
    });

    PlaceSet ps;
    ps.field = &field;
    ps.prec = prec;
    int degsum = 0;
    for (int i : idx) {
        Place pl{boxes[i].box, boxes[i].is_real, boxes[i].is_real ? 1 : 2};
        degsum += pl.local_degree;
        ps.places.push_back(std::move(pl));
    }
    for (size_t i = 0; i < n; i++) {
        mpfr_clear(re_mid[i]);
        mpfr_clear(im_mid[i]);
    }
    if (degsum != field.degree())
        throw structure_violation("local degrees do not sum to the field degree");
    return ps;
}

int act_on_place(GaloisGroup const & G, int sigma, PlaceSet const & ps, int w) {
    /* left action: the embedding of sigma w is iota_w o sigma^{-1}, so the
     * image root is g_{sigma^{-1}}(z_w), matched against the stored
     * representatives and their conjugates */
    int const inv = G.inverse(sigma);
    ComplexInterval img = poly_eval(G.at(inv).image, ps.places[w].root);

    int hit = -1, nhit = 0;
    for (int j = 0; j < ps.count(); j++) {
        Place const & pl = ps.places[j];
        bool touches = !img.disjoint_from(pl.root);
        if (!touches && !pl.is_real) touches = !img.disjoint_from(pl.root.conj());
        if (touches) {
            hit = j;
            nhit++;
        }
    }
    if (nhit == 1) return hit;
    if (nhit == 0)
        throw structure_violation("automorphism image root escapes every place enclosure");
    throw ambiguous_match("automorphism image overlaps several place enclosures");
}

Subgroup place_stabilizer(GaloisGroup const & G, PlaceSet const & ps, int w) {
    Subgroup stab;
    for (int s = 0; s < G.order(); s++)
        if (act_on_place(G, s, ps, w) == w) stab.push_back(s);
    if (ps.places[w].is_real) {
        if (stab.size() != 1)
            throw structure_violation("real place with a nontrivial stabilizer");
    } else {
        if (stab.size() != 2)
            throw structure_violation("complex place stabilizer is not of order 2");
    }
    return stab;
}

std::vector<std::vector<int>> fiber_over_subfield(GaloisGroup const & G,
                                                  PlaceSet const & ps,
                                                  Subgroup const & H,
                                                  FieldElement const & gen) {
    GroupTable const & T = G.table();
    if (!is_subgroup(T, H))
        throw structure_violation("fiber subgroup fails the subgroup axioms");

    /* H must be exactly the stabilizer of the subfield generator */
    {
        std::vector<char> in(T.order(), 0);
        for (int h : H) in[h] = 1;
        for (int s = 0; s < T.order(); s++) {
            bool const fixes = G.apply(s, gen) == gen;
            if (fixes != static_cast<bool>(in[s]))
                throw structure_violation(
                    "subgroup is not the exact stabilizer of the generator");
        }
    }

    int const N = ps.count();
    std::vector<int> fiber_of(N, -1);
    std::vector<std::vector<int>> fibers;
    for (int w = 0; w < N; w++) {
        if (fiber_of[w] >= 0) continue;
        std::vector<char> seen(N, 0);
        std::vector<int> orb;
        for (int h : H) {
            int const v = act_on_place(G, h, ps, w);
            if (!seen[v]) {
                seen[v] = 1;
                orb.push_back(v);
            }
        }
        std::sort(orb.begin(), orb.end());
        int const f = static_cast<int>(fibers.size());
        for (int v : orb) {
            if (fiber_of[v] != -1)
                throw structure_violation("place orbits under H collide");
            fiber_of[v] = f;
        }
        fibers.push_back(std::move(orb));
    }

    for (auto const & fb : fibers)
        if (fb.size() != fibers.front().size())
            throw structure_violation("fibers differ in cardinality");

    /* cross-check against the embedded generator values: the generator is
     * H-fixed, so its value is literally shared inside a fiber (up to the
     * conjugation hidden in the stored representatives) and distinct
     * subfield places give values that are separated, conjugates included */
    std::vector<ComplexInterval> val;
    val.reserve(N);
    for (int w = 0; w < N; w++)
        val.push_back(poly_eval(gen.coeffs(), ps.places[w].root));
    for (auto const & fb : fibers)
        for (size_t a = 0; a < fb.size(); a++)
            for (size_t b = a + 1; b < fb.size(); b++) {
                bool const over = !val[fb[a]].disjoint_from(val[fb[b]]) ||
                                  !val[fb[a]].disjoint_from(val[fb[b]].conj());
                if (!over)
                    throw consistency_failure(
                        "generator values split inside one fiber");
            }
    for (size_t fa = 0; fa < fibers.size(); fa++)
        for (size_t fbx = fa + 1; fbx < fibers.size(); fbx++)
            for (int a : fibers[fa])
                for (int b : fibers[fbx]) {
                    if (!val[a].disjoint_from(val[b]) ||
                        !val[a].disjoint_from(val[b].conj()))
                        throw undecided(
                            "generator values not separated across fibers");
                }

    /* every automorphism must send fibers onto fibers, transitively */
    size_t const F = fibers.size();
    std::vector<char> hit(F, 0);
    for (int s = 0; s < T.order(); s++) {
        for (size_t f = 0; f < F; f++) {
            int target = -1;
            for (int w : fibers[f]) {
                int const v = act_on_place(G, s, ps, w);
                if (target < 0)
                    target = fiber_of[v];
                else if (fiber_of[v] != target)
                    throw structure_violation("automorphism tears a fiber apart");
            }
            if (f == 0) hit[target] = 1;
        }
    }
    for (size_t f = 0; f < F; f++)
        if (!hit[f])
            throw structure_violation("fibers are not permuted transitively");

    return fibers;
}

std::vector<int> place_transversal(GaloisGroup const & G, PlaceSet const & ps,
                                   int what) {
    if (what < 0 || what >= ps.count())
        throw structure_violation("place index out of range");
    std::vector<int> reps(ps.places.size(), -1);
    for (int s = 0; s < G.order(); s++) {
        int const m = act_on_place(G, s, ps, what);
        if (reps[m] < 0) reps[m] = s;
    }
    for (int r : reps)
        if (r < 0)
            throw structure_violation("automorphisms do not reach every place");
    return reps;
}

} // namespace mku
