#include "mku/groupfunc.hpp"

#include <algorithm>

#include "mku/errors.hpp"
#include "mku/matrixlab.hpp"

namespace mku {

long CosetFunction::sum() const {
    long s = 0;
    for (long v : values) s += v;
    return s;
}

CosetFunction act(GroupTable const & g, int sigma, CosetFunction const & f) {
    CosetFunction out;
    out.cosets = f.cosets;
    out.values.resize(f.values.size());
    int const inv = g.inverse(sigma);
    for (size_t c = 0; c < f.cosets.size(); c++) {
        int const rep = f.cosets[c].front();
        out.values[c] = f.at(g.op(inv, rep));
    }
    return out;
}

std::vector<std::vector<int>> coset_fibers(GroupTable const & g,
                                           Subgroup const & h,
                                           Subgroup const & k) {
    if (!is_subgroup(g, h) || !is_subgroup(g, k))
        throw structure_violation("fibers need two subgroups");
    auto cosets = left_cosets(g, k);
    int const nc = static_cast<int>(cosets.size());
    std::vector<int> fiber_of(nc, -1);
    std::vector<std::vector<int>> fibers;
    for (int c = 0; c < nc; c++) {
        if (fiber_of[c] >= 0) continue;
        std::vector<char> seen(nc, 0);
        std::vector<int> orb;
        for (int x : h) {
            int const img = coset_of(cosets, g.op(x, cosets[c].front()));
            if (!seen[img]) {
                seen[img] = 1;
                orb.push_back(img);
            }
        }
        std::sort(orb.begin(), orb.end());
        int const f = static_cast<int>(fibers.size());
        for (int v : orb) {
            if (fiber_of[v] != -1)
                throw structure_violation("coset orbits under H collide");
            fiber_of[v] = f;
        }
        fibers.push_back(std::move(orb));
    }
    return fibers;
}

CosetFunction build_lambda(GroupTable const & g, Subgroup const & h,
                           Subgroup const & k) {
    if (!is_subgroup(g, h) || !is_subgroup(g, k))
        throw structure_violation("lambda needs two subgroups");
    if (!is_normal(g, h))
        throw not_normal("lambda requires the fixing group to be normal");

    bool const k_in_h =
        std::includes(h.begin(), h.end(), k.begin(), k.end());
    Subgroup meet;
    std::set_intersection(h.begin(), h.end(), k.begin(), k.end(),
                          std::back_inserter(meet));
    if (!k_in_h && meet != Subgroup{0})
        throw case_violation(
            "stabilizer must lie inside H or meet it trivially");

    /* HK is a subgroup because H is normal */
    Subgroup hk = product_subgroup(g, h, k);
    long const j = static_cast<long>(hk.size() / k.size());

    CosetFunction f;
    f.cosets = left_cosets(g, k);
    f.values.resize(f.cosets.size(), 0);
    for (size_t c = 0; c < f.cosets.size(); c++) {
        int const rep = f.cosets[c].front();
        bool const inside = std::binary_search(hk.begin(), hk.end(), rep);
        if (c == 0)
            f.values[c] = j - 1;
        else if (inside)
            f.values[c] = -1;
    }
    return f;
}

bool in_difference_lattice(CosetFunction const & f,
                           std::vector<std::vector<int>> const & fibers) {
    size_t covered = 0;
    for (auto const & fb : fibers) {
        long s = 0;
        for (int c : fb) s += f.at_coset(c);
        if (s != 0) return false;
        covered += fb.size();
    }
    return covered == f.values.size();
}

std::vector<CosetFunction> lattice_basis(GroupTable const & g,
                                         Subgroup const & h,
                                         Subgroup const & k) {
    auto fibers = coset_fibers(g, h, k);
    auto cosets = left_cosets(g, k);
    std::vector<CosetFunction> basis;
    for (auto const & fb : fibers)
        for (size_t j = 1; j < fb.size(); j++) {
            CosetFunction e;
            e.cosets = cosets;
            e.values.assign(cosets.size(), 0);
            e.values[fb[0]] = 1;
            e.values[fb[j]] = -1;
            basis.push_back(std::move(e));
        }
    return basis;
}

int translate_rank(GroupTable const & g, CosetFunction const & f) {
    QMat rows;
    for (int s = 0; s < g.order(); s++) {
        CosetFunction t = act(g, s, f);
        std::vector<mpq_class> row;
        for (long v : t.values) row.push_back(mpq_class(v));
        rows.push_back(std::move(row));
    }
    return rank_rational(std::move(rows));
}

long one_norm(CosetFunction const & f) {
    long s = 0;
    for (long v : f.values) s += v < 0 ? -v : v;
    return s;
}

std::vector<int> coset_transversal_in(GroupTable const & g, Subgroup const & k,
                                      Subgroup const & big) {
    if (!is_subgroup(g, k) || !is_subgroup(g, big))
        throw structure_violation("transversal needs subgroups");
    if (!std::includes(big.begin(), big.end(), k.begin(), k.end()))
        throw structure_violation("the small subgroup must lie in the big one");
    std::vector<int> reps;
    for (auto const & c : left_cosets(g, k))
        if (std::binary_search(big.begin(), big.end(), c.front()))
            reps.push_back(c.front());
    return reps;
}

TranslateFamily independent_translates(GroupTable const & g, Subgroup const & h,
                                       Subgroup const & k,
                                       std::vector<int> const & s_transversal,
                                       std::vector<int> const & t_transversal,
                                       std::vector<std::vector<int>> const & keep) {
    CosetFunction const lambda = build_lambda(g, h, k);
    Subgroup const hk = product_subgroup(g, h, k);
    auto const hk_cosets = left_cosets(g, hk);
    int const n_outer = static_cast<int>(hk_cosets.size());
    int const n_inner = static_cast<int>(hk.size() / k.size());

    if (static_cast<int>(s_transversal.size()) != n_outer)
        throw structure_violation("outer transversal has the wrong size");
    std::vector<char> outer_hit(n_outer, 0);
    for (int s : s_transversal) {
        int const c = coset_of(hk_cosets, s);
        if (outer_hit[c])
            throw structure_violation("outer transversal repeats a coset");
        outer_hit[c] = 1;
    }

    if (static_cast<int>(t_transversal.size()) != n_inner)
        throw structure_violation("inner transversal has the wrong size");
    std::vector<char> inner_hit(lambda.cosets.size(), 0);
    for (int t : t_transversal) {
        if (!std::binary_search(hk.begin(), hk.end(), t))
            throw structure_violation("inner transversal leaves HK");
        int const c = coset_of(lambda.cosets, t);
        if (inner_hit[c])
            throw structure_violation("inner transversal repeats a coset");
        inner_hit[c] = 1;
    }

    std::vector<std::vector<int>> kept = keep;
    if (kept.empty()) {
        kept.assign(s_transversal.size(), std::vector<int>{});
        for (auto & ks : kept)
            for (int j = 0; j + 1 < n_inner; j++) ks.push_back(j);
    }
    if (kept.size() != s_transversal.size())
        throw structure_violation("keep list does not match the outer transversal");
    for (auto const & ks : kept) {
        if (static_cast<int>(ks.size()) != n_inner - 1)
            throw structure_violation("each outer coset keeps all but one t");
        std::vector<char> used(n_inner, 0);
        for (int j : ks) {
            if (j < 0 || j >= n_inner || used[j])
                throw structure_violation("keep indices must be distinct t positions");
            used[j] = 1;
        }
    }

    TranslateFamily fam;
    fam.rank = 0;
    for (size_t i = 0; i < s_transversal.size(); i++) {
        int const home = coset_of(hk_cosets, s_transversal[i]);
        for (int j : kept[i]) {
            int const sigma = g.op(s_transversal[i], t_transversal[j]);
            CosetFunction m = act(g, sigma, lambda);
            for (size_t c = 0; c < m.values.size(); c++) {
                if (m.values[c] == 0) continue;
                if (coset_of(hk_cosets, m.cosets[c].front()) != home)
                    throw consistency_failure(
                        "translate leaks outside its HK coset");
            }
            fam.labels.emplace_back(s_transversal[i], t_transversal[j]);
            fam.members.push_back(std::move(m));
        }
    }

    if (!fam.members.empty()) {
        QMat rows;
        for (auto const & m : fam.members) {
            std::vector<mpq_class> row;
            for (long v : m.values) row.push_back(mpq_class(v));
            rows.push_back(std::move(row));
        }
        fam.rank = rank_rational(std::move(rows));
        if (fam.rank != static_cast<int>(fam.members.size()))
            throw rank_deficient("translates of lambda fell short of full rank");
    }
    return fam;
}

} // namespace mku
