#include "mku/heights.hpp"

#include "mku/errors.hpp"
#include "mku/matrixlab.hpp"

namespace mku {

Interval place_log(FieldElement const & a, PlaceSet const & ps, int w) {
    ComplexInterval val = poly_eval(a.coeffs(), ps.places.at(w).root);
    return val.modulus().log();
}

Interval weighted_place_log(FieldElement const & a, PlaceSet const & ps, int w) {
    Interval l = place_log(a, ps, w);
    return ps.places[w].local_degree == 2 ? l.mul_2exp(1) : l;
}

std::vector<Interval> log_vector(FieldElement const & a, PlaceSet const & ps) {
    std::vector<Interval> v;
    v.reserve(ps.count());
    for (int w = 0; w < ps.count(); w++) v.push_back(weighted_place_log(a, ps, w));
    return v;
}

Interval product_formula_sum(FieldElement const & a, PlaceSet const & ps) {
    return sum(log_vector(a, ps), ps.prec);
}

Interval weil_height(FieldElement const & a, PlaceSet const & ps) {
    if (!is_unit(a))
        throw not_a_unit("height is only computed for units here");
    std::vector<Interval> logs = log_vector(a, ps);
    Interval total = sum(logs, ps.prec);
    if (!total.contains_zero())
        throw consistency_failure("unit defies the product formula");
    std::vector<Interval> absed;
    absed.reserve(logs.size());
    for (auto const & l : logs) absed.push_back(l.abs_hull());
    Interval h = sum(absed, ps.prec);
    return h.scale(mpq_class(1, 2L * ps.field->degree()));
}

Interval regulator(std::vector<FieldElement> const & units, PlaceSet const & ps) {
    int const n = ps.count() - 1;
    if (static_cast<int>(units.size()) != n)
        throw hypothesis_violated("regulator needs exactly one unit less than places");
    if (n == 0) return Interval::exact(1, ps.prec);
    for (auto const & u : units)
        if (!is_unit(u)) throw not_a_unit("regulator input is not a unit");

    IMat m(n, std::vector<Interval>(n, Interval::zero(ps.prec)));
    for (int j = 0; j < n; j++)
        for (int w = 0; w < n; w++) /* last place dropped */
            m[w][j] = weighted_place_log(units[j], ps, w);
    return interval_det(m).abs_hull();
}

} // namespace mku
