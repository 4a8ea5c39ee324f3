#include "mku/matrixlab.hpp"

#include <algorithm>
#include <set>

#include "mku/errors.hpp"

namespace mku {

namespace {

mpfr_prec_t mat_prec(IMat const & a) {
    mpfr_prec_t p = MPFR_PREC_MIN;
    for (auto const & row : a)
        for (auto const & x : row) p = std::max(p, x.precision());
    return p;
}

void require_square(IMat const & a) {
    for (auto const & row : a)
        if (row.size() != a.size())
            throw structure_violation("matrix is not square");
}

} // namespace

Interval interval_det(IMat const & a) {
    require_square(a);
    int const n = static_cast<int>(a.size());
    if (n == 0) throw structure_violation("determinant of an empty matrix");
    if (n > 20) throw structure_violation("determinant size cap exceeded");
    mpfr_prec_t const prec = mat_prec(a);

    /* dp[S] = det of the first popcount(S) rows on column set S */
    std::vector<Interval> dp(1u << n, Interval::zero(prec));
    dp[0] = Interval::exact(1, prec);
    for (unsigned mask = 1; mask < (1u << n); mask++) {
        int const k = __builtin_popcount(mask); /* expanding along row k-1 */
        Interval acc = Interval::zero(prec);
        int pos = 0;
        for (int j = 0; j < n; j++) {
            if (!(mask >> j & 1)) continue;
            Interval term = a[k - 1][j].mul(dp[mask ^ (1u << j)]);
            acc = ((k - 1 + pos) % 2) ? acc.sub(term) : acc.add(term);
            pos++;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(1u << n) - 1];
}

Interval interval_minor(IMat const & a, std::vector<int> const & rows,
                        std::vector<int> const & cols) {
    if (rows.size() != cols.size())
        throw structure_violation("minor index counts differ");
    IMat sub;
    for (int r : rows) {
        std::vector<Interval> line;
        for (int c : cols) line.push_back(a.at(r).at(c));
        sub.push_back(std::move(line));
    }
    return interval_det(sub);
}

IMat interval_cofactors(IMat const & a) {
    require_square(a);
    int const n = static_cast<int>(a.size());
    IMat out;
    for (int v = 0; v < n; v++) {
        std::vector<Interval> line;
        for (int c = 0; c < n; c++) {
            std::vector<int> rows, cols;
            for (int i = 0; i < n; i++)
                if (i != v) rows.push_back(i);
            for (int j = 0; j < n; j++)
                if (j != c) cols.push_back(j);
            Interval m = (n == 1) ? Interval::exact(1, mat_prec(a))
                                  : interval_minor(a, rows, cols);
            line.push_back(((v + c) % 2) ? m.neg() : std::move(m));
        }
        out.push_back(std::move(line));
    }
    return out;
}

namespace {

bool next_combination(std::vector<int> & c, int n) {
    int const r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; i--) {
        if (c[i] < n - (r - i)) {
            c[i]++;
            for (int j = i + 1; j < r; j++) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool rank_at_least(IMat const & a, int r) {
    if (r <= 0) return true;
    int const nr = static_cast<int>(a.size());
    int const nc = nr ? static_cast<int>(a[0].size()) : 0;
    if (r > nr || r > nc) return false;
    std::vector<int> rows(r);
    for (int i = 0; i < r; i++) rows[i] = i;
    do {
        std::vector<int> cols(r);
        for (int i = 0; i < r; i++) cols[i] = i;
        do {
            Sign s = interval_minor(a, rows, cols).sign();
            if (s != Sign::Undecided) return true;
        } while (next_combination(cols, nc));
    } while (next_combination(rows, nr));
    return false;
}

mpq_class det_rational(QMat a) {
    int const n = static_cast<int>(a.size());
    for (auto const & row : a)
        if (static_cast<int>(row.size()) != n)
            throw structure_violation("matrix is not square");
    mpq_class det = 1;
    for (int c = 0; c < n; c++) {
        int pivot = -1;
        for (int r = c; r < n; r++)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return mpq_class(0);
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; r++) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (int j = c; j < n; j++) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

int rank_rational(QMat a) {
    int const nr = static_cast<int>(a.size());
    int const nc = nr ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; c++) {
        int pivot = -1;
        for (int r = rank; r < nr; r++)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < nr; r++) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (int j = c; j < nc; j++) a[r][j] -= f * a[rank][j];
        }
        rank++;
    }
    return rank;
}

std::vector<mpq_class> solve_rational(QMat a, std::vector<mpq_class> b) {
    int const n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n)
        throw structure_violation("system dimensions disagree");
    for (auto const & row : a)
        if (static_cast<int>(row.size()) != n)
            throw structure_violation("matrix is not square");
    for (int c = 0; c < n; c++) {
        int pivot = -1;
        for (int r = c; r < n; r++)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw rank_deficient("singular system");
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        for (int r = c + 1; r < n; r++) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (int j = c; j < n; j++) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    std::vector<mpq_class> x(n);
    for (int r = n - 1; r >= 0; r--) {
        mpq_class s = b[r];
        for (int j = r + 1; j < n; j++) s -= a[r][j] * x[j];
        x[r] = s / a[r][r];
    }
    return x;
}

mpq_class dyadic_to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    if (!mpfr_number_p(x)) throw error("non-finite value is not rational");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    mpq_class q(m);
    if (e >= 0) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= p2;
    } else {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= p2;
    }
    return q;
}

namespace {

mpz_class round_half_away(mpq_class const & q) {
    mpz_class num = q.get_num(), den = q.get_den();
    bool const neg = num < 0;
    if (neg) num = -num;
    mpz_class r, t = 2 * num + den, d2 = 2 * den;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
    return neg ? mpz_class(-r) : r;
}

/* upper(a) <= upper(b) on raw endpoints; boundary equality is allowed */
bool upper_within(Interval const & a, Interval const & b) {
    mpfr_t ua, ub;
    mpfr_init2(ua, a.precision());
    mpfr_init2(ub, b.precision());
    a.upper(ua);
    b.upper(ub);
    bool const ok = mpfr_cmp(ua, ub) <= 0;
    mpfr_clear(ua);
    mpfr_clear(ub);
    return ok;
}

} // namespace

std::vector<mpz_class> positive_integer_point(IMat const & a, long cap) {
    int const n = static_cast<int>(a.size());
    if (n == 0) throw structure_violation("empty constraint matrix");
    require_square(a);
    mpfr_prec_t const prec = mat_prec(a);

    if (interval_det(a).sign() == Sign::Undecided)
        throw undecided("constraint matrix not certified nonsingular");

    std::vector<Interval> bound;
    for (auto const & row : a) {
        Interval s = Interval::zero(prec);
        for (auto const & x : row) s = s.add(x.abs_hull());
        bound.push_back(std::move(s));
    }

    long tried = 0;
    std::set<std::vector<mpz_class>> seen;
    auto admissible = [&](std::vector<mpz_class> const & xi) {
        if (!seen.insert(xi).second) return false;
        tried++;
        for (int m = 0; m < n; m++) {
            Interval s = Interval::zero(prec);
            for (int j = 0; j < n; j++)
                s = s.add(a[m][j].mul(Interval::exact(xi[j], prec)));
            if (s.sign() != Sign::Positive) return false;
            if (!upper_within(s, bound[m])) return false;
        }
        return true;
    };

    /* Scaled midpoint solutions: x solves (mid a) x = (mid bound), so the
     * candidate for step l is the rounding of (1/2 + 1/l) x. The midpoint
     * matrix inherits nonsingularity from the determinant check above. */
    {
        QMat mid(n, std::vector<mpq_class>(n));
        std::vector<mpq_class> rhs(n);
        mpfr_t tmp;
        mpfr_init2(tmp, prec);
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                a[i][j].midpoint(tmp);
                mid[i][j] = dyadic_to_rational(tmp);
            }
            bound[i].midpoint(tmp);
            rhs[i] = dyadic_to_rational(tmp);
        }
        mpfr_clear(tmp);
        std::vector<mpq_class> base = solve_rational(std::move(mid), std::move(rhs));
        for (long l = 1; l <= 512 && tried < cap; l++) {
            mpq_class const scale = mpq_class(1, 2) + mpq_class(1, l);
            std::vector<mpz_class> xi(n);
            bool nonzero = false;
            for (int j = 0; j < n; j++) {
                xi[j] = round_half_away(scale * base[j]);
                nonzero |= xi[j] != 0;
            }
            if (nonzero && admissible(xi)) return xi;
        }
    }

    for (long radius = 1; tried < cap; radius++) {
        std::vector<long> v(n, -radius);
        for (;;) {
            bool on_shell = false;
            for (long c : v) on_shell |= (c == radius || c == -radius);
            if (on_shell) {
                std::vector<mpz_class> xi(v.begin(), v.end());
                if (admissible(xi)) return xi;
                if (tried >= cap) break;
            }
            int i = n - 1;
            while (i >= 0 && v[i] == radius) v[i--] = -radius;
            if (i < 0) break;
            v[i]++;
        }
    }
    throw iteration_cap_exceeded(
        "no certified admissible integer point within the candidate budget");
}

bool positive_point_valid(QMat const & a, std::vector<mpz_class> const & xi) {
    for (auto const & row : a) {
        if (row.size() != xi.size())
            throw structure_violation("dimension mismatch");
        mpq_class s = 0, cap = 0;
        for (size_t j = 0; j < row.size(); j++) {
            s += row[j] * mpq_class(xi[j]);
            cap += abs(row[j]);
        }
        if (s <= 0 || s > cap) return false;
    }
    return true;
}

namespace {

bool minors_all_exact_zero(IMat const & a, int r) {
    int const nr = static_cast<int>(a.size());
    int const nc = nr ? static_cast<int>(a[0].size()) : 0;
    if (r > nr || r > nc) return true;
    std::vector<int> rows(r);
    for (int i = 0; i < r; i++) rows[i] = i;
    do {
        std::vector<int> cols(r);
        for (int i = 0; i < r; i++) cols[i] = i;
        do {
            if (!interval_minor(a, rows, cols).is_exact_zero()) return false;
        } while (next_combination(cols, nc));
    } while (next_combination(rows, nr));
    return true;
}

} // namespace

int certified_rank(IMat const & a, int dependencies) {
    int const nr = static_cast<int>(a.size());
    int const nc = nr ? static_cast<int>(a[0].size()) : 0;
    int upper = std::min(nr, nc) - dependencies;
    if (upper < 0) upper = 0;
    while (upper > 0 && !rank_at_least(a, upper)) {
        if (!minors_all_exact_zero(a, upper))
            throw undecided("rank bounds do not meet");
        upper--;
    }
    return upper;
}

Interval check_minkowski_nonsingular(IMat const & a) {
    require_square(a);
    int const n = static_cast<int>(a.size());
    if (n == 0) throw structure_violation("empty matrix");
    mpfr_prec_t const prec = mat_prec(a);
    for (int j = 0; j < n; j++) {
        Interval col = Interval::zero(prec);
        for (int i = 0; i < n; i++) col = col.add(a[i][j]);
        Sign const s = col.sign();
        if (s == Sign::Negative)
            throw hypothesis_violated("column sum certified negative");
        if (s != Sign::Positive)
            throw undecided("column sum sign not decided");
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j) continue;
            Sign const s = a[i][j].sign();
            if (s == Sign::Positive)
                throw hypothesis_violated("off-diagonal entry certified positive");
            if (s != Sign::Negative)
                throw undecided("off-diagonal sign not decided");
        }
    Interval det = interval_det(a);
    if (det.sign() == Sign::Undecided)
        throw undecided("structural nonsingularity not confirmed numerically");
    return det;
}

Interval check_cofactor_constancy(IMat const & a) {
    require_square(a);
    int const n = static_cast<int>(a.size());
    if (n == 0) throw structure_violation("empty matrix");
    mpfr_prec_t const prec = mat_prec(a);
    for (int i = 0; i < n; i++) {
        Interval row = Interval::zero(prec), col = Interval::zero(prec);
        for (int j = 0; j < n; j++) {
            row = row.add(a[i][j]);
            col = col.add(a[j][i]);
        }
        if (!row.contains_zero() || !col.contains_zero())
            throw hypothesis_violated("row and column sums must vanish");
    }
    IMat const cof = interval_cofactors(a);
    std::vector<Interval> flat;
    for (auto const & line : cof)
        for (auto const & c : line) flat.push_back(c);
    for (size_t i = 0; i < flat.size(); i++)
        for (size_t j = i + 1; j < flat.size(); j++)
            if (flat[i].disjoint_from(flat[j]))
                throw consistency_failure("signed cofactors disagree");
    /* every enclosure contains the common value; report the tightest */
    size_t best = 0;
    for (size_t i = 1; i < flat.size(); i++)
        if (flat[i].rad_double() < flat[best].rad_double()) best = i;
    return flat[best];
}

std::vector<Interval> check_null_sign(IMat const & a) {
    require_square(a);
    int const n = static_cast<int>(a.size());
    if (n == 0) throw structure_violation("empty matrix");
    mpfr_prec_t const prec = mat_prec(a);
    for (int j = 0; j < n; j++) {
        Interval col = Interval::zero(prec);
        for (int i = 0; i < n; i++) col = col.add(a[i][j]);
        if (!col.contains_zero())
            throw hypothesis_violated("column sums must vanish");
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j) continue;
            Sign const s = a[i][j].sign();
            if (s == Sign::Positive)
                throw hypothesis_violated("off-diagonal entry certified positive");
            if (s != Sign::Negative)
                throw undecided("off-diagonal sign not decided");
        }
    std::vector<Interval> y = interval_cofactors(a)[0];
    Sign const common = y[0].sign();
    if (common == Sign::Undecided)
        throw undecided("kernel coordinate sign not decided");
    for (auto const & c : y) {
        Sign const s = c.sign();
        if (s == Sign::Undecided)
            throw undecided("kernel coordinate sign not decided");
        if (s != common)
            throw consistency_failure("kernel coordinates disagree in sign");
    }
    for (int i = 0; i < n; i++) {
        Interval r = Interval::zero(prec);
        for (int j = 0; j < n; j++) r = r.add(a[i][j].mul(y[j]));
        if (!r.contains_zero())
            throw consistency_failure("cofactor vector is not in the kernel");
    }
    return y;
}

} // namespace mku
