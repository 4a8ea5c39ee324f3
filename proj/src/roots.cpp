#include "mku/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>

namespace mku {

namespace {

std::vector<std::complex<double>> durand_kerner(IntPoly const & p) {
    int d = static_cast<int>(p.size()) - 1;
    std::vector<double> c(p.size());
    double lead = p.back().get_d();
    for (size_t i = 0; i < p.size(); i++) c[i] = p[i].get_d() / lead;
    double bound = 1.0;
    for (int i = 0; i < d; i++) bound = std::max(bound, std::abs(c[i]));
    bound += 1.0;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = d; i >= 0; i--) acc = acc * z + c[i];
        return acc;
    };
    std::vector<std::complex<double>> z(d);
    std::complex<double> seed(0.4, 0.9); /* standard non-real seed ratio */
    std::complex<double> w = seed;
    for (int i = 0; i < d; i++) {
        z[i] = bound * w / std::abs(w);
        w *= seed;
        z[i] *= std::pow(0.5 + static_cast<double>(i + 1) / (d + 1), 1.0);
    }
    for (int it = 0; it < 1000; it++) {
        double moved = 0;
        for (int i = 0; i < d; i++) {
            std::complex<double> den = 1;
            for (int j = 0; j < d; j++)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / den;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * bound) break;
    }
    return z;
}

/* Plain complex MPFR Newton step helpers (round-to-nearest throughout;
 * rigour comes from the a-posteriori certification, not from these). */
struct CNum {
    mpfr_t re, im;
    explicit CNum(mpfr_prec_t p) {
        mpfr_init2(re, p);
        mpfr_init2(im, p);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    ~CNum() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
    CNum(CNum const &) = delete;
    CNum & operator=(CNum const &) = delete;
};

void cmul(CNum & out, CNum const & a, CNum const & b, mpfr_t t1, mpfr_t t2) {
    /* out may not alias a or b */
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(out.re, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_add(out.im, t1, t2, MPFR_RNDN);
}

void eval_poly(CNum & out, RatPoly const & p, CNum const & z,
               mpfr_prec_t prec) {
    CNum acc(prec), tmp(prec);
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    for (size_t i = p.size(); i-- > 0;) {
        cmul(tmp, acc, z, t1, t2);
        mpfr_add_q(acc.re, tmp.re, p[i].get_mpq_t(), MPFR_RNDN);
        mpfr_set(acc.im, tmp.im, MPFR_RNDN);
    }
    mpfr_set(out.re, acc.re, MPFR_RNDN);
    mpfr_set(out.im, acc.im, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
}

void newton_refine(CNum & z, RatPoly const & p, RatPoly const & dp,
                   mpfr_prec_t prec, bool keep_real) {
    CNum pv(prec), dv(prec);
    mpfr_t t1, t2, den, qr, qi;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    mpfr_init2(den, prec);
    mpfr_init2(qr, prec);
    mpfr_init2(qi, prec);
    long iters = 10 + static_cast<long>(std::ceil(std::log2(static_cast<double>(prec))));
    for (long it = 0; it < iters; it++) {
        eval_poly(pv, p, z, prec);
        eval_poly(dv, dp, z, prec);
        /* q = pv / dv */
        mpfr_mul(t1, dv.re, dv.re, MPFR_RNDN);
        mpfr_mul(t2, dv.im, dv.im, MPFR_RNDN);
        mpfr_add(den, t1, t2, MPFR_RNDN);
        if (mpfr_zero_p(den)) break;
        mpfr_mul(t1, pv.re, dv.re, MPFR_RNDN);
        mpfr_mul(t2, pv.im, dv.im, MPFR_RNDN);
        mpfr_add(qr, t1, t2, MPFR_RNDN);
        mpfr_div(qr, qr, den, MPFR_RNDN);
        mpfr_mul(t1, pv.im, dv.re, MPFR_RNDN);
        mpfr_mul(t2, pv.re, dv.im, MPFR_RNDN);
        mpfr_sub(qi, t1, t2, MPFR_RNDN);
        mpfr_div(qi, qi, den, MPFR_RNDN);
        mpfr_sub(z.re, z.re, qr, MPFR_RNDN);
        if (keep_real)
            mpfr_set_zero(z.im, 1);
        else
            mpfr_sub(z.im, z.im, qi, MPFR_RNDN);
    }
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(den);
    mpfr_clear(qr);
    mpfr_clear(qi);
}

} // namespace

std::vector<RootBox> isolate_roots(IntPoly const & p, mpfr_prec_t prec) {
    IntPoly q = p;
    while (!q.empty() && q.back() == 0) q.pop_back();
    int d = static_cast<int>(q.size()) - 1;
    if (d < 1) throw error("cannot isolate roots of a constant polynomial");
    if (!is_squarefree(q))
        throw error("root isolation requires a squarefree polynomial");
    RatPoly rp = to_rat(q);
    RatPoly dp = derivative(rp);

    int num_real = count_real_roots(q);
    std::vector<std::complex<double>> seeds = durand_kerner(q);
    /* the num_real approximations of smallest |Im| are the real ones */
    std::sort(seeds.begin(), seeds.end(),
              [](auto const & a, auto const & b) {
                  return std::abs(a.imag()) < std::abs(b.imag());
              });
    std::vector<std::complex<double>> real_seeds(seeds.begin(),
                                                 seeds.begin() + num_real);
    std::vector<std::complex<double>> cplx_seeds;
    for (int i = num_real; i < d; i++)
        if (seeds[i].imag() > 0) cplx_seeds.push_back(seeds[i]);
    if (static_cast<int>(cplx_seeds.size()) * 2 + num_real != d)
        throw undecided("initial iteration produced an unpaired root set");

    mpfr_prec_t wp = prec + 64;
    struct Refined {
        bool is_real;
        CNum z;
        Refined(bool r, mpfr_prec_t p) : is_real(r), z(p) {}
    };
    std::vector<std::unique_ptr<Refined>> roots;
    for (auto const & s : real_seeds) {
        auto r = std::make_unique<Refined>(true, wp);
        mpfr_set_d(r->z.re, s.real(), MPFR_RNDN);
        newton_refine(r->z, rp, dp, wp, true);
        roots.push_back(std::move(r));
    }
    for (auto const & s : cplx_seeds) {
        auto r = std::make_unique<Refined>(false, wp);
        mpfr_set_d(r->z.re, s.real(), MPFR_RNDN);
        mpfr_set_d(r->z.im, s.imag(), MPFR_RNDN);
        newton_refine(r->z, rp, dp, wp, false);
        roots.push_back(std::move(r));
    }

    /* full list including conjugates, as radius-0 balls */
    std::vector<ComplexInterval> pts;
    std::vector<int> owner; /* index into roots */
    for (size_t i = 0; i < roots.size(); i++) {
        Interval re = Interval::exact_dyadic(roots[i]->z.re, prec);
        Interval im = roots[i]->is_real
                          ? Interval::zero(prec)
                          : Interval::exact_dyadic(roots[i]->z.im, prec);
        pts.emplace_back(re, im);
        owner.push_back(static_cast<int>(i));
        if (!roots[i]->is_real) {
            pts.push_back(pts.back().conj());
            owner.push_back(static_cast<int>(i));
        }
    }
    if (static_cast<int>(pts.size()) != d)
        throw undecided("root multiset has the wrong cardinality");

    /* Weierstrass disks; lc(q) = 1 is not guaranteed, so divide through */
    std::vector<Interval> radius;
    for (int i = 0; i < d; i++) {
        ComplexInterval num = poly_eval(rp, pts[i]);
        ComplexInterval den = ComplexInterval::from_rational(rp.back(), 0, prec);
        for (int j = 0; j < d; j++)
            if (j != i) den = den.mul(pts[i].sub(pts[j]));
        Interval dm = den.modulus();
        if (dm.contains_zero())
            throw undecided("coincident root approximations");
        Interval w = num.modulus().div(dm);
        radius.push_back(w.scale(mpq_class(d)));
    }

    /* pairwise disjointness of the disks */
    for (int i = 0; i < d; i++)
        for (int j = i + 1; j < d; j++) {
            Interval dist = pts[i].sub(pts[j]).modulus();
            if (dist.sub(radius[i]).sub(radius[j]).sign() != Sign::Positive)
                throw undecided("root inclusion disks not certified disjoint");
        }
    /* complex representatives certified off the real axis */
    for (int i = 0; i < d; i++) {
        if (roots[owner[i]]->is_real) continue;
        Interval im_abs = pts[i].im().abs_hull();
        if (im_abs.sub(radius[i]).sign() != Sign::Positive)
            throw undecided("complex root disk touches the real axis");
    }

    std::vector<RootBox> out;
    for (size_t i = 0, k = 0; i < roots.size(); i++) {
        /* locate this root's entry in pts (first occurrence) */
        while (owner[k] != static_cast<int>(i)) k++;
        Interval pm = Interval::zero_pm(radius[k]);
        ComplexInterval box(pts[k].re().add(pm),
                            roots[i]->is_real ? Interval::zero(prec)
                                              : pts[k].im().add(pm));
        out.push_back(RootBox{roots[i]->is_real, box});
        k++;
    }
    return out;
}

} // namespace mku
