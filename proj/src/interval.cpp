#include "mku/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace mku {

namespace {

/* Scoped mpfr temporary. */
struct Raw {
    mpfr_t v;
    explicit Raw(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Raw() { mpfr_clear(v); }
    Raw(Raw const &) = delete;
    Raw & operator=(Raw const &) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
    /* mpfr's macro accessors (mpfr_sgn, ...) reach fields through ->. */
    mpfr_ptr operator->() { return v; }
    mpfr_srcptr operator->() const { return v; }
};

mpfr_prec_t join(mpfr_prec_t a, mpfr_prec_t b) { return std::max(a, b); }

} // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, prec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Interval::Interval(Interval const & o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, prec_);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Interval::Interval(Interval && o) noexcept : prec_(o.prec_) {
    mid_[0] = o.mid_[0];
    rad_[0] = o.rad_[0];
    /* leave the source valid for its destructor */
    mpfr_init2(o.mid_, MPFR_PREC_MIN);
    mpfr_init2(o.rad_, MPFR_PREC_MIN);
}

Interval & Interval::operator=(Interval const & o) {
    if (this != &o) {
        mpfr_set_prec(mid_, o.prec_);
        mpfr_set_prec(rad_, o.prec_);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

Interval & Interval::operator=(Interval && o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

/* Fold the midpoint's rounding error into the radius. One ulp of the result
 * strictly dominates the half-ulp round-to-nearest error; added only when
 * MPFR reported the operation inexact so exact pipelines stay exact. */
void Interval::bump_rounding_error(int ternary) {
    if (ternary == 0) return;
    if (mpfr_zero_p(mid_))
        throw error("inexact operation rounded to zero midpoint");
    Raw ulp(prec_);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_si(r.mid_, v, MPFR_RNDN) != 0)
        throw error("integer not representable at this precision");
    return r;
}

Interval Interval::exact(mpz_class const & v, mpfr_prec_t prec) {
    Interval r(prec);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::from_rational(mpq_class const & q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
    /* rad = |mid - q| rounded away from zero */
    Raw d(prec);
    mpfr_sub_q(d, r.mid_, q.get_mpq_t(), MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_set(r.rad_, d, MPFR_RNDU);
    return r;
}

Interval Interval::zero(mpfr_prec_t prec) { return Interval(prec); }

Interval Interval::exact_dyadic(mpfr_srcptr v, mpfr_prec_t prec) {
    Interval r(prec);
    int t = mpfr_set(r.mid_, v, MPFR_RNDN);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::zero_pm(Interval const & r) {
    Interval out(r.prec_);
    mpfr_add(out.rad_, r.mid_, r.rad_, MPFR_RNDU);
    if (mpfr_sgn(out.rad_) < 0)
        throw error("zero_pm requires a nonnegative upper bound");
    return out;
}

Interval Interval::add(Interval const & o) const {
    Interval r(join(prec_, o.prec_));
    int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::sub(Interval const & o) const {
    Interval r(join(prec_, o.prec_));
    int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::mul(Interval const & o) const {
    mpfr_prec_t p = join(prec_, o.prec_);
    Interval r(p);
    int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
    /* rad = |a.mid| o.rad + |o.mid| a.rad + a.rad o.rad, upward */
    Raw am(p), bm(p), acc(p), term(p);
    mpfr_abs(am, mid_, MPFR_RNDU);
    mpfr_abs(bm, o.mid_, MPFR_RNDU);
    mpfr_mul(acc, am, o.rad_, MPFR_RNDU);
    mpfr_mul(term, bm, rad_, MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_mul(term, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_set(r.rad_, acc, MPFR_RNDU);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::neg() const {
    Interval r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

Interval Interval::mul_2exp(long e) const {
    Interval r(*this);
    mpfr_mul_2si(r.mid_, r.mid_, e, MPFR_RNDN);
    mpfr_mul_2si(r.rad_, r.rad_, e, MPFR_RNDU);
    return r;
}

Interval Interval::scale(mpq_class const & q) const {
    Interval r(prec_);
    int t = mpfr_mul_q(r.mid_, mid_, q.get_mpq_t(), MPFR_RNDN);
    mpq_class aq = abs(q);
    mpfr_mul_q(r.rad_, rad_, aq.get_mpq_t(), MPFR_RNDU);
    r.bump_rounding_error(t);
    return r;
}

Interval Interval::recip() const {
    if (is_exact_zero()) throw division_by_zero("reciprocal of exact zero");
    if (contains_zero()) throw undecided("reciprocal of ball straddling zero");
    Interval r(prec_);
    Raw lo(prec_), hi(prec_), L(prec_), U(prec_), t1(prec_), t2(prec_);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    /* 1/x is decreasing on an interval avoiding 0: range = [1/hi, 1/lo] */
    mpfr_ui_div(L, 1, hi, MPFR_RNDD);
    mpfr_ui_div(U, 1, lo, MPFR_RNDU);
    mpfr_ui_div(r.mid_, 1, mid_, MPFR_RNDN);
    mpfr_sub(t1, r.mid_, L, MPFR_RNDU);
    mpfr_sub(t2, U, r.mid_, MPFR_RNDU);
    mpfr_max(r.rad_, t1, t2, MPFR_RNDU);
    return r;
}

Interval Interval::div(Interval const & o) const { return mul(o.recip()); }

Interval Interval::pow_int(long e) const {
    mpfr_prec_t p = prec_;
    if (e == 0) return Interval::exact(1L, p);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e)
                             : static_cast<unsigned long>(e);
    Interval acc = Interval::exact(1L, p);
    Interval base = *this;
    while (n) {
        if (n & 1) acc = acc.mul(base);
        n >>= 1;
        if (n) base = base.mul(base);
    }
    return invert ? acc.recip() : acc;
}

Interval Interval::abs_hull() const {
    Sign s = sign();
    if (s == Sign::Positive) return *this;
    if (s == Sign::Negative) return neg();
    /* straddles zero: hull is [0, max(|lo|, |hi|)] */
    Interval r(prec_);
    Raw lo(prec_), hi(prec_), m(prec_), t(prec_);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_abs(hi, hi, MPFR_RNDU);
    mpfr_max(m, lo, hi, MPFR_RNDU);
    mpfr_div_2ui(r.mid_, m, 1, MPFR_RNDN);
    mpfr_sub(t, m, r.mid_, MPFR_RNDU);
    mpfr_max(r.rad_, r.mid_, t, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    Raw lo(prec_);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
        Raw hi(prec_);
        mpfr_add(hi, mid_, rad_, MPFR_RNDU);
        if (mpfr_sgn(hi) <= 0 && !contains_zero())
            throw error("log of certified negative ball");
        throw undecided("log of ball whose lower bound is not positive");
    }
    Interval r(prec_);
    Raw hi(prec_), L(prec_), U(prec_), t1(prec_), t2(prec_);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpfr_log(L, lo, MPFR_RNDD);
    mpfr_log(U, hi, MPFR_RNDU);
    mpfr_log(r.mid_, mid_, MPFR_RNDN);
    mpfr_sub(t1, r.mid_, L, MPFR_RNDU);
    mpfr_sub(t2, U, r.mid_, MPFR_RNDU);
    mpfr_max(r.rad_, t1, t2, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt_nonneg() const {
    Raw lo(prec_), hi(prec_);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    if (mpfr_sgn(hi) < 0)
        throw error("sqrt_nonneg of certified negative ball");
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
    Interval r(prec_);
    Raw L(prec_), U(prec_), t1(prec_), t2(prec_);
    mpfr_sqrt(L, lo, MPFR_RNDD);
    mpfr_sqrt(U, hi, MPFR_RNDU);
    mpfr_add(r.mid_, L, U, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    mpfr_sub(t1, r.mid_, L, MPFR_RNDU);
    mpfr_sub(t2, U, r.mid_, MPFR_RNDU);
    mpfr_max(r.rad_, t1, t2, MPFR_RNDU);
    return r;
}

Sign Interval::sign() const {
    Raw b(prec_);
    mpfr_sub(b, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(b) > 0) return Sign::Positive;
    mpfr_add(b, mid_, rad_, MPFR_RNDU);
    if (mpfr_sgn(b) < 0) return Sign::Negative;
    return Sign::Undecided;
}

bool Interval::contains_zero() const { return sign() == Sign::Undecided || is_exact_zero(); }

bool Interval::is_exact() const { return mpfr_zero_p(rad_); }

bool Interval::is_exact_zero() const { return mpfr_zero_p(mid_) && mpfr_zero_p(rad_); }

bool Interval::contains(mpq_class const & q) const {
    Raw b(prec_);
    mpfr_sub(b, mid_, rad_, MPFR_RNDD);
    if (mpfr_cmp_q(b, q.get_mpq_t()) > 0) return false;
    mpfr_add(b, mid_, rad_, MPFR_RNDU);
    return mpfr_cmp_q(b, q.get_mpq_t()) >= 0;
}

bool Interval::le_certified(Interval const & o) const {
    Raw ua(prec_), lb(o.prec_);
    mpfr_add(ua, mid_, rad_, MPFR_RNDU);
    mpfr_sub(lb, o.mid_, o.rad_, MPFR_RNDD);
    return mpfr_cmp(ua, lb) <= 0;
}

bool Interval::le_consistent(Interval const & o) const {
    Raw la(prec_), ub(o.prec_);
    mpfr_sub(la, mid_, rad_, MPFR_RNDD);
    mpfr_add(ub, o.mid_, o.rad_, MPFR_RNDU);
    return mpfr_cmp(la, ub) <= 0;
}

bool Interval::disjoint_from(Interval const & o) const {
    mpfr_prec_t p = join(prec_, o.prec_);
    Raw d1(p), d2(p), gap(p), s(p);
    mpfr_sub(d1, mid_, o.mid_, MPFR_RNDD);
    mpfr_sub(d2, o.mid_, mid_, MPFR_RNDD);
    mpfr_max(gap, d1, d2, MPFR_RNDD); /* lower bound on |mid - o.mid| */
    mpfr_add(s, rad_, o.rad_, MPFR_RNDU);
    return mpfr_cmp(gap, s) > 0;
}

Interval Interval::at_precision(mpfr_prec_t prec) const {
    Interval r(prec);
    int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    r.bump_rounding_error(t);
    return r;
}

double Interval::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Interval::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Interval::mid_string(int digits) const {
    char buf[digits + 64];
    mpfr_snprintf(buf, sizeof buf, "%.*R*e", digits, MPFR_RNDN, mid_);
    return buf;
}

std::string Interval::rad_string(int digits) const {
    char buf[digits + 64];
    mpfr_snprintf(buf, sizeof buf, "%.*R*e", digits, MPFR_RNDU, rad_);
    return buf;
}

void Interval::lower(mpfr_t out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Interval::upper(mpfr_t out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }
void Interval::midpoint(mpfr_t out) const { mpfr_set(out, mid_, MPFR_RNDN); }

Interval operator+(Interval const & a, Interval const & b) { return a.add(b); }
Interval operator-(Interval const & a, Interval const & b) { return a.sub(b); }
Interval operator*(Interval const & a, Interval const & b) { return a.mul(b); }
Interval operator-(Interval const & a) { return a.neg(); }

Interval sum(std::vector<Interval> const & v, mpfr_prec_t prec) {
    Interval acc = Interval::zero(prec);
    for (auto const & x : v) acc = acc.add(x);
    return acc;
}

ComplexInterval::ComplexInterval(Interval re, Interval im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexInterval::ComplexInterval(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexInterval ComplexInterval::from_rational(mpq_class const & re,
                                               mpq_class const & im,
                                               mpfr_prec_t prec) {
    return ComplexInterval(Interval::from_rational(re, prec),
                           Interval::from_rational(im, prec));
}

ComplexInterval ComplexInterval::add(ComplexInterval const & o) const {
    return ComplexInterval(re_.add(o.re_), im_.add(o.im_));
}

ComplexInterval ComplexInterval::sub(ComplexInterval const & o) const {
    return ComplexInterval(re_.sub(o.re_), im_.sub(o.im_));
}

ComplexInterval ComplexInterval::mul(ComplexInterval const & o) const {
    return ComplexInterval(re_.mul(o.re_).sub(im_.mul(o.im_)),
                           re_.mul(o.im_).add(im_.mul(o.re_)));
}

ComplexInterval ComplexInterval::conj() const {
    return ComplexInterval(re_, im_.neg());
}

ComplexInterval ComplexInterval::neg() const {
    return ComplexInterval(re_.neg(), im_.neg());
}

Interval ComplexInterval::modulus() const {
    return re_.mul(re_).add(im_.mul(im_)).sqrt_nonneg();
}

bool ComplexInterval::contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
}

bool ComplexInterval::disjoint_from(ComplexInterval const & o) const {
    return re_.disjoint_from(o.re_) || im_.disjoint_from(o.im_);
}

ComplexInterval operator+(ComplexInterval const & a, ComplexInterval const & b) { return a.add(b); }
ComplexInterval operator-(ComplexInterval const & a, ComplexInterval const & b) { return a.sub(b); }
ComplexInterval operator*(ComplexInterval const & a, ComplexInterval const & b) { return a.mul(b); }

} // namespace mku
