#ifndef MKU_INTERVAL_HPP_
#define MKU_INTERVAL_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

#include "mku/errors.hpp"

namespace mku {

/* Midpoint/radius interval ("ball") arithmetic on top of MPFR.
 *
 * Invariants:
 *  - rad >= 0 always, and the represented set is [mid - rad, mid + rad];
 *  - every operation returns a ball containing the exact image of every
 *    point of the operand balls: midpoints are computed round-to-nearest
 *    and the worst-case rounding error (one ulp of the result) is folded
 *    into the radius, but only when MPFR reports the result inexact, so
 *    pipelines that stay representable (integers, dyadics) keep rad == 0;
 *  - radius arithmetic always rounds upward.
 *
 * Comparisons are deliberately absent: every decision goes through sign()
 * or the certified/consistent predicates, which say explicitly what is
 * proven. With MKU_FORBID_RAW_FLOAT_COMPARES the raw relational operators
 * are poisoned (deleted) so a careless `<` in a certification path fails
 * to compile.
 */

enum class Sign { Negative, Undecided, Positive };

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(Interval const &);
    Interval(Interval &&) noexcept;
    Interval & operator=(Interval const &);
    Interval & operator=(Interval &&) noexcept;
    ~Interval();

    static Interval exact(long v, mpfr_prec_t prec);
    static Interval exact(mpz_class const & v, mpfr_prec_t prec);
    static Interval from_rational(mpq_class const & q, mpfr_prec_t prec);
    static Interval zero(mpfr_prec_t prec);
    /* Radius-0 ball at a dyadic point already held as an mpfr value. */
    static Interval exact_dyadic(mpfr_srcptr v, mpfr_prec_t prec);
    /* Symmetric ball [-u, u] where u = upper(r); requires u >= 0. */
    static Interval zero_pm(Interval const & r);

    mpfr_prec_t precision() const { return prec_; }

    Interval add(Interval const & o) const;
    Interval sub(Interval const & o) const;
    Interval mul(Interval const & o) const;
    Interval div(Interval const & o) const; /* division_by_zero if o contains 0 */
    Interval neg() const;
    Interval recip() const;
    Interval mul_2exp(long e) const; /* exact scaling by 2^e */
    Interval scale(mpq_class const & q) const;
    Interval pow_int(long e) const;

    /* Hull of |x| over the ball; exact when the sign is decided. */
    Interval abs_hull() const;

    /* Natural log; requires a certified positive lower bound, else undecided
     * is thrown (callers escalate). */
    Interval log() const;

    /* Square root where the argument is known mathematically nonnegative:
     * a lower bound below zero is clamped to zero instead of failing. */
    Interval sqrt_nonneg() const;

    Sign sign() const;
    bool contains_zero() const;
    bool is_exact() const; /* rad == 0 */
    bool is_exact_zero() const;
    bool contains(mpq_class const & q) const;

    /* upper(this) <= lower(o): the inequality this <= o is proven. */
    bool le_certified(Interval const & o) const;
    /* lower(this) <= upper(o): the inequality this <= o is not refuted. */
    bool le_consistent(Interval const & o) const;
    /* Balls certified disjoint (strict gap). */
    bool disjoint_from(Interval const & o) const;

    /* Recompute the same ball at a different precision (enclosure kept). */
    Interval at_precision(mpfr_prec_t prec) const;

    /* Heuristic accessors: never feed these into a certification decision. */
    double mid_double() const;
    double rad_double() const;

    /* Deterministic decimal rendering for certificates: midpoint rounded to
     * nearest, radius rounded up. */
    std::string mid_string(int digits = 40) const;
    std::string rad_string(int digits = 8) const;

    /* Bounds as fresh mpfr values (RNDD lower / RNDU upper); used by the
     * certified predicates and tests. */
    void lower(mpfr_t out) const;
    void upper(mpfr_t out) const;

    /* Midpoint copied into out (RNDN at out's precision). The midpoint is
     * data, not a certified value; pair it with the radius. */
    void midpoint(mpfr_t out) const;

#ifdef MKU_FORBID_RAW_FLOAT_COMPARES
    friend bool operator<(Interval const &, Interval const &) = delete;
    friend bool operator>(Interval const &, Interval const &) = delete;
    friend bool operator<=(Interval const &, Interval const &) = delete;
    friend bool operator>=(Interval const &, Interval const &) = delete;
    friend bool operator<(Interval const &, double) = delete;
    friend bool operator>(Interval const &, double) = delete;
    friend bool operator<=(Interval const &, double) = delete;
    friend bool operator>=(Interval const &, double) = delete;
#endif

  private:
    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;

    void bump_rounding_error(int ternary);
    friend class ComplexInterval;
};

Interval operator+(Interval const & a, Interval const & b);
Interval operator-(Interval const & a, Interval const & b);
Interval operator*(Interval const & a, Interval const & b);
Interval operator-(Interval const & a);

Interval sum(std::vector<Interval> const & v, mpfr_prec_t prec);

/* Rectangular complex ball: independent real/imaginary intervals. */
class ComplexInterval {
  public:
    ComplexInterval(Interval re, Interval im);
    explicit ComplexInterval(mpfr_prec_t prec = 128);

    static ComplexInterval from_rational(mpq_class const & re,
                                         mpq_class const & im,
                                         mpfr_prec_t prec);

    Interval const & re() const { return re_; }
    Interval const & im() const { return im_; }

    ComplexInterval add(ComplexInterval const & o) const;
    ComplexInterval sub(ComplexInterval const & o) const;
    ComplexInterval mul(ComplexInterval const & o) const;
    ComplexInterval conj() const;
    ComplexInterval neg() const;

    /* Hull of |z|; never negative. */
    Interval modulus() const;

    bool contains_zero() const;
    bool disjoint_from(ComplexInterval const & o) const;

#ifdef MKU_FORBID_RAW_FLOAT_COMPARES
    friend bool operator<(ComplexInterval const &, ComplexInterval const &) = delete;
    friend bool operator>(ComplexInterval const &, ComplexInterval const &) = delete;
#endif

  private:
    Interval re_;
    Interval im_;
};

ComplexInterval operator+(ComplexInterval const & a, ComplexInterval const & b);
ComplexInterval operator-(ComplexInterval const & a, ComplexInterval const & b);
ComplexInterval operator*(ComplexInterval const & a, ComplexInterval const & b);

/* Precision escalation policy: start bits, doubling, hard ceiling. */
struct PrecisionPolicy {
    mpfr_prec_t start = 128;
    mpfr_prec_t ceiling = 8192;
};

/* Run f(prec) at start precision, doubling on `undecided` until the ceiling
 * is passed, then rethrow as precision_exhausted. Records the precisions
 * tried in *trace when given. */
template <typename F>
auto with_escalation(PrecisionPolicy const & pol, F && f,
                     std::vector<long> * trace = nullptr) {
    for (mpfr_prec_t p = pol.start;; p *= 2) {
        if (trace) trace->push_back(static_cast<long>(p));
        try {
            return f(p);
        } catch (undecided const &) {
            if (2 * p > pol.ceiling)
                throw precision_exhausted(
                    "undecided at precision ceiling " + std::to_string(pol.ceiling));
        }
    }
}

} // namespace mku

#endif
