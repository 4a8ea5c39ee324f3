#include "mku/polynomial.hpp"

#include <algorithm>

namespace mku {

mpq_class parse_rational(std::string const & s) {
    if (s.empty()) throw invalid_fixture("empty rational literal");
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw invalid_fixture("zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (std::invalid_argument const &) {
        throw invalid_fixture("bad rational literal: " + s);
    }
}

std::string rational_string(mpq_class const & q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatPoly to_rat(IntPoly const & p) {
    RatPoly r(p.size());
    for (size_t i = 0; i < p.size(); i++) r[i] = mpq_class(p[i]);
    normalize(r);
    return r;
}

void normalize(RatPoly & p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(RatPoly const & p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(RatPoly const & p) { return p.empty(); }

RatPoly poly_add(RatPoly const & a, RatPoly const & b) {
    RatPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    normalize(r);
    return r;
}

RatPoly poly_sub(RatPoly const & a, RatPoly const & b) {
    RatPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    normalize(r);
    return r;
}

RatPoly poly_mul(RatPoly const & a, RatPoly const & b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

RatPoly poly_scale(RatPoly const & a, mpq_class const & c) {
    if (c == 0) return {};
    RatPoly r(a);
    for (auto & x : r) x *= c;
    return r;
}

void poly_divmod(RatPoly const & a, RatPoly const & b, RatPoly & q, RatPoly & r) {
    if (b.empty()) throw division_by_zero("polynomial division by zero");
    r = a;
    normalize(r);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, mpq_class(0));
    mpq_class lead = b.back();
    /* each step cancels the top coefficient of r exactly, so r shrinks */
    while (r.size() >= b.size()) {
        mpq_class c = r.back() / lead;
        size_t shift = r.size() - b.size();
        q[shift] += c;
        for (size_t i = 0; i < b.size(); i++) r[shift + i] -= c * b[i];
        normalize(r);
    }
    normalize(q);
}

RatPoly poly_mod(RatPoly const & a, RatPoly const & b) {
    RatPoly q, r;
    poly_divmod(a, b, q, r);
    return r;
}

RatPoly poly_mulmod(RatPoly const & a, RatPoly const & b, RatPoly const & m) {
    return poly_mod(poly_mul(a, b), m);
}

RatPoly derivative(RatPoly const & p) {
    if (p.size() <= 1) return {};
    RatPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); i++) r[i - 1] = p[i] * static_cast<long>(i);
    normalize(r);
    return r;
}

static RatPoly make_monic(RatPoly p) {
    if (!p.empty() && p.back() != 1) {
        mpq_class inv = 1 / p.back();
        for (auto & c : p) c *= inv;
    }
    return p;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        RatPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

RatPoly poly_extended_gcd(RatPoly const & a, RatPoly const & b,
                          RatPoly & u, RatPoly & v) {
    RatPoly r0 = a, r1 = b;
    normalize(r0);
    normalize(r1);
    RatPoly u0 = {mpq_class(1)}, u1 = {};
    RatPoly v0 = {}, v1 = {mpq_class(1)};
    while (!r1.empty()) {
        RatPoly q, r;
        poly_divmod(r0, r1, q, r);
        RatPoly nu = poly_sub(u0, poly_mul(q, u1));
        RatPoly nv = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(nu);
        v0 = std::move(v1); v1 = std::move(nv);
    }
    if (!r0.empty() && r0.back() != 1) {
        mpq_class inv = 1 / r0.back();
        r0 = poly_scale(r0, inv);
        u0 = poly_scale(u0, inv);
        v0 = poly_scale(v0, inv);
    }
    u = u0;
    v = v0;
    return r0;
}

RatPoly poly_compose_mod(RatPoly const & a, RatPoly const & b, RatPoly const & m) {
    /* Horner over the quotient ring */
    RatPoly acc;
    for (size_t i = a.size(); i-- > 0;) {
        acc = poly_mulmod(acc, b, m);
        if (a[i] != 0) {
            if (acc.empty()) acc.push_back(a[i]);
            else acc[0] += a[i];
        }
        normalize(acc);
    }
    return acc;
}

mpq_class poly_eval(RatPoly const & p, mpq_class const & x) {
    mpq_class acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Interval poly_eval(RatPoly const & p, Interval const & x) {
    mpfr_prec_t prec = x.precision();
    Interval acc = Interval::zero(prec);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc.mul(x).add(Interval::from_rational(p[i], prec));
    return acc;
}

ComplexInterval poly_eval(RatPoly const & p, ComplexInterval const & x) {
    mpfr_prec_t prec = x.re().precision();
    ComplexInterval acc(prec);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc.mul(x).add(ComplexInterval::from_rational(p[i], 0, prec));
    return acc;
}

mpq_class resultant(RatPoly const & a, RatPoly const & b) {
    RatPoly f = a, g = b;
    normalize(f);
    normalize(g);
    if (f.empty() || g.empty()) return 0;
    mpq_class acc(1);
    /* res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) res(g, f mod g) */
    while (true) {
        int df = degree(f), dg = degree(g);
        if (dg == 0) {
            mpq_class lg = g.back();
            mpq_class p(1);
            for (int i = 0; i < df; i++) p *= lg;
            return acc * p;
        }
        RatPoly r = poly_mod(f, g);
        int dr = degree(r);
        if (r.empty()) return 0;
        mpq_class lg = g.back();
        mpq_class p(1);
        for (int i = 0; i < df - dr; i++) p *= lg;
        if ((static_cast<long>(df) * dg) % 2 == 1) p = -p;
        acc *= p;
        f = std::move(g);
        g = std::move(r);
    }
}

mpz_class poly_discriminant(IntPoly const & p) {
    RatPoly f = to_rat(p);
    int d = degree(f);
    if (d < 1) return 0;
    mpq_class res = resultant(f, derivative(f));
    mpq_class disc = res / f.back();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
    if (disc.get_den() != 1)
        throw error("discriminant of integer polynomial is not an integer");
    return disc.get_num();
}

bool is_squarefree(IntPoly const & p) {
    RatPoly f = to_rat(p);
    if (degree(f) < 1) return false;
    return degree(poly_gcd(f, derivative(f))) == 0;
}

namespace {

int sign_at_pos_infinity(RatPoly const & p) {
    if (p.empty()) return 0;
    return sgn(p.back());
}

int sign_at_neg_infinity(RatPoly const & p) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    return degree(p) % 2 == 0 ? s : -s;
}

} // namespace

int count_real_roots(IntPoly const & p) {
    RatPoly f = to_rat(p);
    if (degree(f) < 1) return 0;
    /* Sturm chain */
    std::vector<RatPoly> chain = {f, derivative(f)};
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
        for (auto & c : r) c = -c;
        normalize(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](auto sign_of) {
        int var = 0, prev = 0;
        for (auto const & q : chain) {
            int s = sign_of(q);
            if (s != 0) {
                if (prev != 0 && s != prev) var++;
                prev = s;
            }
        }
        return var;
    };
    return variations(sign_at_neg_infinity) - variations(sign_at_pos_infinity);
}

std::optional<mpq_class> find_rational_root(IntPoly const & p) {
    IntPoly f = p;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() <= 1) return std::nullopt;
    /* strip x | f */
    if (f[0] == 0) return mpq_class(0);
    mpz_class a0 = abs(f[0]), lc = abs(f.back());
    long const cap = 1000000;
    auto divisors = [&](mpz_class const & n) {
        std::vector<mpz_class> out;
        if (n > cap) {
            out.push_back(1);
            out.push_back(n);
            return out;
        }
        for (mpz_class d = 1; d * d <= n; d++)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    RatPoly rf = to_rat(f);
    for (auto const & num : divisors(a0))
        for (auto const & den : divisors(lc)) {
            mpq_class cand(num, den);
            cand.canonicalize();
            if (poly_eval(rf, cand) == 0) return cand;
            if (poly_eval(rf, -cand) == 0) return -cand;
        }
    return std::nullopt;
}

} // namespace mku
