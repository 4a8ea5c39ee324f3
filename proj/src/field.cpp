#include "mku/field.hpp"

#include <algorithm>

namespace mku {

NumberField::NumberField(std::string label, IntPoly min_poly)
    : label_(std::move(label)), min_poly_(std::move(min_poly)) {
    while (!min_poly_.empty() && min_poly_.back() == 0) min_poly_.pop_back();
    if (min_poly_.size() < 3)
        throw invalid_fixture("min_poly must have degree >= 2");
    if (min_poly_.back() != 1)
        throw invalid_fixture("min_poly must be monic");
    if (!is_squarefree(min_poly_))
        throw invalid_fixture("min_poly must be squarefree");
    if (auto r = find_rational_root(min_poly_))
        throw invalid_fixture("min_poly has rational root " + rational_string(*r));
    min_poly_rat_ = to_rat(min_poly_);
    degree_ = static_cast<int>(min_poly_.size()) - 1;
    disc_ = poly_discriminant(min_poly_);
}

FieldElement::FieldElement(NumberField const & field, RatPoly coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) > field.degree()) {
        normalize(coeffs_);
        coeffs_ = poly_mod(coeffs_, field.min_poly_rat());
    }
    coeffs_.resize(field.degree(), mpq_class(0));
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](mpq_class const & c) { return c == 0; });
}

bool FieldElement::operator==(FieldElement const & o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

FieldElement elem_zero(NumberField const & f) { return FieldElement(f, {}); }

FieldElement elem_one(NumberField const & f) {
    return FieldElement(f, {mpq_class(1)});
}

FieldElement elem_generator(NumberField const & f) {
    return FieldElement(f, {mpq_class(0), mpq_class(1)});
}

FieldElement elem_from_int(NumberField const & f, long v) {
    return FieldElement(f, {mpq_class(v)});
}

FieldElement elem_add(FieldElement const & a, FieldElement const & b) {
    return FieldElement(a.field(), poly_add(a.coeffs(), b.coeffs()));
}

FieldElement elem_sub(FieldElement const & a, FieldElement const & b) {
    return FieldElement(a.field(), poly_sub(a.coeffs(), b.coeffs()));
}

FieldElement elem_neg(FieldElement const & a) {
    return FieldElement(a.field(), poly_scale(a.coeffs(), mpq_class(-1)));
}

FieldElement elem_mul(FieldElement const & a, FieldElement const & b) {
    RatPoly pa = a.coeffs(), pb = b.coeffs();
    normalize(pa);
    normalize(pb);
    return FieldElement(a.field(), poly_mulmod(pa, pb, a.field().min_poly_rat()));
}

FieldElement elem_inv(FieldElement const & a) {
    if (a.is_zero()) throw division_by_zero("inverse of zero field element");
    RatPoly pa = a.coeffs();
    normalize(pa);
    RatPoly u, v;
    RatPoly g = poly_extended_gcd(pa, a.field().min_poly_rat(), u, v);
    if (degree(g) != 0)
        throw not_invertible("element shares a factor with the defining polynomial");
    /* g == 1 after monic normalization, so u * a == 1 mod p */
    return FieldElement(a.field(), u);
}

FieldElement elem_div(FieldElement const & a, FieldElement const & b) {
    return elem_mul(a, elem_inv(b));
}

FieldElement elem_pow(FieldElement const & a, mpz_class const & e) {
    if (e == 0) return elem_one(a.field());
    mpz_class n = abs(e);
    FieldElement acc = elem_one(a.field());
    FieldElement base = a;
    while (n != 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = elem_mul(acc, base);
        n >>= 1;
        if (n != 0) base = elem_mul(base, base);
    }
    return e < 0 ? elem_inv(acc) : acc;
}

/* d x d multiplication matrix of a in the power basis, row-major. */
static std::vector<mpq_class> mul_matrix(FieldElement const & a) {
    int d = a.field().degree();
    std::vector<mpq_class> m(static_cast<size_t>(d) * d);
    RatPoly col = a.coeffs();
    normalize(col);
    RatPoly x = {mpq_class(0), mpq_class(1)};
    for (int j = 0; j < d; j++) {
        for (int i = 0; i < d; i++)
            m[static_cast<size_t>(i) * d + j] =
                i < static_cast<int>(col.size()) ? col[i] : mpq_class(0);
        if (j + 1 < d) col = poly_mulmod(col, x, a.field().min_poly_rat());
    }
    return m;
}

RatPoly char_poly(FieldElement const & a) {
    /* Faddeev-LeVerrier: exact over Q, fine at fixture degrees. */
    int d = a.field().degree();
    std::vector<mpq_class> M = mul_matrix(a);
    std::vector<mpq_class> A(M);
    RatPoly cp(d + 1, mpq_class(0));
    cp[d] = 1;
    mpq_class c;
    for (int k = 1; k <= d; k++) {
        c = 0;
        for (int i = 0; i < d; i++) c += A[static_cast<size_t>(i) * d + i];
        c = -c / k;
        cp[d - k] = c;
        if (k == d) break;
        /* A <- M * (A + c I) */
        for (int i = 0; i < d; i++) A[static_cast<size_t>(i) * d + i] += c;
        std::vector<mpq_class> B(static_cast<size_t>(d) * d, mpq_class(0));
        for (int i = 0; i < d; i++)
            for (int l = 0; l < d; l++) {
                mpq_class const & mil = M[static_cast<size_t>(i) * d + l];
                if (mil == 0) continue;
                for (int j = 0; j < d; j++)
                    B[static_cast<size_t>(i) * d + j] +=
                        mil * A[static_cast<size_t>(l) * d + j];
            }
        A = std::move(B);
    }
    return cp;
}

mpq_class norm(FieldElement const & a) {
    RatPoly cp = char_poly(a);
    int d = a.field().degree();
    mpq_class n = cp[0];
    return d % 2 == 0 ? n : -n;
}

mpq_class trace(FieldElement const & a) {
    RatPoly cp = char_poly(a);
    return -cp[a.field().degree() - 1];
}

mpq_class norm_by_resultant(FieldElement const & a) {
    RatPoly pa = a.coeffs();
    normalize(pa);
    return resultant(a.field().min_poly_rat(), pa);
}

RatPoly minimal_polynomial(FieldElement const & a) {
    RatPoly cp = char_poly(a);
    RatPoly g = poly_gcd(cp, derivative(cp));
    RatPoly q, r;
    poly_divmod(cp, g, q, r);
    if (!r.empty()) throw error("squarefree part left a remainder");
    return q;
}

bool is_unit(FieldElement const & a) {
    if (a.is_zero()) return false;
    RatPoly cp = char_poly(a);
    for (auto const & c : cp)
        if (c.get_den() != 1) return false; /* not an algebraic integer */
    return abs(cp[0]) == 1;
}

namespace {

long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; p++)
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) r -= r / m;
    return r;
}

} // namespace

bool is_torsion(FieldElement const & a, long * order) {
    if (a.is_zero()) return false;
    if (!is_unit(a)) return false;
    long d = a.field().degree();
    FieldElement one = elem_one(a.field());
    /* phi(m) <= d forces m <= 2 d^2 comfortably */
    for (long m = 1; m <= 2 * d * d + 2; m++) {
        if (euler_phi(m) > d || d % euler_phi(m) != 0) continue;
        if (elem_pow(a, m) == one) {
            if (order) *order = m;
            return true;
        }
    }
    return false;
}

FieldElement eval_poly_at(FieldElement const & a, RatPoly const & p) {
    FieldElement acc = elem_zero(a.field());
    for (size_t i = p.size(); i-- > 0;) {
        acc = elem_mul(acc, a);
        if (p[i] != 0)
            acc = elem_add(acc, FieldElement(a.field(), {p[i]}));
    }
    return acc;
}

std::vector<std::string> coeff_strings(FieldElement const & a) {
    std::vector<std::string> out;
    out.reserve(a.coeffs().size());
    for (auto const & c : a.coeffs()) out.push_back(rational_string(c));
    return out;
}

} // namespace mku
