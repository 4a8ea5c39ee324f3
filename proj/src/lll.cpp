#include "mku/lll.hpp"

#include <cstddef>

namespace mku {

void lll_reduce(std::vector<std::vector<mpz_class>> & b) {
    size_t n = b.size();
    if (n < 2) return;
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> B(n, 0); /* squared norms of the GS vectors */

    /* rational Gram-Schmidt of rows [0, upto] */
    auto gram = [&](size_t upto) {
        std::vector<std::vector<mpq_class>> gs(upto + 1,
                                               std::vector<mpq_class>(b[0].size()));
        for (size_t i = 0; i <= upto; i++) {
            for (size_t k = 0; k < b[0].size(); k++) gs[i][k] = mpq_class(b[i][k]);
            for (size_t j = 0; j < i; j++) {
                if (B[j] == 0) {
                    mu[i][j] = 0;
                    continue;
                }
                mpq_class num = 0;
                for (size_t k = 0; k < b[0].size(); k++)
                    num += mpq_class(b[i][k]) * gs[j][k];
                mu[i][j] = num / B[j];
                for (size_t k = 0; k < b[0].size(); k++)
                    gs[i][k] -= mu[i][j] * gs[j][k];
            }
            B[i] = 0;
            for (size_t k = 0; k < b[0].size(); k++) B[i] += gs[i][k] * gs[i][k];
        }
    };

    gram(n - 1);
    size_t k = 1;
    while (k < n) {
        /* size reduction */
        for (size_t j = k; j-- > 0;) {
            mpq_class m = mu[k][j];
            if (abs(m) > mpq_class(1, 2)) {
                /* nearest integer: floor(m + 1/2) */
                mpz_class r;
                mpz_class num = m.get_num(), den = m.get_den();
                mpz_class twice = 2 * num + den;
                mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(),
                           mpz_class(2 * den).get_mpz_t());
                for (size_t t = 0; t < b[0].size(); t++) b[k][t] -= r * b[j][t];
                gram(k);
            }
        }
        /* Lovász condition with delta = 3/4 */
        mpq_class lhs = B[k];
        mpq_class rhs = (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs >= rhs) {
            k++;
        } else {
            std::swap(b[k], b[k - 1]);
            gram(n - 1);
            if (k > 1) k--;
        }
    }
}

} // namespace mku
