#include "symmetric_oracle.hpp"

namespace cpngenus::oracle {

std::vector<Rational> bernoulli_numbers(unsigned m) {
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j < k; ++j) {
            acc += Rational(binomial(k + 1, j)) * b[j];
        }
        b[k] = -acc / Rational(Integer(k) + 1);
    }
    return b;
}

}  // namespace cpngenus::oracle
