#include "cpngenus/hodge.hpp"

#include <stdexcept>

namespace cpngenus {

HodgeTable::HodgeTable(unsigned n)
    : n_(n), h_(n + 1, std::vector<Integer>(n + 1, Integer(0))) {}

HodgeTable::HodgeTable(unsigned n, std::vector<std::vector<Integer>> rows) : n_(n), h_(std::move(rows)) {
    if (h_.size() != n + 1) {
        throw std::invalid_argument("HodgeTable: expected " + std::to_string(n + 1) + " rows");
    }
    for (unsigned p = 0; p <= n; ++p) {
        if (h_[p].size() != n + 1) {
            throw std::invalid_argument("HodgeTable: row " + std::to_string(p) + " has wrong length");
        }
        for (unsigned q = 0; q <= n; ++q) {
            if (h_[p][q] < 0) {
                throw std::invalid_argument("HodgeTable: negative entry at (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
            }
        }
    }
    for (unsigned p = 0; p <= n; ++p) {
        for (unsigned q = p + 1; q <= n; ++q) {
            if (h_[p][q] != h_[q][p]) {
                throw std::invalid_argument("HodgeTable: symmetry violated at (" +
                                            std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }
    }
}

const Integer& HodgeTable::h(unsigned p, unsigned q) const {
    if (p > n_ || q > n_) {
        throw std::out_of_range("HodgeTable::h: index out of range");
    }
    return h_[p][q];
}

void HodgeTable::set_h(unsigned p, unsigned q, const Integer& value) {
    if (p > n_ || q > n_) {
        throw std::out_of_range("HodgeTable::set_h: index out of range");
    }
    if (value < 0) {
        throw std::invalid_argument("HodgeTable::set_h: negative value");
    }
    h_[p][q] = value;
    h_[q][p] = value;
}

Integer HodgeTable::betti(unsigned i) const {
    Integer b = 0;
    for (unsigned p = 0; p <= n_ && p <= i; ++p) {
        const unsigned q = i - p;
        if (q <= n_) {
            b += h_[p][q];
        }
    }
    return b;
}

Integer HodgeTable::euler_number() const {
    Integer e = 0;
    for (unsigned i = 0; i <= 2 * n_; ++i) {
        const Integer b = betti(i);
        e += (i % 2 == 0) ? b : -b;
    }
    return e;
}

Integer HodgeTable::chi_p(unsigned p) const {
    Integer acc = 0;
    for (unsigned q = 0; q <= n_; ++q) {
        acc += (q % 2 == 0) ? h_[p][q] : -h_[p][q];
    }
    return acc;
}

ParamPoly HodgeTable::chi_y_polynomial() const {
    std::vector<Rational> coeffs(n_ + 1);
    for (unsigned p = 0; p <= n_; ++p) {
        coeffs[p] = Rational(chi_p(p));
    }
    return ParamPoly(std::move(coeffs));
}

HodgeTable infer_hodge(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("infer_hodge: dimension must be >= 1");
    }
    HodgeTable t(n);
    for (unsigned p = 0; p <= n; ++p) {
        t.set_h(p, p, 1);
    }
    return t;
}

Rational todd_from_hodge(const HodgeTable& hodge) {
    Rational acc = 0;
    for (unsigned q = 0; q <= hodge.dimension(); ++q) {
        const Rational term(hodge.h(0, q));
        acc += (q % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace cpngenus
