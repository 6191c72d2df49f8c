#include "cpngenus/param_poly.hpp"

#include <stdexcept>

namespace cpngenus {

ParamPoly::ParamPoly(const Rational& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
    }
}

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::variable() { return ParamPoly(std::vector<Rational>{0, 1}); }

void ParamPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational ParamPoly::coeff(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i];
    }
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        out[i] += o.coeffs_[i];
    }
    return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) {
        return ParamPoly();
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly acc(Rational(1));
    ParamPoly b = *this;
    while (e > 0) {
        if (e & 1U) {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational ParamPoly::evaluate(const Rational& y) const {
    Rational r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r = r * y + coeffs_[i];
    }
    return r;
}

ParamPoly ParamPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return ParamPoly();
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * Rational(static_cast<int>(k));
    }
    return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::inverse() const {
    if (!is_unit()) {
        throw std::domain_error("ParamPoly::inverse: " + to_string() +
                                " is not a unit (units are nonzero constants)");
    }
    return ParamPoly(Rational(1) / coeffs_[0]);
}

std::string ParamPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (k == 0) {
            term = cpngenus::to_string(mag);
        } else {
            const std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
            term = (mag == 1) ? power : cpngenus::to_string(mag) + "*" + power;
        }
        if (first) {
            out = negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

std::string to_string(const ParamPoly& p) { return p.to_string(); }

}  // namespace cpngenus
