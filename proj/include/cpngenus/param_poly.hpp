#pragma once

#include "cpngenus/rational.hpp"

#include <string>
#include <vector>

namespace cpngenus {

/// Polynomial in the genus parameter y with exact rational coefficients.
/// Forms the coefficient ring for chi_y-genus computations; a unit is a
/// nonzero constant. Evaluation at a rational point is a ring homomorphism.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor) ring embedding
    ParamPoly(int constant) : ParamPoly(Rational(constant)) {}
    explicit ParamPoly(std::vector<Rational> coeffs);

    /// The monomial y.
    static ParamPoly variable();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of y^k (zero beyond the degree).
    Rational coeff(unsigned k) const;

    Rational constant_term() const { return coeff(0); }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    bool operator==(const ParamPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly pow(unsigned e) const;

    Rational evaluate(const Rational& y) const;

    /// d/dy.
    ParamPoly derivative() const;

    /// True iff the polynomial is invertible in the ring (a nonzero constant).
    bool is_unit() const { return coeffs_.size() == 1; }

    /// Throws std::domain_error unless is_unit().
    ParamPoly inverse() const;

    /// Ascending powers, e.g. "1 - y + y^2". Zero prints "0".
    std::string to_string(const std::string& var = "y") const;

private:
    void trim();

    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies y^k; no trailing zeros
};

inline ParamPoly operator*(const Rational& s, const ParamPoly& p) { return ParamPoly(s) * p; }

std::string to_string(const ParamPoly& p);

}  // namespace cpngenus
