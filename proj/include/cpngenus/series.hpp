#pragma once

#include "cpngenus/param_poly.hpp"
#include "cpngenus/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpngenus {

/// Coefficient-ring hooks used by TruncatedSeries. A ring must embed the
/// rationals and know which of its elements are invertible.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_unit(const Rational& v) { return v != 0; }
    static Rational inverse(const Rational& v) { return Rational(1) / v; }
    static std::string describe(const Rational& v) { return to_string(v); }
};

template <>
struct ring_traits<ParamPoly> {
    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() { return ParamPoly(Rational(1)); }
    static ParamPoly from_rational(const Rational& q) { return ParamPoly(q); }
    static bool is_unit(const ParamPoly& v) { return v.is_unit(); }
    static ParamPoly inverse(const ParamPoly& v) { return v.inverse(); }
    static std::string describe(const ParamPoly& v) { return v.to_string(); }
};

/// Univariate formal power series over R, truncated at a fixed order.
/// Binary operations first align both operands to the smaller truncation
/// order; equality compares coefficients up to the shared order only.
template <typename R>
class TruncatedSeries {
    using traits = ring_traits<R>;

public:
    /// Zero series at the given truncation order.
    explicit TruncatedSeries(unsigned order) : coeffs_(order + 1, traits::zero()) {}

    TruncatedSeries(const R& constant, unsigned order) : TruncatedSeries(order) {
        coeffs_[0] = constant;
    }

    /// Series from explicit coefficients; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncatedSeries: need at least the degree-0 coefficient");
        }
    }

    /// The series x at the given truncation order (order >= 1).
    static TruncatedSeries variable(unsigned order) {
        TruncatedSeries s(order);
        if (order < 1) {
            throw std::invalid_argument("TruncatedSeries::variable: order must be >= 1");
        }
        s.coeffs_[1] = traits::one();
        return s;
    }

    unsigned truncation_order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    /// Exact coefficient of x^d. Degrees beyond the truncation order are
    /// unknown, not zero, so asking for one is an error.
    const R& coefficient(unsigned d) const {
        if (d >= coeffs_.size()) {
            throw std::out_of_range("TruncatedSeries::coefficient: degree " + std::to_string(d) +
                                    " exceeds truncation order " +
                                    std::to_string(truncation_order()));
        }
        return coeffs_[d];
    }

    void set_coefficient(unsigned d, const R& v) {
        if (d >= coeffs_.size()) {
            throw std::out_of_range("TruncatedSeries::set_coefficient: degree out of range");
        }
        coeffs_[d] = v;
    }

    TruncatedSeries truncate(unsigned order) const {
        std::vector<R> out(coeffs_.begin(), coeffs_.begin() + std::min<size_t>(order + 1, coeffs_.size()));
        out.resize(order + 1, traits::zero());
        return TruncatedSeries(std::move(out));
    }

    bool operator==(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation_order(), o.truncation_order());
        for (unsigned d = 0; d <= n; ++d) {
            if (!(coeffs_[d] == o.coeffs_[d])) {
                return false;
            }
        }
        return true;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) {
            c = traits::zero() - c;
        }
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation_order(), o.truncation_order());
        TruncatedSeries r(n);
        for (unsigned d = 0; d <= n; ++d) {
            r.coeffs_[d] = coeffs_[d] + o.coeffs_[d];
        }
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation_order(), o.truncation_order());
        TruncatedSeries r(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (coeffs_[i] == traits::zero()) {
                continue;
            }
            for (unsigned j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const R& s) const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) {
            c = c * s;
        }
        return r;
    }

    /// Quotient by a series whose constant term is a unit of R.
    TruncatedSeries operator/(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation_order(), o.truncation_order());
        if (!traits::is_unit(o.coeffs_[0])) {
            throw std::domain_error("series division: constant term " +
                                    traits::describe(o.coeffs_[0]) + " is not invertible");
        }
        const R inv0 = traits::inverse(o.coeffs_[0]);
        TruncatedSeries q(n);
        for (unsigned d = 0; d <= n; ++d) {
            R acc = coeffs_[d];
            for (unsigned i = 1; i <= d; ++i) {
                acc = acc - o.coeffs_[i] * q.coeffs_[d - i];
            }
            q.coeffs_[d] = acc * inv0;
        }
        return q;
    }

    /// Multiply by x^k; top k coefficients fall off the truncation window.
    TruncatedSeries shifted_up(unsigned k) const {
        TruncatedSeries r(truncation_order());
        for (unsigned d = k; d <= truncation_order(); ++d) {
            r.coeffs_[d] = coeffs_[d - k];
        }
        return r;
    }

    /// Divide by x^k; requires the low k coefficients to vanish. The result
    /// keeps the same truncation order with unknown top coefficients zeroed,
    /// so callers should budget headroom in the original order.
    TruncatedSeries shifted_down(unsigned k) const {
        for (unsigned d = 0; d < k; ++d) {
            if (!(coefficient(d) == traits::zero())) {
                throw std::domain_error("shifted_down: coefficient of x^" + std::to_string(d) +
                                        " is nonzero");
            }
        }
        TruncatedSeries r(truncation_order());
        for (unsigned d = k; d <= truncation_order(); ++d) {
            r.coeffs_[d - k] = coeffs_[d];
        }
        return r;
    }

    /// exp(f) for f with zero constant term.
    TruncatedSeries exp() const {
        if (!(coeffs_[0] == traits::zero())) {
            throw std::domain_error("series exp: constant term " + traits::describe(coeffs_[0]) +
                                    " must be zero");
        }
        const unsigned n = truncation_order();
        TruncatedSeries acc(traits::one(), n);
        TruncatedSeries term(traits::one(), n);
        for (unsigned k = 1; k <= n; ++k) {
            term = (term * *this).scaled(traits::from_rational(Rational(1, k)));
            acc += term;
        }
        return acc;
    }

    /// log(f) for f with constant term 1.
    TruncatedSeries log() const {
        if (!(coeffs_[0] == traits::one())) {
            throw std::domain_error("series log: constant term " + traits::describe(coeffs_[0]) +
                                    " must be 1");
        }
        const unsigned n = truncation_order();
        TruncatedSeries u = *this - TruncatedSeries(traits::one(), n);
        TruncatedSeries acc(n);
        TruncatedSeries upow(traits::one(), n);
        for (unsigned k = 1; k <= n; ++k) {
            upow *= u;
            const Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, static_cast<int>(k));
            acc += upow.scaled(traits::from_rational(c));
        }
        return acc;
    }

    /// f(g) for g with zero constant term.
    TruncatedSeries compose(const TruncatedSeries& g) const {
        if (!(g.coeffs_[0] == traits::zero())) {
            throw std::domain_error("series compose: inner constant term " +
                                    traits::describe(g.coeffs_[0]) + " must be zero");
        }
        const unsigned n = std::min(truncation_order(), g.truncation_order());
        const TruncatedSeries ga = g.truncate(n);
        TruncatedSeries acc(coeffs_[std::min<size_t>(n, coeffs_.size() - 1)], n);
        for (unsigned i = n; i-- > 0;) {
            acc = acc * ga + TruncatedSeries(coeffs_[i], n);
        }
        return acc;
    }

    /// f^m for integer m; negative m inverts first.
    TruncatedSeries pow(long m) const {
        const unsigned n = truncation_order();
        if (m < 0) {
            return (TruncatedSeries(traits::one(), n) / *this).pow(-m);
        }
        TruncatedSeries acc(traits::one(), n);
        TruncatedSeries b = *this;
        auto e = static_cast<unsigned long>(m);
        while (e > 0) {
            if (e & 1UL) {
                acc *= b;
            }
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    /// f^m for rational m, via exp(m log f); requires constant term 1.
    TruncatedSeries pow(const Rational& m) const {
        if (is_integer(m)) {
            const Integer e = to_integer(m);
            if (e >= std::numeric_limits<long>::min() && e <= std::numeric_limits<long>::max()) {
                return pow(static_cast<long>(e));
            }
        }
        if (!(coeffs_[0] == traits::one())) {
            throw std::domain_error("series pow: rational exponent needs constant term 1, got " +
                                    traits::describe(coeffs_[0]));
        }
        return log().scaled(traits::from_rational(m)).exp();
    }

private:
    std::vector<R> coeffs_;  // coeffs_[d] multiplies x^d; size = order + 1
};

using RationalSeries = TruncatedSeries<Rational>;
using ParamSeries = TruncatedSeries<ParamPoly>;

/// e^{a x} truncated at the given order.
inline RationalSeries exp_linear(const Rational& a, unsigned order) {
    return RationalSeries::variable(order).scaled(a).exp();
}

}  // namespace cpngenus
