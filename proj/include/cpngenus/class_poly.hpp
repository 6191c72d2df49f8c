#pragma once

#include "cpngenus/series.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpngenus {

enum class VarKind { chern, pontrjagin };

inline std::string variable_name(VarKind kind, unsigned index_1based) {
    return (kind == VarKind::chern ? "c" : "p") + std::to_string(index_1based);
}

/// Exponent vector for a monomial in class variables; entry i is the power
/// of the (i+1)-st variable. Canonical form has no trailing zeros, so the
/// same monomial compares equal regardless of how many variables are in play.
using Exponents = std::vector<unsigned>;

inline Exponents trimmed(Exponents e) {
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
    return e;
}

/// Total weight of a monomial: variable i (1-based) has weight i.
inline unsigned monomial_weight(const Exponents& e) {
    unsigned w = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        w += static_cast<unsigned>(i + 1) * e[i];
    }
    return w;
}

/// Weighted-graded polynomial in Chern or Pontrjagin class variables over a
/// coefficient ring R. Zero coefficients are never stored.
template <typename R>
class ClassPoly {
    using traits = ring_traits<R>;

public:
    explicit ClassPoly(VarKind kind) : kind_(kind) {}

    ClassPoly(VarKind kind, const R& constant) : kind_(kind) {
        add_term(Exponents{}, constant);
    }

    static ClassPoly monomial(VarKind kind, Exponents e, const R& coeff) {
        ClassPoly p(kind);
        p.add_term(std::move(e), coeff);
        return p;
    }

    /// The single variable c_i / p_i (1-based).
    static ClassPoly variable(VarKind kind, unsigned i) {
        Exponents e(i, 0);
        e[i - 1] = 1;
        return monomial(kind, std::move(e), traits::one());
    }

    VarKind kind() const { return kind_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, R>& terms() const { return terms_; }

    R coefficient(const Exponents& e) const {
        const auto it = terms_.find(trimmed(e));
        return it == terms_.end() ? traits::zero() : it->second;
    }

    void add_term(Exponents e, const R& coeff) {
        e = trimmed(std::move(e));
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(coeff == traits::zero())) {
                terms_.emplace(std::move(e), coeff);
            }
            return;
        }
        it->second = it->second + coeff;
        if (it->second == traits::zero()) {
            terms_.erase(it);
        }
    }

    bool operator==(const ClassPoly& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }
    bool operator!=(const ClassPoly& o) const { return !(*this == o); }

    ClassPoly operator+(const ClassPoly& o) const {
        check_same_kind(o);
        ClassPoly r = *this;
        for (const auto& [e, c] : o.terms_) {
            r.add_term(e, c);
        }
        return r;
    }

    ClassPoly operator-(const ClassPoly& o) const {
        check_same_kind(o);
        ClassPoly r = *this;
        for (const auto& [e, c] : o.terms_) {
            r.add_term(e, traits::zero() - c);
        }
        return r;
    }

    ClassPoly scaled(const R& s) const {
        ClassPoly r(kind_);
        if (s == traits::zero()) {
            return r;
        }
        for (const auto& [e, c] : terms_) {
            r.add_term(e, c * s);
        }
        return r;
    }

    /// Product, discarding monomials of weight beyond max_weight.
    ClassPoly multiply(const ClassPoly& o, unsigned max_weight) const {
        check_same_kind(o);
        ClassPoly r(kind_);
        for (const auto& [ea, ca] : terms_) {
            const unsigned wa = monomial_weight(ea);
            for (const auto& [eb, cb] : o.terms_) {
                if (wa + monomial_weight(eb) > max_weight) {
                    continue;
                }
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) {
                    e[i] += ea[i];
                }
                for (size_t i = 0; i < eb.size(); ++i) {
                    e[i] += eb[i];
                }
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    /// Homogeneous part of the given total weight.
    ClassPoly homogeneous_part(unsigned weight) const {
        ClassPoly r(kind_);
        for (const auto& [e, c] : terms_) {
            if (monomial_weight(e) == weight) {
                r.add_term(e, c);
            }
        }
        return r;
    }

    bool is_homogeneous(unsigned weight) const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (monomial_weight(e) != weight) {
                return false;
            }
        }
        return true;
    }

    /// exp of an element with no constant term, truncated at max_weight.
    ClassPoly exp(unsigned max_weight) const {
        if (!(coefficient(Exponents{}) == traits::zero())) {
            throw std::domain_error("ClassPoly::exp: constant term must vanish");
        }
        ClassPoly acc(kind_, traits::one());
        ClassPoly term(kind_, traits::one());
        for (unsigned k = 1; k <= max_weight; ++k) {
            term = term.multiply(*this, max_weight).scaled(traits::from_rational(Rational(1, k)));
            if (term.is_zero()) {
                break;
            }
            acc = acc + term;
        }
        return acc;
    }

    /// Substitutes a rational value for every variable. Every variable that
    /// actually occurs must be present in `values` (1-based index -> value).
    R evaluate(const std::map<unsigned, Rational>& values) const {
        R acc = traits::zero();
        for (const auto& [e, c] : terms_) {
            R term = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                const auto it = values.find(static_cast<unsigned>(i + 1));
                if (it == values.end()) {
                    throw std::invalid_argument(
                        "ClassPoly::evaluate: no value supplied for variable " +
                        variable_name(kind_, static_cast<unsigned>(i + 1)));
                }
                term = term * traits::from_rational(pow_rational(it->second, e[i]));
            }
            acc = acc + term;
        }
        return acc;
    }

    /// Canonical text form: within each weight, monomials in descending
    /// lexicographic order of exponent vectors (graded lexicographic overall).
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<Exponents, R>> items(terms_.begin(), terms_.end());
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            const unsigned wa = monomial_weight(a.first);
            const unsigned wb = monomial_weight(b.first);
            if (wa != wb) {
                return wa < wb;
            }
            return b.first < a.first;  // lex-descending within a weight
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : items) {
            append_term(out, first, e, c);
            first = false;
        }
        return out;
    }

private:
    void check_same_kind(const ClassPoly& o) const {
        if (kind_ != o.kind_) {
            throw std::invalid_argument("ClassPoly: mixing chern and pontrjagin variables");
        }
    }

    static std::string monomial_string(VarKind kind, const Exponents& e) {
        std::string out;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += "*";
            }
            out += variable_name(kind, static_cast<unsigned>(i + 1));
            if (e[i] > 1) {
                out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    void append_term(std::string& out, bool first, const Exponents& e, const R& c) const;

    VarKind kind_;
    std::map<Exponents, R> terms_;
};

template <>
inline void ClassPoly<Rational>::append_term(std::string& out, bool first, const Exponents& e,
                                             const Rational& c) const {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    const std::string mono = monomial_string(kind_, e);
    std::string term;
    if (mono.empty()) {
        term = cpngenus::to_string(mag);
    } else if (mag == 1) {
        term = mono;
    } else {
        term = cpngenus::to_string(mag) + "*" + mono;
    }
    if (first) {
        out = negative ? "-" + term : term;
    } else {
        out += negative ? " - " + term : " + " + term;
    }
}

template <>
inline void ClassPoly<ParamPoly>::append_term(std::string& out, bool first, const Exponents& e,
                                              const ParamPoly& c) const {
    const std::string mono = monomial_string(kind_, e);
    std::string coeff = c.is_constant() ? cpngenus::to_string(c.constant_term()) : "(" + c.to_string() + ")";
    std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (!first) {
        out += " + ";
    }
    out += term;
}

using ClassPolyQ = ClassPoly<Rational>;
using ClassPolyY = ClassPoly<ParamPoly>;

/// Evaluates every ParamPoly coefficient at a fixed y.
inline ClassPolyQ specialize_y(const ClassPolyY& p, const Rational& y) {
    ClassPolyQ r(p.kind());
    for (const auto& [e, c] : p.terms()) {
        r.add_term(e, c.evaluate(y));
    }
    return r;
}

/// Applies d^2/dy^2 followed by evaluation at y to every coefficient.
inline ClassPolyQ second_y_derivative_at(const ClassPolyY& p, const Rational& y) {
    ClassPolyQ r(p.kind());
    for (const auto& [e, c] : p.terms()) {
        r.add_term(e, c.derivative().derivative().evaluate(y));
    }
    return r;
}

}  // namespace cpngenus
