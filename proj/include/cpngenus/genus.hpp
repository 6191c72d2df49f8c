#pragma once

#include "cpngenus/class_poly.hpp"
#include "cpngenus/hodge.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpngenus {

/// Universal polynomials of a multiplicative sequence, computed from the
/// characteristic power series by the formal-root construction: take log Q,
/// attach coefficient l_s to the s-th power sum of the roots, rewrite power
/// sums in the elementary symmetric classes by Newton's identities, and
/// exponentiate in the weight-truncated class ring.
template <typename R>
std::vector<ClassPoly<R>> build_k_polynomials(const TruncatedSeries<R>& root_series, VarKind kind,
                                              unsigned up_to) {
    using traits = ring_traits<R>;
    if (root_series.truncation_order() < up_to) {
        throw std::invalid_argument("build_k_polynomials: series order " +
                                    std::to_string(root_series.truncation_order()) +
                                    " too small for degree " + std::to_string(up_to));
    }
    const auto log_q = root_series.truncate(up_to).log();

    // Power sums in the class variables, Newton's identities:
    //   p_s = sum_{i=1}^{s-1} (-1)^{i-1} e_i p_{s-i} + (-1)^{s-1} s e_s.
    std::vector<ClassPoly<R>> psum;
    psum.reserve(up_to + 1);
    psum.emplace_back(kind);  // p_0 slot, unused
    for (unsigned s = 1; s <= up_to; ++s) {
        ClassPoly<R> p(kind);
        for (unsigned i = 1; i < s; ++i) {
            const Rational sign = (i % 2 == 1) ? 1 : -1;
            p = p + ClassPoly<R>::variable(kind, i)
                        .multiply(psum[s - i], up_to)
                        .scaled(traits::from_rational(sign));
        }
        const Rational sign_s = (s % 2 == 1) ? Rational(s) : Rational(-static_cast<int>(s));
        p = p + ClassPoly<R>::variable(kind, s).scaled(traits::from_rational(sign_s));
        psum.push_back(std::move(p));
    }

    ClassPoly<R> log_total(kind);
    for (unsigned s = 1; s <= up_to; ++s) {
        log_total = log_total + psum[s].scaled(log_q.coefficient(s));
    }
    const ClassPoly<R> total = log_total.exp(up_to);

    std::vector<ClassPoly<R>> out;
    out.reserve(up_to + 1);
    for (unsigned j = 0; j <= up_to; ++j) {
        out.push_back(total.homogeneous_part(j));
    }
    return out;
}

/// A Hirzebruch genus: a characteristic power series with constant term 1,
/// serving K-polynomials in Chern variables, or in Pontrjagin variables when
/// the series is even. K-polynomials are cached per instance.
template <typename R>
class Genus {
public:
    Genus(std::string name, TruncatedSeries<R> char_series, VarKind kind)
        : name_(std::move(name)), series_(std::move(char_series)), kind_(kind) {
        using traits = ring_traits<R>;
        if (!(series_.coefficient(0) == traits::one())) {
            throw std::invalid_argument("Genus " + name_ + ": constant term must be 1");
        }
        if (kind_ == VarKind::pontrjagin) {
            // Pontrjagin sequences come from even series: rewrite Q(x) as a
            // series in t = x^2 and run the construction on the t-roots.
            const unsigned n = series_.truncation_order();
            for (unsigned d = 1; d <= n; d += 2) {
                if (!(series_.coefficient(d) == traits::zero())) {
                    throw std::invalid_argument(
                        "Genus " + name_ + ": series is not even (x^" + std::to_string(d) +
                        " coefficient " + ring_traits<R>::describe(series_.coefficient(d)) + ")");
                }
            }
            std::vector<R> compressed;
            compressed.reserve(n / 2 + 1);
            for (unsigned d = 0; 2 * d <= n; ++d) {
                compressed.push_back(series_.coefficient(2 * d));
            }
            root_series_ = std::make_unique<TruncatedSeries<R>>(std::move(compressed));
        } else {
            root_series_ = std::make_unique<TruncatedSeries<R>>(series_);
        }
    }

    Genus(const Genus&) = delete;
    Genus& operator=(const Genus&) = delete;

    const std::string& name() const { return name_; }
    const TruncatedSeries<R>& char_series() const { return series_; }
    VarKind kind() const { return kind_; }

    /// Largest degree this instance can serve.
    unsigned max_degree() const { return root_series_->truncation_order(); }

    /// K_0..K_up_to; K_0 = 1 always.
    std::vector<ClassPoly<R>> k_polynomials(unsigned up_to) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_locked(up_to);
        return std::vector<ClassPoly<R>>(cache_.begin(), cache_.begin() + up_to + 1);
    }

    ClassPoly<R> k_polynomial(unsigned degree) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_locked(degree);
        return cache_[degree];
    }

private:
    void ensure_locked(unsigned up_to) const {
        if (cache_.size() > up_to) {
            return;
        }
        cache_ = build_k_polynomials(*root_series_, kind_, up_to);
    }

    std::string name_;
    TruncatedSeries<R> series_;
    VarKind kind_;
    std::unique_ptr<TruncatedSeries<R>> root_series_;
    mutable std::mutex mutex_;
    mutable std::vector<ClassPoly<R>> cache_;
};

using GenusQ = Genus<Rational>;
using GenusY = Genus<ParamPoly>;

/// x / (1 - e^{-x}).
RationalSeries todd_series(unsigned order);

/// x / (e^{x/2} - e^{-x/2}), the even series of the A-hat genus.
RationalSeries a_hat_series(unsigned order);

/// x / tanh(x), the even series of the L-genus (signature).
RationalSeries l_series(unsigned order);

/// Characteristic series of the chi_y genus over Q[y], normalized to give
/// the Todd series at y = 0, the L series at y = 1 and 1 + x at y = -1.
ParamSeries chi_y_series(unsigned order);

const GenusQ& todd_genus();
const GenusQ& a_hat_genus();
const GenusQ& l_genus();
const GenusY& chi_y_genus_object();

/// Degree-n K-polynomial of chi_y, coefficients polynomial in y.
ClassPolyY chi_y_genus(unsigned n);

/// The two coefficients of the engine-derived linear relation
///   chi_y''(-1) = c1cn1_coeff * (c1 c_{n-1}) + cn_coeff * c_n,
/// obtained by differentiating the universal chi_y polynomial twice in y.
/// Throws std::logic_error when other monomials survive and std::domain_error
/// when the c1 c_{n-1} coefficient degenerates to zero.
struct ChiSecondDerivRelation {
    Rational c1cn1_coeff;
    Rational cn_coeff;
};
ChiSecondDerivRelation c1cn1_relation(unsigned n);

/// Hodge side of chi_y''(-1): sum_p p(p-1) chi(Omega^p) (-1)^{p-2}.
Rational chi_second_derivative_hodge_side(const HodgeTable& hodge);

/// The value of c1 c_{n-1} forced by the Hodge numbers: equate the engine
/// relation with the Hodge side of chi_y''(-1) and solve, with c_n known
/// (the Euler number). For n = 1 the product collapses to c1 = c_n itself.
Rational c1cn1_constraint(unsigned n, const HodgeTable& hodge);

}  // namespace cpngenus
