// Test-only machinery, kept independent of the production K-polynomial path:
// expands a characteristic series over explicit formal roots as a dense
// multivariate polynomial and rewrites symmetric polynomials in elementary
// symmetric classes by greedy lex-leading-term elimination. Also provides
// Bernoulli numbers from their defining recurrence.
#pragma once

#include "cpngenus/class_poly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cpngenus::oracle {

template <typename R>
struct MultiPoly {
    using Key = std::vector<unsigned>;  // fixed length = nvars

    explicit MultiPoly(unsigned nvars) : nvars(nvars) {}

    unsigned nvars;
    std::map<Key, R> terms;

    static unsigned total_degree(const Key& k) {
        unsigned d = 0;
        for (const unsigned e : k) {
            d += e;
        }
        return d;
    }

    void add_term(const Key& key, const R& coeff) {
        if (key.size() != nvars) {
            throw std::invalid_argument("MultiPoly: key length mismatch");
        }
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!(coeff == ring_traits<R>::zero())) {
                terms.emplace(key, coeff);
            }
            return;
        }
        it->second = it->second + coeff;
        if (it->second == ring_traits<R>::zero()) {
            terms.erase(it);
        }
    }

    MultiPoly multiply(const MultiPoly& o, unsigned max_total_degree) const {
        MultiPoly r(nvars);
        for (const auto& [ka, ca] : terms) {
            const unsigned da = total_degree(ka);
            for (const auto& [kb, cb] : o.terms) {
                if (da + total_degree(kb) > max_total_degree) {
                    continue;
                }
                Key k(nvars);
                for (unsigned i = 0; i < nvars; ++i) {
                    k[i] = ka[i] + kb[i];
                }
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }

    MultiPoly plus(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [k, c] : o.terms) {
            r.add_term(k, c);
        }
        return r;
    }

    MultiPoly scaled(const R& s) const {
        MultiPoly r(nvars);
        for (const auto& [k, c] : terms) {
            r.add_term(k, c * s);
        }
        return r;
    }

    MultiPoly homogeneous_part(unsigned degree) const {
        MultiPoly r(nvars);
        for (const auto& [k, c] : terms) {
            if (total_degree(k) == degree) {
                r.add_term(k, c);
            }
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

/// i-th elementary symmetric polynomial of the variables listed in `vars`
/// (indices into an nvars-variable ring).
template <typename R>
MultiPoly<R> elementary_symmetric_subset(unsigned nvars, const std::vector<unsigned>& vars,
                                         unsigned i) {
    MultiPoly<R> out(nvars);
    if (i == 0) {
        out.add_term(std::vector<unsigned>(nvars, 0), ring_traits<R>::one());
        return out;
    }
    if (i > vars.size()) {
        return out;
    }
    std::vector<unsigned> pick(i);
    // enumerate i-subsets of vars
    const auto emit = [&]() {
        std::vector<unsigned> key(nvars, 0);
        for (const unsigned v : pick) {
            key[v] = 1;
        }
        out.add_term(key, ring_traits<R>::one());
    };
    const unsigned m = static_cast<unsigned>(vars.size());
    std::vector<unsigned> idx(i);
    for (unsigned t = 0; t < i; ++t) {
        idx[t] = t;
    }
    while (true) {
        for (unsigned t = 0; t < i; ++t) {
            pick[t] = vars[idx[t]];
        }
        emit();
        int t = static_cast<int>(i) - 1;
        while (t >= 0 && idx[t] == m - i + t) {
            --t;
        }
        if (t < 0) {
            break;
        }
        ++idx[t];
        for (unsigned s = t + 1; s < i; ++s) {
            idx[s] = idx[s - 1] + 1;
        }
    }
    return out;
}

template <typename R>
MultiPoly<R> elementary_symmetric(unsigned nvars, unsigned i) {
    std::vector<unsigned> all(nvars);
    for (unsigned v = 0; v < nvars; ++v) {
        all[v] = v;
    }
    return elementary_symmetric_subset<R>(nvars, all, i);
}

/// Expands prod over the listed roots of q(x_v), truncated at total degree.
template <typename R>
MultiPoly<R> product_over_roots(const TruncatedSeries<R>& q, unsigned nvars,
                                const std::vector<unsigned>& vars, unsigned max_total_degree) {
    MultiPoly<R> acc(nvars);
    acc.add_term(std::vector<unsigned>(nvars, 0), ring_traits<R>::one());
    for (const unsigned v : vars) {
        MultiPoly<R> factor(nvars);
        for (unsigned d = 0; d <= std::min(max_total_degree, q.truncation_order()); ++d) {
            std::vector<unsigned> key(nvars, 0);
            key[v] = d;
            factor.add_term(key, q.coefficient(d));
        }
        acc = acc.multiply(factor, max_total_degree);
    }
    return acc;
}

/// Rewrites a symmetric polynomial as a polynomial in e_1..e_nvars by
/// repeatedly cancelling the lex-leading term; the result is returned in
/// class variables (e_i -> c_i or p_i). Faithful only for monomial weights
/// up to the number of variables.
template <typename R>
ClassPoly<R> symmetric_to_classes(MultiPoly<R> s, VarKind kind) {
    ClassPoly<R> out(kind);
    while (!s.terms.empty()) {
        const auto lead = s.terms.rbegin()->first;    // by value: the entry is
        const auto coeff = s.terms.rbegin()->second;  // erased by the subtraction

        for (size_t i = 0; i + 1 < lead.size(); ++i) {
            if (lead[i] < lead[i + 1]) {
                throw std::logic_error(
                    "symmetric_to_classes: leading exponent not weakly decreasing; "
                    "input polynomial is not symmetric");
            }
        }
        Exponents mu(s.nvars, 0);
        for (unsigned i = 0; i < s.nvars; ++i) {
            const unsigned next = (i + 1 < s.nvars) ? lead[i + 1] : 0;
            mu[i] = lead[i] - next;
        }
        const unsigned weight = MultiPoly<R>::total_degree(lead);
        MultiPoly<R> prod(s.nvars);
        prod.add_term(std::vector<unsigned>(s.nvars, 0), coeff);
        for (unsigned i = 0; i < s.nvars; ++i) {
            for (unsigned rep = 0; rep < mu[i]; ++rep) {
                prod = prod.multiply(elementary_symmetric<R>(s.nvars, i + 1), weight);
            }
        }
        out.add_term(mu, coeff);
        // subtract
        for (const auto& [k, c] : prod.terms) {
            s.add_term(k, ring_traits<R>::zero() - c);
        }
    }
    return out;
}

/// K-polynomials of a Chern-type genus by direct expansion over `nroots`
/// explicit roots; valid for degrees <= nroots.
template <typename R>
std::vector<ClassPoly<R>> kpolys_by_root_expansion(const TruncatedSeries<R>& q, unsigned nroots,
                                                   unsigned up_to) {
    if (up_to > nroots) {
        throw std::invalid_argument("kpolys_by_root_expansion: need at least up_to roots");
    }
    std::vector<unsigned> vars(nroots);
    for (unsigned v = 0; v < nroots; ++v) {
        vars[v] = v;
    }
    const auto total = product_over_roots(q, nroots, vars, up_to);
    std::vector<ClassPoly<R>> out;
    for (unsigned j = 0; j <= up_to; ++j) {
        out.push_back(symmetric_to_classes(total.homogeneous_part(j), VarKind::chern));
    }
    return out;
}

/// K-polynomials of a Pontrjagin-type genus from an even series: expand over
/// explicit x-roots, check every exponent is even, substitute u_i = x_i^2
/// and reduce in the u-variables.
template <typename R>
std::vector<ClassPoly<R>> kpolys_by_even_root_expansion(const TruncatedSeries<R>& q_even,
                                                        unsigned nroots, unsigned up_to) {
    if (up_to > nroots) {
        throw std::invalid_argument("kpolys_by_even_root_expansion: need at least up_to roots");
    }
    std::vector<unsigned> vars(nroots);
    for (unsigned v = 0; v < nroots; ++v) {
        vars[v] = v;
    }
    const auto total_x = product_over_roots(q_even, nroots, vars, 2 * up_to);
    MultiPoly<R> total_u(nroots);
    for (const auto& [k, c] : total_x.terms) {
        std::vector<unsigned> halved(nroots);
        for (unsigned i = 0; i < nroots; ++i) {
            if (k[i] % 2 != 0) {
                throw std::logic_error("kpolys_by_even_root_expansion: odd exponent from an even "
                                       "series");
            }
            halved[i] = k[i] / 2;
        }
        total_u.add_term(halved, c);
    }
    std::vector<ClassPoly<R>> out;
    for (unsigned j = 0; j <= up_to; ++j) {
        out.push_back(symmetric_to_classes(total_u.homogeneous_part(j), VarKind::pontrjagin));
    }
    return out;
}

/// B_0, ..., B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0 (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(unsigned m);

/// Substitutes the elementary symmetric expansions of the listed variables
/// into a class polynomial, truncating at total degree max_total_degree.
template <typename R>
MultiPoly<R> substitute_elementary(const ClassPoly<R>& poly, unsigned nvars,
                                   const std::vector<unsigned>& vars, unsigned max_total_degree) {
    MultiPoly<R> acc(nvars);
    for (const auto& [e, c] : poly.terms()) {
        MultiPoly<R> term(nvars);
        term.add_term(std::vector<unsigned>(nvars, 0), c);
        for (size_t i = 0; i < e.size(); ++i) {
            for (unsigned rep = 0; rep < e[i]; ++rep) {
                term = term.multiply(
                    elementary_symmetric_subset<R>(nvars, vars, static_cast<unsigned>(i + 1)),
                    max_total_degree);
            }
        }
        acc = acc.plus(term);
    }
    return acc;
}

}  // namespace cpngenus::oracle
