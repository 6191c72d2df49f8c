#include "cpngenus/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cpngenus {

namespace {

std::map<unsigned, Rational> pontrjagin_values(unsigned n) {
    std::map<unsigned, Rational> values;
    const auto q = standard_pontrjagin(n);
    for (unsigned i = 0; i < q.size(); ++i) {
        values[i + 1] = Rational(q[i]);
    }
    return values;
}

std::string join_k(const std::vector<Integer>& ks) {
    std::string out;
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += ks[i].str();
    }
    return out;
}

FinalVerdict decide_verdict(const std::vector<CandidateOutcome>& candidates) {
    std::vector<const CandidateOutcome*> alive;
    for (const auto& c : candidates) {
        if (c.status != CandidateStatus::eliminated) {
            alive.push_back(&c);
        }
    }
    FinalVerdict v;
    if (alive.empty()) {
        v.kind = FinalVerdict::Kind::no_candidate;
    } else if (alive.size() == 1 && alive[0]->status == CandidateStatus::confirmed) {
        v.kind = FinalVerdict::Kind::biholomorphic_to_CPn;
        v.k = alive[0]->k;
    } else {
        v.kind = FinalVerdict::Kind::inconclusive;
    }
    return v;
}

// Integer quadratic A m^2 + B k^2 m + C k^4 + D = 0 satisfied by c2 when the
// Todd genus is 1 with c1 c3 and c4 fixed; derived from the degree-4 Todd
// polynomial rather than written down.
struct C2Quadratic {
    Integer a;
    Integer b;
    Integer c;
    Integer d;
};

C2Quadratic derive_c2_quadratic(const Rational& c1c3, const Rational& c4) {
    const ClassPolyQ td4 = todd_genus().k_polynomial(4);
    const Rational q_c2c2 = td4.coefficient({0, 2});
    const Rational q_c1c1c2 = td4.coefficient({2, 1});
    const Rational q_c1_4 = td4.coefficient({4});
    const Rational q_c1c3 = td4.coefficient({1, 0, 1});
    const Rational q_c4 = td4.coefficient({0, 0, 0, 1});

    Integer scale = denominator_of(q_c2c2);
    for (const Rational& q : {q_c1c1c2, q_c1_4, q_c1c3, q_c4}) {
        scale = boost::multiprecision::lcm(scale, denominator_of(q));
    }
    const Rational s(scale);
    const Rational constant = s * (q_c1c3 * c1c3 + q_c4 * c4 - 1);
    C2Quadratic quad{to_integer(s * q_c2c2), to_integer(s * q_c1c1c2), to_integer(s * q_c1_4),
                     to_integer(constant)};
    if (quad.a != 3 || quad.b != 4 || quad.c != -1 || quad.d != -675) {
        throw std::logic_error("derive_c2_quadratic: unexpected quadratic " + quad.a.str() +
                               "*c2^2 + " + quad.b.str() + "*c1^2*c2 + " + quad.c.str() +
                               "*c1^4 + " + quad.d.str());
    }
    return quad;
}

}  // namespace

std::vector<Integer> ClassificationReport::surviving_k() const {
    std::vector<Integer> out;
    for (const auto& c : candidates) {
        if (c.status != CandidateStatus::eliminated) {
            out.push_back(c.k);
        }
    }
    return out;
}

Rational todd_via_series(unsigned n, const Integer& k) {
    if (n < 1) {
        throw std::invalid_argument("todd_via_series: dimension must be >= 1");
    }
    const unsigned order = 2 * n + 2;
    // g/(e^g - 1) as the inverse of (e^g - 1)/g, then the n+1 power.
    const RationalSeries expm1_over_g =
        (exp_linear(Rational(1), order + 1) - RationalSeries(Rational(1), order + 1))
            .shifted_down(1)
            .truncate(order);
    const RationalSeries core = expm1_over_g.pow(-static_cast<long>(n) - 1);
    const RationalSeries factor = exp_linear(Rational(Integer(k) + n + 1, Integer(2)), order);
    return (factor * core).coefficient(n);
}

Rational todd_via_binomial(unsigned n, const Integer& k) {
    if (n < 1) {
        throw std::invalid_argument("todd_via_binomial: dimension must be >= 1");
    }
    return generalized_binomial(Rational(Integer(k) + n - 1, Integer(2)), n);
}

Rational todd_via_ahat_factorization(unsigned n, const Integer& k) {
    if (n < 1) {
        throw std::invalid_argument("todd_via_ahat_factorization: dimension must be >= 1");
    }
    const auto values = pontrjagin_values(n);
    const Rational half_k = Rational(k, Integer(2));
    Rational total = 0;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        const unsigned r = n - 2 * j;
        const Rational ahat_j = a_hat_genus().k_polynomial(j).evaluate(values);
        total += pow_rational(half_k, r) / Rational(factorial(r)) * ahat_j;
    }
    return total;
}

Rational todd_from_c1_pontrjagin(unsigned n, const Integer& k) {
    const Rational a = todd_via_series(n, k);
    const Rational b = todd_via_binomial(n, k);
    const Rational c = todd_via_ahat_factorization(n, k);
    if (a != b || b != c) {
        throw std::logic_error("todd_from_c1_pontrjagin: route disagreement at n=" +
                               std::to_string(n) + ", k=" + k.str() + ": series " + to_string(a) +
                               ", binomial " + to_string(b) + ", ahat " + to_string(c));
    }
    return a;
}

std::vector<Integer> solve_todd_one(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("solve_todd_one: dimension must be >= 1");
    }
    const Integer n_factorial = factorial(n);
    const auto falling_at = [&](const Integer& k) {
        return falling_factorial(Rational(Integer(k) + n - 1, Integer(2)), n);
    };

    const Rational target(n_factorial);

    std::vector<Integer> sols;
    // Root window: j = (k+n-1)/2 in [-1, n] <=> k in [-n-1, n+1]; everything
    // there is checked directly.
    for (Integer k = -Integer(n) - 1; k <= Integer(n) + 1; ++k) {
        if (falling_at(k) == target) {
            sols.push_back(k);
        }
    }
    // Beyond the window |falling| is strictly increasing in |j|, so the scan
    // stops as soon as it overshoots n!.
    for (Integer k = Integer(n) + 2;; ++k) {
        const Rational f = falling_at(k);
        if (f == target) {
            sols.push_back(k);
        }
        if (boost::multiprecision::abs(f) > target) {
            break;
        }
    }
    for (Integer k = -Integer(n) - 2;; --k) {
        const Rational f = falling_at(k);
        if (f == target) {
            sols.push_back(k);
        }
        if (boost::multiprecision::abs(f) > target) {
            break;
        }
    }
    std::sort(sols.begin(), sols.end());

    // Verify against the closed-form answer and the full three-route Todd
    // computation; a mismatch means the solver itself is broken.
    std::vector<Integer> expected;
    if (n % 2 == 0) {
        expected.push_back(-Integer(n) - 1);
    }
    expected.push_back(Integer(n) + 1);
    if (sols != expected) {
        throw std::logic_error("solve_todd_one: search produced {" + join_k(sols) +
                               "} but the closed form gives {" + join_k(expected) + "}");
    }
    for (const auto& k : sols) {
        if (todd_from_c1_pontrjagin(n, k) != 1) {
            throw std::logic_error("solve_todd_one: k=" + k.str() + " failed re-verification");
        }
    }
    return sols;
}

YauVerdict yau_check(unsigned n, const Integer& k, const Integer& m) {
    if (n < 2) {
        throw std::invalid_argument("yau_check: needs n >= 2");
    }
    const Rational neg_c1(-k);
    const Rational lhs =
        Rational(2 * (Integer(n) + 1), Integer(n)) * pow_rational(neg_c1, n - 2) * Rational(m);
    const Rational rhs = pow_rational(neg_c1, n);
    YauVerdict v{YauStatus::not_applicable, lhs, rhs};
    if (k >= 0) {
        return v;
    }
    if (lhs == rhs) {
        v.status = YauStatus::equality;
    } else if (lhs > rhs) {
        v.status = YauStatus::strict;
    } else {
        v.status = YauStatus::violated;
    }
    return v;
}

FanoIndexCheck fano_index_check(unsigned n, const Integer& k) {
    if (k <= 0) {
        throw std::invalid_argument("fano_index_check: Fano hypothesis needs k > 0, got " +
                                    k.str());
    }
    if (k == Integer(n) + 1) {
        return FanoIndexCheck::equality_forces_CPn;
    }
    if (k > Integer(n) + 1) {
        return FanoIndexCheck::exceeds_bound;
    }
    return FanoIndexCheck::consistent;
}

std::vector<Integer> cp4_candidates(ClassificationMode mode) {
    std::vector<Integer> out;
    for (const Integer d : {1, 2, 5, 10, 25, 50}) {
        if (mode == ClassificationMode::homotopy_equivalence && d % 2 == 0) {
            continue;
        }
        if (d <= 5) {
            out.push_back(d);
        }
        out.push_back(-d);
    }
    return out;
}

std::vector<PrefilteredValue> cp4_prefiltered(ClassificationMode mode) {
    std::vector<PrefilteredValue> out;
    for (const Integer d : {10, 25, 50}) {
        if (mode == ClassificationMode::homotopy_equivalence && d % 2 == 0) {
            continue;
        }
        out.push_back({d, EliminationReason::fano_index_exceeds_bound});
    }
    if (mode == ClassificationMode::homotopy_equivalence) {
        for (const Integer d : {2, 10, 50}) {
            if (d <= 5) {
                out.push_back({d, EliminationReason::parity_filter});
            }
            out.push_back({-d, EliminationReason::parity_filter});
        }
    }
    return out;
}

std::vector<Integer> cp4_solve_c2(const Integer& k) {
    const Integer disc = 7 * pow_integer(k, 4) + 2025;
    Integer s;
    if (!is_perfect_square(disc, &s)) {
        return {};
    }
    std::vector<Integer> roots;
    for (const int sign : {1, -1}) {
        const Integer num = -2 * k * k + sign * s;
        if (num % 3 == 0) {
            const Integer m = num / 3;
            if (std::find(roots.begin(), roots.end(), m) == roots.end()) {
                roots.push_back(m);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<Integer>());
    return roots;
}

ClassificationReport classify_cp4(bool simply_connected, ClassificationMode mode) {
    ClassificationReport rep;
    rep.n = 4;
    rep.mode = mode;
    rep.simply_connected = simply_connected;

    const HodgeTable hodge = infer_hodge(4);
    rep.trace.push_back({"hodge_inference",
                         "ring Betti numbers force h^{p,p} = 1 for 0 <= p <= 4, h^{p,q} = 0 "
                         "otherwise; todd(hodge) = " +
                             to_string(todd_from_hodge(hodge))});

    const Rational c4(euler_characteristic(4));
    const Rational c1c3 = c1cn1_constraint(4, hodge);
    const ChiSecondDerivRelation rel = c1cn1_relation(4);
    rep.trace.push_back(
        {"c1c3_constraint", "chi_y''(-1) = " + to_string(rel.c1cn1_coeff) + "*c1c3 + " +
                                to_string(rel.cn_coeff) + "*c4 with c4 = " + to_string(c4) +
                                " and Hodge side " +
                                to_string(chi_second_derivative_hodge_side(hodge)) +
                                " forces c1c3 = " + to_string(c1c3)});
    if (c1c3 != 50) {
        throw std::logic_error("classify_cp4: engine derived c1c3 = " + to_string(c1c3));
    }

    const C2Quadratic quad = derive_c2_quadratic(c1c3, c4);
    rep.trace.push_back(
        {"c2_quadratic", "todd = 1 forces " + quad.a.str() + "*c2^2 + " + quad.b.str() +
                             "*c1^2*c2 + (" + quad.c.str() + "*c1^4 + " + quad.d.str() +
                             ") = 0, i.e. c2 = (-2*c1^2 +- sqrt(7*c1^4 + 2025))/3"});

    rep.prefiltered = cp4_prefiltered(mode);
    const std::vector<Integer> candidates = cp4_candidates(mode);
    rep.trace.push_back({"candidates", "divisors of 50 within the Fano bound: {" +
                                           join_k(candidates) + "}"});

    for (const Integer& k : candidates) {
        CandidateOutcome o;
        o.k = k;
        const Integer disc = 7 * pow_integer(k, 4) + 2025;
        o.discriminant = disc;
        const std::vector<Integer> roots = cp4_solve_c2(k);
        o.discriminant_square = is_perfect_square(disc);
        if (roots.empty()) {
            o.status = CandidateStatus::eliminated;
            o.reasons.push_back(EliminationReason::c2_not_integral);
            rep.candidates.push_back(std::move(o));
            continue;
        }
        if (roots.size() != 1) {
            throw std::logic_error("classify_cp4: k=" + k.str() + " yields multiple c2 roots");
        }
        const Integer m = roots.front();
        o.c2 = m;

        // Cross-check the Todd genus both through the standard-Pontrjagin
        // routes and through the degree-4 polynomial on the full data.
        const Rational td_routes = todd_from_c1_pontrjagin(4, k);
        const std::map<unsigned, Rational> values{{1, Rational(k)},
                                                  {2, Rational(m)},
                                                  {3, c1c3 / Rational(k)},
                                                  {4, c4}};
        const Rational td_poly = todd_genus().k_polynomial(4).evaluate(values);
        if (td_routes != 1 || td_poly != 1) {
            throw std::logic_error("classify_cp4: Todd cross-check failed for k=" + k.str() +
                                   ": routes " + to_string(td_routes) + ", polynomial " +
                                   to_string(td_poly));
        }
        o.todd = td_poly;

        if (k > 0) {
            const FanoIndexCheck fano = fano_index_check(4, k);
            if (fano == FanoIndexCheck::equality_forces_CPn) {
                o.status = CandidateStatus::confirmed;
            } else if (fano == FanoIndexCheck::exceeds_bound) {
                o.status = CandidateStatus::eliminated;
                o.reasons.push_back(EliminationReason::fano_index_exceeds_bound);
            } else {
                o.status = CandidateStatus::surviving;
            }
        } else {
            o.yau = yau_check(4, k, m);
            switch (o.yau->status) {
                case YauStatus::equality:
                    if (simply_connected) {
                        o.status = CandidateStatus::eliminated;
                        o.reasons.push_back(EliminationReason::yau_equality_vs_simply_connected);
                    } else {
                        o.status = CandidateStatus::surviving;
                    }
                    break;
                case YauStatus::violated:
                    o.status = CandidateStatus::eliminated;
                    o.reasons.push_back(EliminationReason::yau_violated);
                    break;
                default:
                    o.status = CandidateStatus::surviving;
                    break;
            }
        }
        rep.candidates.push_back(std::move(o));
    }

    rep.final_verdict = decide_verdict(rep.candidates);
    rep.trace.push_back({"verdict", to_string(rep.final_verdict.kind) +
                                        (rep.final_verdict.k.has_value()
                                             ? " with k = " + rep.final_verdict.k->str()
                                             : ", survivors {" + join_k(rep.surviving_k()) + "}")});
    return rep;
}

ClassificationReport classify_general(unsigned n, bool simply_connected) {
    if (n < 1) {
        throw std::invalid_argument("classify_general: dimension must be >= 1");
    }
    ClassificationReport rep;
    rep.n = n;
    rep.mode = ClassificationMode::cohomology_ring;
    rep.simply_connected = simply_connected;

    const HodgeTable hodge = infer_hodge(n);
    rep.trace.push_back({"hodge_inference",
                         "ring Betti numbers force h^{p,p} = 1 for 0 <= p <= " + std::to_string(n) +
                             ", h^{p,q} = 0 otherwise; todd(hodge) = " +
                             to_string(todd_from_hodge(hodge))});

    const std::vector<Integer> sols = solve_todd_one(n);
    rep.trace.push_back({"todd_solver", "todd(n, k) = 1 exactly for k in {" + join_k(sols) +
                                            "}; monotone cutoffs bound the search window"});
    for (Integer k = -Integer(n) - 2; k <= Integer(n) + 2; ++k) {
        if (std::find(sols.begin(), sols.end(), k) == sols.end()) {
            rep.prefiltered.push_back({k, EliminationReason::todd_not_one});
        }
    }

    const Integer p1 = Integer(n) + 1;  // standard (1+g^2)^{n+1}
    for (const Integer& k : sols) {
        CandidateOutcome o;
        o.k = k;
        o.todd = Rational(1);
        if (k > 0) {
            const FanoIndexCheck fano = fano_index_check(n, k);
            o.status = (fano == FanoIndexCheck::equality_forces_CPn) ? CandidateStatus::confirmed
                                                                     : CandidateStatus::surviving;
            if (fano == FanoIndexCheck::equality_forces_CPn) {
                rep.trace.push_back(
                    {"fano_index", "k = " + k.str() + " attains the Fano bound " +
                                       (p1).str() + ", forcing CP^" + std::to_string(n)});
            }
        } else {
            // c2 is pinned by p1 = c1^2 - 2 c2 on standard Pontrjagin data.
            const Integer m = to_integer(Rational(k * k - p1, Integer(2)));
            o.c2 = m;
            o.yau = yau_check(n, k, m);
            if (o.yau->status == YauStatus::equality && simply_connected) {
                o.status = CandidateStatus::eliminated;
                o.reasons.push_back(EliminationReason::yau_equality_vs_simply_connected);
                rep.trace.push_back({"yau_elimination",
                                     "k = " + k.str() + " gives c2 = " + m.str() +
                                         " and the equality case; simple connectivity rules it out"});
            } else {
                o.status = CandidateStatus::surviving;
            }
        }
        rep.candidates.push_back(std::move(o));
    }

    rep.final_verdict = decide_verdict(rep.candidates);
    rep.trace.push_back({"verdict", to_string(rep.final_verdict.kind) +
                                        (rep.final_verdict.k.has_value()
                                             ? " with k = " + rep.final_verdict.k->str()
                                             : ", survivors {" + join_k(rep.surviving_k()) + "}")});
    return rep;
}

std::string to_string(YauStatus s) {
    switch (s) {
        case YauStatus::not_applicable: return "not_applicable";
        case YauStatus::strict: return "strict";
        case YauStatus::equality: return "equality";
        case YauStatus::violated: return "violated";
    }
    return "?";
}

std::string to_string(EliminationReason r) {
    switch (r) {
        case EliminationReason::todd_not_one: return "todd_not_one";
        case EliminationReason::c2_not_integral: return "c2_not_integral";
        case EliminationReason::yau_violated: return "yau_violated";
        case EliminationReason::yau_equality_vs_simply_connected:
            return "yau_equality_vs_simply_connected";
        case EliminationReason::fano_index_exceeds_bound: return "fano_index_exceeds_bound";
        case EliminationReason::parity_filter: return "parity_filter";
    }
    return "?";
}

std::string to_string(ClassificationMode m) {
    return m == ClassificationMode::cohomology_ring ? "cohomology_ring" : "homotopy_equivalence";
}

std::string to_string(FanoIndexCheck c) {
    switch (c) {
        case FanoIndexCheck::consistent: return "consistent";
        case FanoIndexCheck::equality_forces_CPn: return "equality_forces_CPn";
        case FanoIndexCheck::exceeds_bound: return "exceeds_bound";
    }
    return "?";
}

std::string to_string(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::eliminated: return "eliminated";
        case CandidateStatus::surviving: return "surviving";
        case CandidateStatus::confirmed: return "confirmed";
    }
    return "?";
}

std::string to_string(FinalVerdict::Kind k) {
    switch (k) {
        case FinalVerdict::Kind::biholomorphic_to_CPn: return "biholomorphic_to_CPn";
        case FinalVerdict::Kind::inconclusive: return "inconclusive";
        case FinalVerdict::Kind::no_candidate: return "no_candidate";
    }
    return "?";
}

}  // namespace cpngenus
