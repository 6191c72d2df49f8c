#include "cpngenus/genus.hpp"

namespace cpngenus {

namespace {

// Headroom: the built-in singletons serve every consumer in this artifact
// (class degrees up to 8 in Chern variables, up to 6 in Pontrjagin ones).
constexpr unsigned kBuiltinOrder = 26;

}  // namespace

RationalSeries todd_series(unsigned order) {
    // (1 - e^{-x}) / x, built with one order of headroom so the shift keeps
    // the top coefficient, then inverted.
    const RationalSeries den =
        (RationalSeries(Rational(1), order + 1) - exp_linear(Rational(-1), order + 1))
            .shifted_down(1)
            .truncate(order);
    return RationalSeries(Rational(1), order) / den;
}

RationalSeries a_hat_series(unsigned order) {
    const RationalSeries den =
        (exp_linear(Rational(1, 2), order + 1) - exp_linear(Rational(-1, 2), order + 1))
            .shifted_down(1)
            .truncate(order);
    return RationalSeries(Rational(1), order) / den;
}

RationalSeries l_series(unsigned order) {
    const RationalSeries half(Rational(1, 2), order + 1);
    const RationalSeries sinh_over_x =
        ((exp_linear(Rational(1), order + 1) - exp_linear(Rational(-1), order + 1)) * half)
            .shifted_down(1)
            .truncate(order);
    const RationalSeries cosh =
        ((exp_linear(Rational(1), order + 1) + exp_linear(Rational(-1), order + 1)) * half)
            .truncate(order);
    return cosh / sinh_over_x;
}

ParamSeries chi_y_series(unsigned order) {
    // Substitute x -> (1+y) x into the Todd series and subtract y x. The
    // result specializes to the Todd series at y = 0, to x/tanh(x) at y = 1
    // and to 1 + x at y = -1.
    const RationalSeries todd = todd_series(order);
    std::vector<ParamPoly> lifted(order + 1);
    for (unsigned d = 0; d <= order; ++d) {
        lifted[d] = ParamPoly(todd.coefficient(d));
    }
    const ParamPoly one_plus_y = ParamPoly(Rational(1)) + ParamPoly::variable();
    ParamSeries inner(order);
    inner.set_coefficient(1, one_plus_y);
    ParamSeries result = ParamSeries(std::move(lifted)).compose(inner);
    result.set_coefficient(1, result.coefficient(1) - ParamPoly::variable());
    return result;
}

const GenusQ& todd_genus() {
    static const GenusQ g("todd", todd_series(kBuiltinOrder), VarKind::chern);
    return g;
}

const GenusQ& a_hat_genus() {
    static const GenusQ g("ahat", a_hat_series(kBuiltinOrder), VarKind::pontrjagin);
    return g;
}

const GenusQ& l_genus() {
    static const GenusQ g("L", l_series(kBuiltinOrder), VarKind::pontrjagin);
    return g;
}

const GenusY& chi_y_genus_object() {
    static const GenusY g("chi-y", chi_y_series(kBuiltinOrder), VarKind::chern);
    return g;
}

ClassPolyY chi_y_genus(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("chi_y_genus: dimension must be >= 1");
    }
    if (n <= chi_y_genus_object().max_degree()) {
        return chi_y_genus_object().k_polynomial(n);
    }
    const GenusY fresh("chi-y", chi_y_series(2 * n + 2), VarKind::chern);
    return fresh.k_polynomial(n);
}

ChiSecondDerivRelation c1cn1_relation(unsigned n) {
    if (n < 2) {
        throw std::domain_error(
            "c1cn1_relation: for n = 1 the monomials c1*c0 and c1 coincide, the relation "
            "degenerates");
    }
    const ClassPolyQ d2 = second_y_derivative_at(chi_y_genus(n), Rational(-1));

    Exponents e_c1cn1(n - 1, 0);
    e_c1cn1[0] += 1;
    e_c1cn1[n - 2] += 1;  // c1 * c_{n-1}; for n = 2 this is c1^2
    Exponents e_cn(n, 0);
    e_cn[n - 1] = 1;

    for (const auto& [e, c] : d2.terms()) {
        if (e != e_c1cn1 && e != e_cn) {
            throw std::logic_error("c1cn1_relation: chi_y''(-1) has unexpected support on " +
                                   ClassPolyQ::monomial(VarKind::chern, e, c).to_string());
        }
    }
    const Rational alpha = d2.coefficient(e_c1cn1);
    if (alpha == 0) {
        throw std::domain_error("c1cn1_relation: degenerate relation, c1*c_{n-1} coefficient is 0");
    }
    return ChiSecondDerivRelation{alpha, d2.coefficient(e_cn)};
}

Rational chi_second_derivative_hodge_side(const HodgeTable& hodge) {
    Rational acc = 0;
    for (unsigned p = 2; p <= hodge.dimension(); ++p) {
        const Rational term = Rational(p) * Rational(p - 1) * Rational(hodge.chi_p(p));
        acc += (p % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational c1cn1_constraint(unsigned n, const HodgeTable& hodge) {
    if (hodge.dimension() != n) {
        throw std::invalid_argument("c1cn1_constraint: Hodge table dimension mismatch");
    }
    const Rational euler(hodge.euler_number());
    if (n == 1) {
        // c1 c_0 = c1 = c_n, already pinned by the Euler number.
        return euler;
    }
    const ChiSecondDerivRelation rel = c1cn1_relation(n);
    const Rational hodge_side = chi_second_derivative_hodge_side(hodge);
    return (hodge_side - rel.cn_coeff * euler) / rel.c1cn1_coeff;
}

}  // namespace cpngenus
