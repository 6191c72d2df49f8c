#pragma once

#include "cpngenus/param_poly.hpp"
#include "cpngenus/rational.hpp"

#include <vector>

namespace cpngenus {

/// Hodge numbers h^{p,q} of an n-dimensional compact Kaehler manifold,
/// 0 <= p, q <= n. Construction enforces the symmetry h^{p,q} = h^{q,p};
/// Betti numbers are the antidiagonal sums.
class HodgeTable {
public:
    /// All-zero table.
    explicit HodgeTable(unsigned n);

    /// Table from rows; rows.size() must be n+1 squares. Throws on asymmetry.
    HodgeTable(unsigned n, std::vector<std::vector<Integer>> rows);

    unsigned dimension() const { return n_; }

    const Integer& h(unsigned p, unsigned q) const;
    void set_h(unsigned p, unsigned q, const Integer& value);  // sets both (p,q) and (q,p)

    /// b_i = sum_{p+q=i} h^{p,q}.
    Integer betti(unsigned i) const;

    /// Euler number: alternating sum of Betti numbers.
    Integer euler_number() const;

    /// chi(Omega^p) = sum_q (-1)^q h^{p,q}.
    Integer chi_p(unsigned p) const;

    /// chi_y as a polynomial: sum_p chi(Omega^p) y^p.
    ParamPoly chi_y_polynomial() const;

    bool operator==(const HodgeTable& o) const { return n_ == o.n_ && h_ == o.h_; }

private:
    unsigned n_;
    std::vector<std::vector<Integer>> h_;
};

/// Hodge table forced by the CP^n cohomology ring on a Kaehler manifold:
/// Betti numbers (1 + (-1)^i)/2 pin h^{p,p} = 1 and everything else to 0.
HodgeTable infer_hodge(unsigned n);

/// Todd genus as the alternating sum over the first row of the table.
Rational todd_from_hodge(const HodgeTable& hodge);

}  // namespace cpngenus
