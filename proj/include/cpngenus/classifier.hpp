#pragma once

#include "cpngenus/genus.hpp"
#include "cpngenus/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpngenus {

enum class YauStatus { not_applicable, strict, equality, violated };

/// Outcome of the Chern-number inequality for c1 < 0:
///   (2(n+1)/n) (-c1)^{n-2} c2 >= (-c1)^n,
/// with equality exactly for quotients of the unit ball (never
/// simply-connected). Both sides are kept for reporting.
struct YauVerdict {
    YauStatus status;
    Rational lhs;
    Rational rhs;
};

enum class EliminationReason {
    todd_not_one,
    c2_not_integral,
    yau_violated,
    yau_equality_vs_simply_connected,
    fano_index_exceeds_bound,
    parity_filter,
};

enum class ClassificationMode { cohomology_ring, homotopy_equivalence };

enum class FanoIndexCheck { consistent, equality_forces_CPn, exceeds_bound };

enum class CandidateStatus { eliminated, surviving, confirmed };

struct CandidateOutcome {
    Integer k;
    CandidateStatus status = CandidateStatus::surviving;
    std::vector<EliminationReason> reasons;        // nonempty iff eliminated
    std::optional<Integer> discriminant;           // 7 k^4 + 2025 (CP^4 pipeline)
    std::optional<bool> discriminant_square;
    std::optional<Integer> c2;
    std::optional<YauVerdict> yau;
    std::optional<Rational> todd;                  // cross-checked Todd genus
};

/// A value removed before candidate evaluation (mode parity filter, Fano
/// bound on positive multipliers).
struct PrefilteredValue {
    Integer k;
    EliminationReason reason;
};

struct FinalVerdict {
    enum class Kind { biholomorphic_to_CPn, inconclusive, no_candidate };
    Kind kind = Kind::no_candidate;
    std::optional<Integer> k;
};

struct TraceLine {
    std::string stage;
    std::string detail;
};

struct ClassificationReport {
    unsigned n = 0;
    ClassificationMode mode = ClassificationMode::cohomology_ring;
    bool simply_connected = false;
    std::vector<TraceLine> trace;
    std::vector<PrefilteredValue> prefiltered;
    std::vector<CandidateOutcome> candidates;
    FinalVerdict final_verdict;

    std::vector<Integer> surviving_k() const;
};

/// Todd genus of a model with c1 = k g and the standard Pontrjagin classes
/// (1+g^2)^{n+1}, computed along one of three routes that the displayed
/// computation makes equal. Exposed separately so agreement is testable.
Rational todd_via_series(unsigned n, const Integer& k);
Rational todd_via_binomial(unsigned n, const Integer& k);
Rational todd_via_ahat_factorization(unsigned n, const Integer& k);

/// All three routes, asserted pairwise equal; disagreement is an internal
/// bug and throws std::logic_error.
Rational todd_from_c1_pontrjagin(unsigned n, const Integer& k);

/// All integers k with Todd genus 1 on standard Pontrjagin data. Bounded
/// outward search with monotonicity cutoffs (|falling factorial| grows
/// strictly beyond the root window), verified against the closed form
/// {n+1} for odd n and {n+1, -(n+1)} for even n.
std::vector<Integer> solve_todd_one(unsigned n);

/// Exact evaluation of both sides of the inequality for c1 = k g, c2 = m g^2.
/// k >= 0 means the hypothesis c1 < 0 fails: not_applicable.
YauVerdict yau_check(unsigned n, const Integer& k, const Integer& m);

/// The Fano index of c1 = k g (k > 0) on this ring is k; at most n+1, with
/// equality exactly for CP^n. Throws std::invalid_argument for k <= 0.
FanoIndexCheck fano_index_check(unsigned n, const Integer& k);

/// Candidate c1 multipliers for the CP^4 pipeline: divisors of c1 c3 = 50
/// (both signs), positive ones capped by the Fano bound k <= 5; homotopy
/// mode keeps odd k only. Ordered by |k| with the positive sign first.
std::vector<Integer> cp4_candidates(ClassificationMode mode);

/// Prefiltered values that never enter the candidate list, with reasons.
std::vector<PrefilteredValue> cp4_prefiltered(ClassificationMode mode);

/// Integral roots m of 3 m^2 + 4 k^2 m + (-k^4 - 675) = 0, i.e.
/// m = (-2 k^2 +- s)/3 where s^2 = 7 k^4 + 2025 must be a perfect square
/// and the numerator divisible by 3. At most one root arises for divisors
/// of 50; the vector is descending.
std::vector<Integer> cp4_solve_c2(const Integer& k);

/// The full pipeline for a simply-connected (or not) compact Kaehler
/// manifold with the integral cohomology ring of CP^4.
ClassificationReport classify_cp4(bool simply_connected, ClassificationMode mode);

/// The pipeline for standard Pontrjagin classes in any dimension: Todd-genus
/// solutions, then the equality case of the Chern-number inequality against
/// simple connectivity for even n.
ClassificationReport classify_general(unsigned n, bool simply_connected);

std::string to_string(YauStatus s);
std::string to_string(EliminationReason r);
std::string to_string(ClassificationMode m);
std::string to_string(FanoIndexCheck c);
std::string to_string(CandidateStatus s);
std::string to_string(FinalVerdict::Kind k);

}  // namespace cpngenus
