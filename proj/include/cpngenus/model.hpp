#pragma once

#include "cpngenus/hodge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpngenus {

/// Binomial Pontrjagin multipliers of (1+g^2)^{n+1}: q_i = C(n+1, i) for
/// i = 1..floor(n/2), everything above truncated by g^{n+1} = 0.
std::vector<Integer> standard_pontrjagin(unsigned n);

/// Chern multipliers of (1+g)^{n+1}: a_i = C(n+1, i) for i = 1..n.
std::vector<Integer> standard_chern(unsigned n);

/// p_i = c_i^2 - 2 c_{i-1} c_{i+1} + 2 c_{i-2} c_{i+2} - ... (alternating
/// convolution with c_0 = 1), for i = 1..floor(n/2); higher terms vanish
/// mod g^{n+1}.
std::vector<Integer> chern_to_pontrjagin(const std::vector<Integer>& chern, unsigned n);

/// Euler number of the CP^n cohomology ring: n + 1.
Integer euler_characteristic(unsigned n);

/// Cohomological model of a compact Kaehler manifold with
/// H*(M;Z) = Z[g]/(g^{n+1}) and \int g^n = 1; g is the positive generator,
/// c_1 = k g, p_i = q_i g^{2i}, optionally a full Chern vector c_i = a_i g^i.
struct CPnModel {
    unsigned n = 1;
    Integer k = 0;
    std::vector<Integer> pontrjagin;
    std::optional<std::vector<Integer>> chern;
    bool simply_connected = false;
    bool kaehler = true;
    HodgeTable hodge;

    /// Validating constructor; throws std::invalid_argument when a supplied
    /// Chern vector does not induce the stated Pontrjagin classes or does
    /// not start with k.
    CPnModel(unsigned n, Integer k, std::vector<Integer> pontrjagin,
             std::optional<std::vector<Integer>> chern, bool simply_connected, bool kaehler,
             HodgeTable hodge);

    /// The standard model of CP^n itself.
    static CPnModel standard(unsigned n, bool simply_connected = true);

    bool operator==(const CPnModel& o) const;
};

/// JSON record with every multiplier as a decimal string, immune to any
/// consumer's integer-width limits.
std::string model_to_json(const CPnModel& model);
CPnModel model_from_json(const std::string& json_text);

}  // namespace cpngenus
