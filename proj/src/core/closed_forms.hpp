#pragma once

#include "core/engine.hpp"
#include "core/graph.hpp"
#include "core/u128.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dominion {

enum class ProofStatus { proven, conjectured };

// A closed-form value together with its proof status and the name of the
// result it came from. Only the cycle formulas for n not divisible by 3 are
// conjectured; everything else is proven.
struct FamilyValue {
    std::optional<int> gamma;
    u128 zeta = 0;
    ProofStatus status = ProofStatus::proven;
    std::string source;
};

FamilyValue path_dominion(int n); // n >= 2
FamilyValue cycle_dominion(int n); // n >= 3; conjectured when n % 3 != 0
FamilyValue sun_dominion(int n); // n >= 3; the graph has 2n vertices

// gamma of a join given the operand gammas (order-insensitive)
int join_gamma(int gamma1, int gamma2);

// zeta of g1 v g2 from the operands' reports; both operands must be connected
FamilyValue join_dominion(const Graph& g1, const GammaReport& r1, const Graph& g2,
                          const GammaReport& r2);

// zeta of the r-fold join of a graph with gamma = 1
u128 iterated_join_dominion(int gamma, u128 zeta, int r);

// parts sorted ascending, k >= 2
FamilyValue multipartite_dominion(const std::vector<int>& parts);

// inclusive range {1, C(n, gamma)} that every dominion value must satisfy
std::pair<u128, u128> dominion_bounds(int n, int gamma);

// valid under the hypothesis 2 <= gamma(g1) <= gamma(g2)
u128 join_lower_bound(int n1, int n2);

} // namespace dominion
