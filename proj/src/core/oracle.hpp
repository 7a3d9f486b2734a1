#pragma once

#include "core/engine.hpp"
#include "core/graph.hpp"

namespace dominion {

// Exhaustive reference implementation, deliberately independent of the
// branch-and-bound engine: walks all 2^n subsets in cardinality-then-mask
// order with its own cover table. Hard-capped at n <= 24.
GammaReport brute_force_dominion(const Graph& g, bool materialize = false);

inline constexpr int kOracleMaxVertices = 24;

} // namespace dominion
