#pragma once

#include "core/graph.hpp"
#include "core/u128.hpp"
#include "core/vertex_set.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

namespace dominion {

// Search controls shared by the exact operations. max_n guards against
// accidentally launching an exponential search on a huge input; 0 disables
// the guard (the 128-vertex capacity still applies). A deadline, when set,
// aborts the search with a timeout error once passed.
struct SearchOptions {
    bool materialize = false;
    int max_n = 40;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GammaReport {
    int gamma = 0;
    u128 zeta = 0;
    std::optional<std::vector<VertexSet>> sets; // sorted, present when materialized
};

VertexSet closed_neighborhood(const Graph& g, int v);
bool is_dominating(const Graph& g, const VertexSet& s);

// Exact minimum dominating set size via branch and bound: branch on the
// lowest-index uncovered vertex, candidates are its closed neighborhood in
// increasing index order; prune on size + ceil(uncovered / max|N[v]|) >= best;
// initial upper bound from greedy max coverage. n = 0 returns 0.
int domination_number(const Graph& g, const SearchOptions& opts = {});

// gamma plus the exact count of minimum dominating sets (zeta), counted in
// checked 128-bit arithmetic. Sets are materialized only when requested.
GammaReport dominion(const Graph& g, const SearchOptions& opts = {});

// Visit every minimum dominating set exactly once. Visit order is the raw
// search order, not sorted; return false from the callback to stop early.
void for_each_gamma_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                        const SearchOptions& opts = {});

// All minimum dominating sets in increasing lexicographic bit-mask order
// (sets compared by their lowest differing vertex).
std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, const SearchOptions& opts = {});

} // namespace dominion
