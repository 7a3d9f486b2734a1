#pragma once

#include "core/engine.hpp"
#include "core/graph.hpp"
#include "core/u128.hpp"
#include "core/vertex_set.hpp"

namespace dominion {

// Properties of one minimum dominating set S, all judged on the subgraph
// induced by S (except perfect, which looks at the vertices outside S).
// Singleton conventions: connected, independent and clique hold for a
// one-vertex set; total does not (the vertex is isolated in the induced
// subgraph).
struct ClassFlags {
    bool perfect = false;     // every vertex outside S has exactly one neighbor in S
    bool connected = false;   // induced subgraph connected
    bool total = false;       // induced subgraph has no isolated vertex
    bool independent = false; // induced subgraph has no edge
    bool clique = false;      // induced subgraph complete
};

// Re-checks that s dominates g and errors otherwise.
ClassFlags classify(const Graph& g, const VertexSet& s);

struct Census {
    u128 total_gamma_sets = 0;
    u128 perfect_count = 0;
    u128 connected_count = 0;
    u128 total_count = 0;
    u128 independent_count = 0;
    u128 clique_count = 0;
    u128 none_count = 0; // sets with all five flags false
};

// Classifies every minimum dominating set of g.
Census census(const Graph& g, const SearchOptions& opts = {});

} // namespace dominion
