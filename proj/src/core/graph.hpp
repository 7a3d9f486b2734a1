#pragma once

#include "core/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace dominion {

// Simple undirected graph on at most 128 vertices, stored as one neighbor
// bitset per vertex. Treated as immutable once a generator or parser has
// produced it; const graphs are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::uint64_t edge_count() const;
    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const; // open neighborhood
    VertexSet vertices() const { return VertexSet::full(n_); }

    // construction only; rejects loops and out-of-range endpoints
    void add_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g); // graphs on 0 or 1 vertices count as connected

// Family generators. Vertices are 0-based everywhere; textbook labels
// v_1..v_n correspond to indices 0..n-1 (shift by one).
Graph make_path(int n);     // n >= 1; edges {i, i+1}
Graph make_cycle(int n);    // n >= 3
Graph make_complete(int n); // n >= 1
Graph make_star(int leaves); // center 0, leaves 1..leaves; leaves >= 1

// cycle 0..n-1 with a pendant leaf n+i attached to each cycle vertex i;
// 2n vertices total, n >= 3
Graph make_sun(int n);

// blocks of sizes parts[0..k-1] laid out consecutively; edges exactly
// between distinct blocks; k >= 2, every part >= 1
Graph make_complete_multipartite(const std::vector<int>& parts);
int multipartite_block_of(const std::vector<int>& parts, int v);

// disjoint union plus all cross edges; b's vertices shift up by a.vertex_count()
Graph join(const Graph& a, const Graph& b);

} // namespace dominion
