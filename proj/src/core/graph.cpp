#include "core/graph.hpp"

#include "core/error.hpp"

#include <string>

namespace dominion {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        fail(Errc::capacity, "vertex count " + std::to_string(n) + " outside supported range 0.." +
                                 std::to_string(kMaxVertices));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (const VertexSet& row : adj_) twice += static_cast<std::uint64_t>(row.count());
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

VertexSet Graph::neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        fail(Errc::invalid_argument, "edge endpoint out of range: " + std::to_string(u) + " " +
                                         std::to_string(v) + " with n=" + std::to_string(n_));
    if (u == v) fail(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.none()) {
        VertexSet next{};
        for (int v : frontier.members()) next |= g.neighbors(v);
        next = next.minus(seen);
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices();
}

Graph make_path(int n) {
    if (n < 1) fail(Errc::invalid_argument, "path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) fail(Errc::invalid_argument, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) fail(Errc::invalid_argument, "complete graph needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 1) fail(Errc::invalid_argument, "star needs at least 1 leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph make_sun(int n) {
    if (n < 3) fail(Errc::invalid_argument, "sun needs a cycle of at least 3 vertices");
    if (2 * n > kMaxVertices)
        fail(Errc::capacity, "sun on cycle length " + std::to_string(n) + " exceeds " +
                                 std::to_string(kMaxVertices) + " vertices");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) fail(Errc::invalid_argument, "complete multipartite needs at least 2 parts");
    long long total = 0;
    for (int m : parts) {
        if (m < 1) fail(Errc::invalid_argument, "every part must have at least 1 vertex");
        total += m;
    }
    if (total > kMaxVertices)
        fail(Errc::capacity, "complete multipartite on " + std::to_string(total) +
                                 " vertices exceeds " + std::to_string(kMaxVertices));
    Graph g(static_cast<int>(total));
    // consecutive blocks; connect every pair of vertices in distinct blocks
    int a_start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int b_start = a_start + parts[i];
        int rest = b_start;
        for (std::size_t j = i + 1; j < parts.size(); ++j) rest += parts[j];
        for (int u = a_start; u < b_start; ++u)
            for (int v = b_start; v < rest; ++v) g.add_edge(u, v);
        a_start = b_start;
    }
    return g;
}

int multipartite_block_of(const std::vector<int>& parts, int v) {
    int start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        start += parts[i];
        if (v < start) return static_cast<int>(i);
    }
    fail(Errc::invalid_argument, "vertex " + std::to_string(v) + " outside the block layout");
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    if (na + nb > kMaxVertices)
        fail(Errc::capacity, "join on " + std::to_string(na + nb) + " vertices exceeds " +
                                 std::to_string(kMaxVertices));
    Graph g(na + nb);
    for (int u = 0; u < na; ++u)
        for (int v : a.neighbors(u).members())
            if (u < v) g.add_edge(u, v);
    for (int u = 0; u < nb; ++u)
        for (int v : b.neighbors(u).members())
            if (u < v) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

} // namespace dominion
