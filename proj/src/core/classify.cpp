#include "core/classify.hpp"

#include "core/error.hpp"

namespace dominion {

ClassFlags classify(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) fail(Errc::not_dominating, "set does not dominate the graph");

    ClassFlags flags;
    const int size = s.count();

    // perfect: each outside vertex sees exactly one member of s
    flags.perfect = true;
    for (int v : g.vertices().minus(s).members()) {
        if ((g.neighbors(v) & s).count() != 1) {
            flags.perfect = false;
            break;
        }
    }

    // remaining flags are statements about the subgraph induced by s
    bool any_edge = false;
    bool any_isolated = false;
    bool all_pairs = true;
    for (int v : s.members()) {
        const VertexSet inside = g.neighbors(v) & s;
        const int deg = inside.count();
        if (deg > 0) any_edge = true;
        if (deg == 0) any_isolated = true;
        if (deg != size - 1) all_pairs = false;
    }
    flags.total = size > 0 && !any_isolated;
    flags.independent = !any_edge;
    flags.clique = all_pairs; // size <= 1 vacuously complete

    if (size <= 1) {
        flags.connected = true;
    } else {
        VertexSet seen = VertexSet::single(s.first());
        VertexSet frontier = seen;
        while (!frontier.none()) {
            VertexSet next{};
            for (int v : frontier.members()) next |= g.neighbors(v) & s;
            next = next.minus(seen);
            seen |= next;
            frontier = next;
        }
        flags.connected = seen == s;
    }
    return flags;
}

Census census(const Graph& g, const SearchOptions& opts) {
    Census out;
    for_each_gamma_set(
        g,
        [&](const VertexSet& s) {
            const ClassFlags f = classify(g, s);
            ++out.total_gamma_sets;
            if (f.perfect) ++out.perfect_count;
            if (f.connected) ++out.connected_count;
            if (f.total) ++out.total_count;
            if (f.independent) ++out.independent_count;
            if (f.clique) ++out.clique_count;
            if (!f.perfect && !f.connected && !f.total && !f.independent && !f.clique)
                ++out.none_count;
            return true;
        },
        opts);
    return out;
}

} // namespace dominion
