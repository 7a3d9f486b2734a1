#include "core/engine.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <string>

namespace dominion {

VertexSet closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        fail(Errc::invalid_argument,
             "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.vertex_count()));
    VertexSet s = g.neighbors(v);
    s.set(v);
    return s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered{};
    for (int v : s.members()) {
        covered |= g.neighbors(v);
        covered.set(v);
    }
    return covered == g.vertices();
}

namespace {

struct SearchContext {
    const Graph& g;
    int n;
    VertexSet all;
    std::vector<VertexSet> cover;  // closed neighborhoods
    int max_cover = 1;             // max |N[v]|, for the lower bound
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t nodes = 0;

    explicit SearchContext(const Graph& graph, const SearchOptions& opts)
        : g(graph), n(graph.vertex_count()), all(graph.vertices()), deadline(opts.deadline) {
        if (opts.max_n > 0 && n > opts.max_n)
            fail(Errc::capacity, "graph on " + std::to_string(n) +
                                     " vertices exceeds the search limit " +
                                     std::to_string(opts.max_n) + "; raise the limit to proceed");
        cover.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            cover.push_back(closed_neighborhood(g, v));
            max_cover = std::max(max_cover, cover.back().count());
        }
    }

    // polled every 4096 nodes so the deadline check stays off the hot path
    void tick() {
        if (((++nodes) & 4095u) == 0 && deadline &&
            std::chrono::steady_clock::now() > *deadline)
            fail(Errc::timeout, "search budget exhausted after " + std::to_string(nodes) + " nodes");
    }

    int lower_bound(const VertexSet& covered) const {
        const int uncovered = n - covered.count();
        return (uncovered + max_cover - 1) / max_cover;
    }

    int greedy_upper_bound() const {
        VertexSet covered{};
        int size = 0;
        while (!(covered == all)) {
            int best_v = -1;
            int best_gain = -1;
            for (int v = 0; v < n; ++v) {
                const int gain = cover[static_cast<std::size_t>(v)].minus(covered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            covered |= cover[static_cast<std::size_t>(best_v)];
            ++size;
        }
        return size;
    }

    void optimize(int size, const VertexSet& covered, VertexSet forbidden, int& best) {
        tick();
        if (covered == all) {
            best = std::min(best, size);
            return;
        }
        if (size + lower_bound(covered) >= best) return;
        const int u = first_missing(covered, n);
        for (int c : cover[static_cast<std::size_t>(u)].minus(forbidden).members()) {
            optimize(size + 1, covered | cover[static_cast<std::size_t>(c)], forbidden, best);
            forbidden.set(c); // later branches must omit c: each set is reached once
        }
    }

    // exact minimum, branch and bound seeded by the greedy upper bound (the
    // greedy set is itself dominating, so `best` is always achievable)
    int gamma() {
        int best = greedy_upper_bound();
        optimize(0, VertexSet{}, VertexSet{}, best);
        return best;
    }

    // visit every dominating set of size exactly `target`, each exactly once;
    // the forbidden set makes sibling branches disjoint
    bool enumerate(const VertexSet& chosen, int size, const VertexSet& covered,
                   VertexSet forbidden, int target,
                   const std::function<bool(const VertexSet&)>& visit) {
        tick();
        if (covered == all) return visit(chosen);
        if (size + lower_bound(covered) > target) return true;
        const int u = first_missing(covered, n);
        for (int c : cover[static_cast<std::size_t>(u)].minus(forbidden).members()) {
            VertexSet next = chosen;
            next.set(c);
            if (!enumerate(next, size + 1, covered | cover[static_cast<std::size_t>(c)], forbidden,
                           target, visit))
                return false;
            forbidden.set(c);
        }
        return true;
    }
};

} // namespace

int domination_number(const Graph& g, const SearchOptions& opts) {
    if (g.vertex_count() == 0) return 0;
    SearchContext ctx(g, opts);
    return ctx.gamma();
}

void for_each_gamma_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                        const SearchOptions& opts) {
    if (g.vertex_count() == 0) {
        visit(VertexSet{}); // the empty set dominates the empty graph
        return;
    }
    SearchContext ctx(g, opts);
    const int target = ctx.gamma();
    ctx.enumerate(VertexSet{}, 0, VertexSet{}, VertexSet{}, target, visit);
}

GammaReport dominion(const Graph& g, const SearchOptions& opts) {
    GammaReport report;
    if (opts.materialize) report.sets.emplace();
    const auto count_one = [&](const VertexSet& s) {
        u128 next = 0;
        if (!checked_add(report.zeta, 1, next))
            fail(Errc::overflow, "minimum dominating set count exceeds 128 bits");
        report.zeta = next;
        if (report.sets) report.sets->push_back(s);
        return true;
    };
    if (g.vertex_count() == 0) {
        count_one(VertexSet{});
        return report;
    }
    SearchContext ctx(g, opts);
    report.gamma = ctx.gamma();
    ctx.enumerate(VertexSet{}, 0, VertexSet{}, VertexSet{}, report.gamma, count_one);
    if (report.sets) std::sort(report.sets->begin(), report.sets->end(), set_lex_less);
    return report;
}

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, const SearchOptions& opts) {
    SearchOptions with_sets = opts;
    with_sets.materialize = true;
    return *dominion(g, with_sets).sets;
}

} // namespace dominion
