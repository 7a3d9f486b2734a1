#include "doctest.h"

#include "core/classify.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/vertex_set.hpp"

using namespace dominion;

namespace {

VertexSet vs(std::initializer_list<int> members) {
    VertexSet s{};
    for (int v : members) s.set(v);
    return s;
}

} // namespace

TEST_CASE("classification of individual dominating sets") {
    const Graph p4 = make_path(4);

    const ClassFlags mid = classify(p4, vs({1, 2}));
    CHECK(mid.perfect);
    CHECK(mid.connected);
    CHECK(mid.total);
    CHECK_FALSE(mid.independent);
    CHECK(mid.clique);

    const ClassFlags ends = classify(p4, vs({0, 3}));
    CHECK(ends.perfect);
    CHECK_FALSE(ends.connected);
    CHECK_FALSE(ends.total);
    CHECK(ends.independent);
    CHECK_FALSE(ends.clique);

    // non-minimum dominating sets classify fine too
    const ClassFlags three = classify(p4, vs({0, 1, 3}));
    CHECK_FALSE(three.perfect); // vertex 2 sees both 1 and 3
    CHECK_FALSE(three.connected);
    CHECK_FALSE(three.total);
    CHECK_FALSE(three.independent);
    CHECK_FALSE(three.clique);

    CHECK_THROWS_AS(classify(p4, vs({0})), Error);
    try {
        classify(p4, vs({0}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_dominating);
    }
}

TEST_CASE("singleton conventions") {
    const ClassFlags center = classify(make_star(5), vs({0}));
    CHECK(center.perfect);
    CHECK(center.connected);
    CHECK_FALSE(center.total); // a lone vertex is isolated in its induced subgraph
    CHECK(center.independent);
    CHECK(center.clique);
}

TEST_CASE("census on the three-vertex path") {
    const Census c = census(make_path(3));
    CHECK(c.total_gamma_sets == 1);
    CHECK(c.perfect_count == 1);
    CHECK(c.connected_count == 1);
    CHECK(c.total_count == 0);
    CHECK(c.independent_count == 1);
    CHECK(c.clique_count == 1);
    CHECK(c.none_count == 0);
}

TEST_CASE("census on the complete graph") {
    // every single vertex is a gamma-set: perfect, connected, independent, clique
    const Census c = census(make_complete(4));
    CHECK(c.total_gamma_sets == 4);
    CHECK(c.perfect_count == 4);
    CHECK(c.connected_count == 4);
    CHECK(c.total_count == 0);
    CHECK(c.independent_count == 4);
    CHECK(c.clique_count == 4);
    CHECK(c.none_count == 0);
}

TEST_CASE("census on the three-sun") {
    const Census c = census(make_sun(3));
    CHECK(c.total_gamma_sets == 8);
    CHECK(c.perfect_count == 2);
    CHECK(c.connected_count == 1);
    CHECK(c.total_count == 1);
    CHECK(c.independent_count == 4);
    CHECK(c.clique_count == 1);
    CHECK(c.none_count == 3);
}

TEST_CASE("census on the four-cycle") {
    // adjacent pairs: perfect, connected, total, clique; antipodal: independent
    const Census c = census(make_cycle(4));
    CHECK(c.total_gamma_sets == 6);
    CHECK(c.perfect_count == 4);
    CHECK(c.connected_count == 4);
    CHECK(c.total_count == 4);
    CHECK(c.independent_count == 2);
    CHECK(c.clique_count == 4);
    CHECK(c.none_count == 0);
}
