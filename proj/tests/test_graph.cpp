#include "doctest.h"

#include "core/error.hpp"
#include "core/family_spec.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/u128.hpp"
#include "core/vertex_set.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace dominion;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs;
    for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.neighbors(v).count());
    std::sort(degs.begin(), degs.end());
    return degs;
}

void check_simple(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

Graph test_random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) < p) g.add_edge(i, j);
    return g;
}

// 70-vertex random graph, 245 edges, frozen from an external encoder
const std::string kBig70 =
    "~?@EA_?C?A_??WHgc????YGA@????@?C?GC??AaOOAC???C_?E?GA?@GC???@O?a??_?AG??G??_OE?O??O?????"
    "?????GgO?c?????O?_?GA?d?g@S@???@??QO_O?Y?O???G?_?_??GA??AC????CGOe?A?@`??????_C_?GA?????"
    "@G?g??C???`_GGC?PG????QA?SCG@????GC?CO????A???OOA???C???_OOC?????O_O?CaHP?_????A@@???Q?C"
    "??C??GqA@?A????A?DE?_`??????CD?W?G????@??a???A?AQ??@?A?g?U?Eh???@A?C??G?CGBG?T??CC??????"
    "W??G?@@O?@@?A?G@C??AAO?E?????Cg????_AcOc?Q_@????C????D?";

} // namespace

TEST_CASE("vertex sets: membership, iteration and listing order") {
    VertexSet s{};
    CHECK(s.none());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);
    s.set(0);
    s.set(77);
    s.set(127);
    CHECK(s.count() == 3);
    CHECK(s.test(77));
    CHECK_FALSE(s.test(76));
    CHECK(s.members() == std::vector<int>{0, 77, 127});
    s.reset(77);
    CHECK(s.members() == std::vector<int>{0, 127});

    CHECK(VertexSet::full(0).none());
    CHECK(VertexSet::full(64).count() == 64);
    CHECK(VertexSet::full(128).count() == 128);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(first_missing(VertexSet::full(70), 70) == 70);
    VertexSet gap = VertexSet::full(70);
    gap.reset(65);
    CHECK(first_missing(gap, 70) == 65);

    // ascending-index lexicographic comparison: lowest differing vertex wins
    VertexSet a{};
    a.set(0);
    a.set(3);
    VertexSet b{};
    b.set(1);
    b.set(2);
    CHECK(set_lex_less(a, b));      // {0,3} < {1,2}
    CHECK_FALSE(set_lex_less(b, a));
    CHECK_FALSE(set_lex_less(a, a));
    VertexSet c = a;
    c.reset(3);
    c.set(2);
    CHECK(set_lex_less(c, a)); // {0,2} < {0,3}
}

TEST_CASE("128-bit helpers: decimal strings, checked arithmetic, binomials") {
    CHECK(u128_to_string(0) == "0");
    CHECK(u128_to_string(1594323) == "1594323");
    CHECK(u128_to_string(u128{1} << 64) == "18446744073709551616");

    u128 out = 0;
    CHECK(checked_add(u128{1} << 127, (u128{1} << 127) - 1, out));
    CHECK_FALSE(checked_add(u128{1} << 127, u128{1} << 127, out));
    CHECK(checked_mul(u128{1} << 63, u128{1} << 64, out));
    CHECK_FALSE(checked_mul(u128{1} << 64, u128{1} << 64, out));

    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 1) == 5);
    CHECK(binomial(40, 20) == 137846528820ull);
    CHECK(binomial(128, 0) == 1);
    CHECK(binomial(128, 128) == 1);
    CHECK(binomial(10, 11) == 0);
    // the largest in-capacity case must evaluate without spurious overflow
    const u128 big = binomial(128, 64);
    CHECK(big > binomial(127, 64));
    CHECK(u128_to_string(big).size() == 38);
}

TEST_CASE("path, cycle, complete and star generators") {
    const Graph p4 = make_path(4);
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(degree_sequence(p4) == std::vector<int>{1, 1, 2, 2});
    check_simple(p4);

    const Graph p7 = make_path(7);
    CHECK(p7.edge_count() == 6);
    const std::vector<int> p7_degrees = degree_sequence(p7);
    CHECK(std::count(p7_degrees.begin(), p7_degrees.end(), 1) == 2);

    const Graph c6 = make_cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(degree_sequence(c6) == std::vector<int>(6, 2));
    check_simple(c6);

    const Graph k5 = make_complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(degree_sequence(k5) == std::vector<int>(5, 4));

    const Graph star = make_star(4);
    CHECK(star.vertex_count() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(degree_sequence(star) == std::vector<int>{1, 1, 1, 1, 4});

    CHECK(make_path(1).vertex_count() == 1);
    CHECK_THROWS_AS(make_path(0), Error);
    CHECK_THROWS_AS(make_cycle(2), Error);
    CHECK_THROWS_AS(make_complete(0), Error);
    CHECK_THROWS_AS(make_star(0), Error);
}

TEST_CASE("sun generator: cycle plus one pendant leaf per cycle vertex") {
    const Graph sun = make_sun(3);
    CHECK(sun.vertex_count() == 6);
    CHECK(sun.edge_count() == 6);
    for (int i = 0; i < 3; ++i) {
        CHECK(sun.adjacent(i, (i + 1) % 3));
        CHECK(sun.adjacent(i, 3 + i));
        CHECK(sun.neighbors(3 + i).count() == 1);
    }
    check_simple(sun);
    CHECK_THROWS_AS(make_sun(2), Error);
    CHECK_THROWS_AS(make_sun(65), Error); // 130 vertices
}

TEST_CASE("complete multipartite generator") {
    const Graph c4 = make_complete_multipartite({2, 2});
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(degree_sequence(c4) == std::vector<int>(4, 2));

    const Graph star = make_complete_multipartite({1, 3});
    CHECK(star.edge_count() == 3);
    CHECK(degree_sequence(star) == std::vector<int>{1, 1, 1, 3});

    // all parts of size one collapses to the complete graph
    for (int k = 2; k <= 6; ++k) {
        const Graph mp = make_complete_multipartite(std::vector<int>(k, 1));
        const Graph kk = make_complete(k);
        CHECK(mp.edge_count() == kk.edge_count());
        CHECK(degree_sequence(mp) == degree_sequence(kk));
    }

    const std::vector<int> parts{2, 3, 4};
    const Graph mp = make_complete_multipartite(parts);
    check_simple(mp);
    // no edges inside a block, all edges across blocks
    for (int u = 0; u < mp.vertex_count(); ++u)
        for (int v = u + 1; v < mp.vertex_count(); ++v)
            CHECK(mp.adjacent(u, v) ==
                  (multipartite_block_of(parts, u) != multipartite_block_of(parts, v)));
    CHECK(multipartite_block_of(parts, 0) == 0);
    CHECK(multipartite_block_of(parts, 2) == 1);
    CHECK(multipartite_block_of(parts, 8) == 2);
    CHECK_THROWS_AS(multipartite_block_of(parts, 9), Error);
    CHECK_THROWS_AS(make_complete_multipartite({3}), Error);
    CHECK_THROWS_AS(make_complete_multipartite({0, 2}), Error);
}

TEST_CASE("join: disjoint union plus all cross edges") {
    const Graph k4 = join(make_path(2), make_path(2));
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    const Graph k23 = join(Graph(2), Graph(3));
    CHECK(k23.edge_count() == 6);
    CHECK(degree_sequence(k23) == std::vector<int>{2, 2, 2, 3, 3});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n1 = 1 + static_cast<int>(rng() % 8);
        const int n2 = 1 + static_cast<int>(rng() % 8);
        const Graph g1 = test_random_graph(n1, 0.4, rng);
        const Graph g2 = test_random_graph(n2, 0.4, rng);
        const Graph j = join(g1, g2);
        CHECK(j.edge_count() == g1.edge_count() + g2.edge_count() +
                                    static_cast<std::uint64_t>(n1) * n2);
        // operand adjacency is preserved under the offset relabeling
        for (int u = 0; u < n2; ++u)
            for (int v = 0; v < n2; ++v)
                if (u != v) CHECK(j.adjacent(n1 + u, n1 + v) == g2.adjacent(u, v));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK(is_connected(make_path(9)));
    Graph two_parts(5);
    two_parts.add_edge(0, 1);
    two_parts.add_edge(2, 3);
    two_parts.add_edge(3, 4);
    CHECK_FALSE(is_connected(two_parts));
}

TEST_CASE("graph construction guards") {
    CHECK_THROWS_AS(Graph(129), Error);
    CHECK(Graph(128).vertex_count() == 128);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // duplicate collapses
    CHECK(g.edge_count() == 1);
}

TEST_CASE("edge list parsing and emission") {
    const Graph k2 = parse_edge_list("n 2\n0 1");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.adjacent(0, 1));

    const Graph p3 = parse_edge_list("n 3\n0 1\n1 2\n");
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    // blank lines and duplicate edges are tolerated
    const Graph dup = parse_edge_list("\nn 3\n\n0 1\n0 1\n");
    CHECK(dup.edge_count() == 1);

    CHECK(parse_edge_list("n 0").vertex_count() == 0);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 2\n0 0"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 2\n0 2"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 2\n0 1 2"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 1"), doctest::Contains("header"), Error);
    CHECK_THROWS_AS(parse_edge_list(""), Error);
    CHECK_THROWS_AS(parse_edge_list("n 200"), Error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = test_random_graph(1 + static_cast<int>(rng() % 20), 0.3, rng);
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
    }
}

TEST_CASE("graph6 fixtures from an independent encoder") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(emit_graph6(make_path(2)) == "A_");

    // "Bg" is the 3-vertex path, "Bw" the triangle
    CHECK(parse_graph6("Bg") == make_path(3));
    CHECK(parse_graph6("Bw") == make_complete(3));
    CHECK(emit_graph6(make_path(3)) == "Bg");
    CHECK(emit_graph6(make_complete(3)) == "Bw");

    CHECK(parse_graph6("Ch") == make_path(4));
    CHECK(parse_graph6("Cl") == make_cycle(4));
    CHECK(parse_graph6("Dhc") == make_cycle(5));
    CHECK(parse_graph6("C~") == make_complete(4));
    CHECK(parse_graph6("E{O_") == make_sun(3));
    CHECK(emit_graph6(make_sun(3)) == "E{O_");

    const Graph petersen = parse_graph6("IheA@GUAo");
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(degree_sequence(petersen) == std::vector<int>(10, 3));
    CHECK(emit_graph6(petersen) == "IheA@GUAo");

    // multi-byte vertex-count header (63 <= n <= 128)
    const Graph big = parse_graph6(kBig70);
    CHECK(big.vertex_count() == 70);
    CHECK(big.edge_count() == 245);
    CHECK(emit_graph6(big) == kBig70);
    CHECK(emit_graph6(Graph(70)).substr(0, 4) == std::string("~?@E"));

    // optional format header and trailing newline are tolerated
    CHECK(parse_graph6(">>graph6<<Bg\n") == make_path(3));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 30);
        const Graph g = test_random_graph(n, 0.35, rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    // and across the one-byte/four-byte header boundary
    for (int n : {62, 63, 64, 100, 128}) {
        const Graph g = test_random_graph(n, 0.1, rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("A "), Error);      // byte below 63
    CHECK_THROWS_AS(parse_graph6("B"), Error);       // truncated body
    CHECK_THROWS_AS(parse_graph6("A_x"), Error);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("AO"), Error);      // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("~~~~~~~~"), Error); // 8-byte order form
    CHECK_THROWS_AS(parse_graph6("~B~~"), Error);     // order over capacity
    try {
        parse_graph6("A ");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse);
    }
}

TEST_CASE("family spec grammar") {
    const FamilySpec path = parse_family_spec("path:10");
    CHECK(path.kind == FamilySpec::Kind::path);
    CHECK(path.n == 10);
    CHECK(describe_family(path) == "path:10");
    CHECK(build_family_graph(path) == make_path(10));

    const FamilySpec kp = parse_family_spec("kpartite:2,3,4");
    CHECK(kp.parts == std::vector<int>{2, 3, 4});
    CHECK(build_family_graph(kp) == make_complete_multipartite({2, 3, 4}));
    CHECK(describe_family(kp) == "kpartite:2,3,4");

    const FamilySpec j = parse_family_spec("join:path:3+cycle:4");
    REQUIRE(j.kind == FamilySpec::Kind::join);
    CHECK(j.left->kind == FamilySpec::Kind::path);
    CHECK(j.right->kind == FamilySpec::Kind::cycle);
    CHECK(build_family_graph(j) == join(make_path(3), make_cycle(4)));

    // nesting: the left operand of a join ends at its '+'
    const FamilySpec nested = parse_family_spec("join:join:path:3+path:3+cycle:4");
    REQUIRE(nested.left->kind == FamilySpec::Kind::join);
    CHECK(nested.right->kind == FamilySpec::Kind::cycle);
    CHECK(describe_family(nested) == "join:join:path:3+path:3+cycle:4");

    CHECK(build_family_graph(parse_family_spec("star:3")) == make_star(3));
    CHECK(build_family_graph(parse_family_spec("sun:4")) == make_sun(4));
    CHECK(build_family_graph(parse_family_spec("complete:5")) == make_complete(5));

    CHECK_THROWS_AS(parse_family_spec("path"), Error);
    CHECK_THROWS_AS(parse_family_spec("path:"), Error);
    CHECK_THROWS_AS(parse_family_spec("frob:3"), Error);
    CHECK_THROWS_AS(parse_family_spec("kpartite:2"), Error);
    CHECK_THROWS_AS(parse_family_spec("path:3x"), Error);
    CHECK_THROWS_AS(parse_family_spec("join:path:3"), Error);
    CHECK_THROWS_AS(parse_family_spec("path:999999999999"), Error);
    CHECK_THROWS_AS(build_family_graph(parse_family_spec("cycle:2")), Error);
}
