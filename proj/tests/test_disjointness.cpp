#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "dlab/disjointness.hpp"
#include "dlab/ordertype.hpp"

#include "support/fixtures.hpp"
#include "support/rational_oracle.hpp"

using dlab::DisjointnessGraph;
using dlab::Point;
using dlab::PointSet;
using dlab::SegmentId;
using dlab::SimpleGraph;

namespace {

std::string data_path(int n) {
    return std::string(DLAB_DATA_DIR) + "/" + dlab::database_filename(n);
}

PointSet shuffled_translated(const PointSet& ps, std::uint64_t seed) {
    std::vector<Point> pts = ps.points();
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (Point& p : pts) {
        p.x += 23;
        p.y += 31;
    }
    return PointSet(pts);
}

}  // namespace

TEST_CASE("segment_index walks pairs in lexicographic order") {
    int n = 6;
    int expected = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CHECK(dlab::segment_index(i, j, n) == expected);
            CHECK(dlab::segment_index(j, i, n) == expected);  // order-insensitive
            ++expected;
        }
    CHECK(expected == 15);
    CHECK_THROWS_AS(dlab::segment_index(2, 2, 6), dlab::Error);
    CHECK_THROWS_AS(dlab::segment_index(-1, 3, 6), dlab::Error);
    CHECK_THROWS_AS(dlab::segment_index(0, 6, 6), dlab::Error);
}

TEST_CASE("disjointness graph vertices carry their generating segments") {
    DisjointnessGraph d = dlab::build_disjointness_graph(fixtures::square_plus_center());
    REQUIRE(d.graph.vertex_count() == 10);
    REQUIRE(d.segments.size() == 10);
    for (int v = 0; v < 10; ++v) {
        const SegmentId& id = d.segments[static_cast<std::size_t>(v)];
        CHECK(dlab::segment_index(id.i, id.j, 5) == v);
        CHECK(d.segment(v).a == d.points[id.i]);
        CHECK(d.segment(v).b == d.points[id.j]);
    }
}

TEST_CASE("hexagon disjointness graph: degrees by segment role") {
    // In a convex hexagon the fifteen segments split into hull edges (each
    // disjoint from the six segments spanned by the four remaining points),
    // short diagonals (three disjoint partners) and the three long diagonals,
    // which cross each other and are disjoint only from the two opposite
    // hull edges.
    DisjointnessGraph d = dlab::build_disjointness_graph(dlab::convex_hexagon_c6());
    REQUIRE(d.graph.vertex_count() == 15);
    CHECK(d.graph.edge_count() == 30);

    std::multiset<int> degrees;
    for (int v = 0; v < 15; ++v) {
        const SegmentId& id = d.segments[static_cast<std::size_t>(v)];
        int gap = std::min((id.j - id.i) % 6, (id.i - id.j + 6) % 6);
        int deg = d.graph.degree(v);
        degrees.insert(deg);
        if (gap == 1) CHECK(deg == 6);  // hull edge
        if (gap == 2) CHECK(deg == 3);  // short diagonal
        if (gap == 3) CHECK(deg == 2);  // long diagonal
    }
    CHECK(degrees == std::multiset<int>{2, 2, 2, 3, 3, 3, 3, 3, 3, 6, 6, 6, 6, 6, 6});
}

TEST_CASE("edge counts of convex polygons follow the crossing formula") {
    // C(m,2) segment pairs, minus n*C(n-1,2) endpoint-sharing pairs, minus
    // C(n,4) crossing pairs (one per 4-subset in convex position).
    CHECK(dlab::build_disjointness_graph(fixtures::five_convex()).graph.edge_count() == 10);
    CHECK(dlab::build_disjointness_graph(dlab::convex_hexagon_c6()).graph.edge_count() == 30);
    CHECK(dlab::build_disjointness_graph(fixtures::convex_heptagon()).graph.edge_count() == 70);
}

TEST_CASE("two points yield a single isolated segment") {
    DisjointnessGraph d = dlab::build_disjointness_graph(PointSet({{0, 0}, {3, 1}}));
    CHECK(d.graph.vertex_count() == 1);
    CHECK(d.graph.edge_count() == 0);
    CHECK_FALSE(d.graph.is_connected());
}

TEST_CASE("adjacency agrees with the rational intersection oracle") {
    for (int n = 4; n <= 7; ++n)
        for (std::uint64_t s = 0; s < 10; ++s) {
            PointSet ps = fixtures::random_point_set(n, 3100 + 50 * static_cast<std::uint64_t>(n) + s);
            DisjointnessGraph d = dlab::build_disjointness_graph(ps);
            int m = d.graph.vertex_count();
            REQUIRE(m == n * (n - 1) / 2);
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    REQUIRE(d.graph.has_edge(a, b) ==
                            !oracle::segments_intersect(d.segment(a), d.segment(b)));
        }
}

TEST_CASE("D(P) is connected exactly for five or more points") {
    CHECK_FALSE(dlab::build_disjointness_graph(fixtures::triangle_points()).graph.is_connected());
    for (int n = 3; n <= 8; ++n) {
        for (const PointSet& ps : dlab::ingest_database(data_path(n), n)) {
            DisjointnessGraph d = dlab::build_disjointness_graph(ps);
            REQUIRE(d.graph.is_connected() == (n >= 5));
        }
    }
}

TEST_CASE("order-type bijections lift to disjointness-graph isomorphisms") {
    std::vector<PointSet> battery{fixtures::five_convex(), fixtures::five_four_hull(),
                                  fixtures::five_three_hull(), dlab::convex_hexagon_c6(),
                                  fixtures::random_point_set(6, 61),
                                  fixtures::random_point_set(7, 62)};
    for (const PointSet& p : battery) {
        PointSet q = shuffled_translated(p, 77);
        auto gamma = dlab::order_type_bijection(p, q);
        REQUIRE(gamma.has_value());
        CHECK(dlab::lifted_bijection_is_isomorphism(p, q, *gamma));
    }
}

TEST_CASE("lifted-bijection check rejects bad maps") {
    PointSet p = fixtures::five_convex();
    PointSet q = fixtures::five_three_hull();
    std::vector<int> identity{0, 1, 2, 3, 4};
    CHECK_FALSE(dlab::lifted_bijection_is_isomorphism(p, q, identity));
    CHECK_FALSE(dlab::lifted_bijection_is_isomorphism(p, p, {0, 1, 2, 3}));     // wrong size
    CHECK_FALSE(dlab::lifted_bijection_is_isomorphism(p, p, {0, 1, 2, 3, 3}));  // not injective
    CHECK_FALSE(dlab::lifted_bijection_is_isomorphism(p, p, {0, 1, 2, 3, 5}));  // out of range
    CHECK(dlab::lifted_bijection_is_isomorphism(p, p, identity));
}

TEST_CASE("export emits the documented segment format and re-imports") {
    DisjointnessGraph d = dlab::build_disjointness_graph(fixtures::five_four_hull());
    std::ostringstream out;
    dlab::export_graph(out, d);
    std::string text = out.str();
    CHECK(text.find("10 ") != std::string::npos);
    CHECK(text.find("<->") != std::string::npos);

    std::istringstream in(text);
    SimpleGraph back = dlab::read_graph_auto(in);
    CHECK(back == d.graph);
}

TEST_CASE("read_graph_auto also accepts the plain edge-list format") {
    DisjointnessGraph d = dlab::build_disjointness_graph(fixtures::five_three_hull());
    std::ostringstream out;
    dlab::write_graph(out, d.graph);
    std::istringstream in(out.str());
    CHECK(dlab::read_graph_auto(in) == d.graph);

    std::istringstream tiny("# lone vertex, no edges\n1 0\n");
    SimpleGraph g = dlab::read_graph_auto(tiny);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("graph readers reject malformed input") {
    auto auto_read = [](const std::string& text) {
        std::istringstream in(text);
        return dlab::read_graph_auto(in);
    };
    CHECK_THROWS_AS(auto_read(""), dlab::Error);
    CHECK_THROWS_AS(auto_read("# only comments\n"), dlab::Error);
    CHECK_THROWS_AS(auto_read("nonsense header\n"), dlab::Error);
    CHECK_THROWS_AS(auto_read("3 2\n0 1\n"), dlab::Error);           // fewer edges than announced
    CHECK_THROWS_AS(auto_read("3 1\n0 1\n1 2\n"), dlab::Error);      // more edges than announced
    CHECK_THROWS_AS(auto_read("4 1\n0 1 <-> 2 3\n"), dlab::Error);   // 4 is not triangular
    CHECK_THROWS_AS(auto_read("3 1\n0 1 <-> x y\n"), dlab::Error);   // malformed segment pair
    CHECK_THROWS_AS(auto_read("3 1\n0 0 <-> 1 2\n"), dlab::Error);   // degenerate segment

    auto plain_read = [](const std::string& text) {
        std::istringstream in(text);
        return dlab::read_graph(in);
    };
    CHECK_THROWS_AS(plain_read("2 2\n0 1\n0 1\n"), dlab::Error);  // duplicate edge
    CHECK_THROWS_AS(plain_read("2 2\n0 1\n"), dlab::Error);       // truncated
    CHECK_THROWS_AS(plain_read("2 1\nzero one\n"), dlab::Error);  // malformed edge
}

TEST_CASE("point-set cap: twelve points overflow the 64-vertex graph") {
    // C(11,2) = 55 segments still fit the 64-vertex cap; C(12,2) = 66 do not.
    PointSet eleven = fixtures::random_point_set(11, 4001, 512);
    CHECK(dlab::build_disjointness_graph(eleven).graph.vertex_count() == 55);
    PointSet twelve = fixtures::random_point_set(12, 4002, 512);
    CHECK_THROWS_AS(dlab::build_disjointness_graph(twelve), dlab::Error);
}
