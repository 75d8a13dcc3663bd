#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "dlab/hamilton.hpp"
#include "dlab/metrics.hpp"
#include "dlab/ordertype.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using dlab::PointSet;
using dlab::SimpleGraph;

TEST_CASE("independence number on reference graphs") {
    CHECK(dlab::independence_number(fixtures::complete_graph(5)) == 1);
    CHECK(dlab::independence_number(SimpleGraph(7)) == 7);  // no edges at all
    CHECK(dlab::independence_number(fixtures::cycle_graph(6)) == 3);
    CHECK(dlab::independence_number(fixtures::cycle_graph(7)) == 3);
    CHECK(dlab::independence_number(fixtures::petersen_graph()) == 4);
    CHECK(dlab::independence_number(fixtures::star_graph(5)) == 5);
    CHECK(dlab::independence_number(fixtures::path_graph(6)) == 3);
    CHECK(dlab::independence_number(SimpleGraph(0)) == 0);
}

TEST_CASE("independence number agrees with the subset oracle") {
    for (int n : {6, 9, 12, 14})
        for (std::uint64_t s = 0; s < 30; ++s) {
            SimpleGraph g = fixtures::random_graph(n, 0xa1fa, 100 * static_cast<std::uint64_t>(n) + s);
            REQUIRE(dlab::independence_number(g) == oracle::independence_by_subsets(g));
        }
}

TEST_CASE("lexicographically smallest maximum independent set") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        SimpleGraph g = fixtures::random_graph(11, 0x1e, s);
        std::vector<int> got = dlab::max_independent_set_lex(g);
        int alpha = oracle::independence_by_subsets(g);
        REQUIRE(static_cast<int>(got.size()) == alpha);
        for (std::size_t a = 0; a < got.size(); ++a)
            for (std::size_t b = a + 1; b < got.size(); ++b)
                REQUIRE_FALSE(g.has_edge(got[a], got[b]));
        // reference lex-min by scanning all masks of maximum size
        std::vector<int> best;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 11); ++mask) {
            if (std::popcount(mask) != alpha) continue;
            bool indep = true;
            for (int a = 0; a < 11 && indep; ++a) {
                if (!(mask & SimpleGraph::bit(a))) continue;
                for (int b = a + 1; b < 11 && indep; ++b)
                    if ((mask & SimpleGraph::bit(b)) && g.has_edge(a, b)) indep = false;
            }
            if (!indep) continue;
            std::vector<int> cur;
            for (int v = 0; v < 11; ++v)
                if (mask & SimpleGraph::bit(v)) cur.push_back(v);
            if (best.empty() || cur < best) best = cur;
        }
        REQUIRE(got == best);
    }
}

TEST_CASE("thrackle pairs match closed-segment intersection in general position") {
    for (int n = 4; n <= 7; ++n)
        for (std::uint64_t s = 0; s < 8; ++s) {
            PointSet ps = fixtures::random_point_set(n, 0xcafe + 10 * static_cast<std::uint64_t>(n) + s);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = k + 1; l < n; ++l) {
                            if (i == k && j == l) continue;
                            dlab::Segment a{ps[i], ps[j]}, b{ps[k], ps[l]};
                            CHECK(dlab::is_thrackle_pair(a, b) == oracle::segments_intersect(a, b));
                            CHECK(dlab::is_thrackle_pair(a, b) == !dlab::segments_disjoint(a, b));
                        }
        }
}

TEST_CASE("maximum thrackle of the hexagon is six, by exhaustive subsets") {
    dlab::ThrackleResult r = dlab::max_thrackle(dlab::convex_hexagon_c6());
    CHECK(r.size == 6);
    CHECK(oracle::max_thrackle_by_subsets(dlab::convex_hexagon_c6()) == 6);
    REQUIRE(r.segments.size() == 6);
    PointSet ps = dlab::convex_hexagon_c6();
    for (std::size_t a = 0; a < r.segments.size(); ++a)
        for (std::size_t b = a + 1; b < r.segments.size(); ++b) {
            dlab::Segment sa{ps[r.segments[a].i], ps[r.segments[a].j]};
            dlab::Segment sb{ps[r.segments[b].i], ps[r.segments[b].j]};
            CHECK(dlab::is_thrackle_pair(sa, sb));
        }
}

TEST_CASE("thrackle size equals the independence number of the disjointness graph") {
    std::vector<PointSet> battery{fixtures::five_convex(), fixtures::five_four_hull(),
                                  fixtures::five_three_hull(), fixtures::square_plus_center(),
                                  dlab::convex_hexagon_c6(), fixtures::convex_heptagon()};
    for (int n = 4; n <= 6; ++n)
        for (std::uint64_t s = 0; s < 5; ++s)
            battery.push_back(fixtures::random_point_set(n, 0xbeef + 10 * static_cast<std::uint64_t>(n) + s));
    for (const PointSet& ps : battery) {
        dlab::ThrackleResult t = dlab::max_thrackle(ps);
        CHECK(t.size == dlab::independence_number(dlab::build_disjointness_graph(ps).graph));
        if (ps.size() <= 6) CHECK(t.size == oracle::max_thrackle_by_subsets(ps));
    }
}

TEST_CASE("vertex connectivity on reference graphs") {
    CHECK(dlab::vertex_connectivity(fixtures::cycle_graph(6)) == 2);
    CHECK(dlab::vertex_connectivity(fixtures::complete_graph(4)) == 3);
    CHECK(dlab::vertex_connectivity(fixtures::complete_graph(2)) == 1);
    CHECK(dlab::vertex_connectivity(fixtures::petersen_graph()) == 3);
    CHECK(dlab::vertex_connectivity(fixtures::path_graph(5)) == 1);
    CHECK(dlab::vertex_connectivity(fixtures::star_graph(4)) == 1);
    CHECK(dlab::vertex_connectivity(SimpleGraph(3)) == 0);  // three isolated vertices
    CHECK(dlab::vertex_connectivity(SimpleGraph(1)) == 0);
    SimpleGraph two_triangles(6);
    for (int i = 0; i < 3; ++i) {
        two_triangles.add_edge(i, (i + 1) % 3);
        two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
    }
    CHECK(dlab::vertex_connectivity(two_triangles) == 0);
}

TEST_CASE("flow connectivity agrees with the vertex-deletion oracle") {
    int checked = 0;
    for (int n = 4; n <= 10; ++n)
        for (std::uint64_t s = 0; s < 170; ++s) {
            SimpleGraph g = fixtures::random_graph(n, 0xc0ffee, 1000 * static_cast<std::uint64_t>(n) + s);
            REQUIRE(dlab::vertex_connectivity(g) == oracle::vertex_connectivity_by_deletion(g));
            ++checked;
        }
    CHECK(checked >= 1000);
}

TEST_CASE("connectivity lower bound values") {
    CHECK(dlab::connectivity_lower_bound(3) == 0);
    CHECK(dlab::connectivity_lower_bound(4) == 0);
    CHECK(dlab::connectivity_lower_bound(5) == 1);
    CHECK(dlab::connectivity_lower_bound(6) == 2);
    CHECK(dlab::connectivity_lower_bound(7) == 4);
    CHECK(dlab::connectivity_lower_bound(8) == 6);
    CHECK(dlab::connectivity_lower_bound(9) == 9);
    CHECK(dlab::connectivity_lower_bound(10) == 12);
    CHECK_THROWS_AS(dlab::connectivity_lower_bound(2), dlab::Error);
}

TEST_CASE("hexagon disjointness graph meets its connectivity bound exactly") {
    SimpleGraph d = dlab::build_disjointness_graph(dlab::convex_hexagon_c6()).graph;
    CHECK(dlab::vertex_connectivity(d) == 2);  // its long diagonals have degree 2
    CHECK(dlab::connectivity_lower_bound(6) == 2);
    CHECK(dlab::independence_number(d) == 6);
}

TEST_CASE("database sweep: alpha lands on n-1 or n and kappa meets the bound") {
    for (int n : {5, 6}) {
        std::string path = std::string(DLAB_DATA_DIR) + "/" + dlab::database_filename(n);
        for (const PointSet& ps : dlab::ingest_database(path, n)) {
            SimpleGraph d = dlab::build_disjointness_graph(ps).graph;
            int alpha = dlab::independence_number(d);
            CHECK((alpha == n - 1 || alpha == n));
            CHECK(dlab::vertex_connectivity(d) >= dlab::connectivity_lower_bound(n));
        }
    }
}

TEST_CASE("chvatal-erdos condition: examples and implication") {
    CHECK(dlab::chvatal_erdos_applies(fixtures::complete_graph(5)));
    CHECK_FALSE(dlab::chvatal_erdos_applies(fixtures::star_graph(4)));
    // C6 is hamiltonian yet fails the condition: sufficient, not necessary.
    CHECK_FALSE(dlab::chvatal_erdos_applies(fixtures::cycle_graph(6)));
    CHECK(dlab::chvatal_erdos_applies(fixtures::cycle_graph(5)));  // kappa = 2 >= alpha = 2
    CHECK_FALSE(dlab::chvatal_erdos_applies(fixtures::petersen_graph()));
    CHECK_FALSE(dlab::chvatal_erdos_applies(fixtures::complete_graph(2)));

    int applied = 0;
    for (std::uint64_t s = 0; s < 400; ++s) {
        SimpleGraph g = fixtures::random_graph(3 + static_cast<int>(s % 8), 0xce, s);
        if (!dlab::chvatal_erdos_applies(g)) continue;
        ++applied;
        REQUIRE(dlab::find_hamiltonian_cycle(g).status == dlab::HamiltonResult::Status::kFound);
    }
    CHECK(applied > 50);  // the family must actually exercise the implication
}
