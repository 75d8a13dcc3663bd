#pragma once

// Shared graph and point-set fixtures for the test suites.

#include <cstdint>
#include <random>

#include "dlab/geometry.hpp"
#include "dlab/graph.hpp"
#include "dlab/util.hpp"

namespace fixtures {

inline dlab::SimpleGraph cycle_graph(int n) {
    dlab::SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline dlab::SimpleGraph complete_graph(int n) {
    dlab::SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// K_{1,k}: vertex 0 is the center.
inline dlab::SimpleGraph star_graph(int k) {
    dlab::SimpleGraph g(k + 1);
    for (int v = 1; v <= k; ++v) g.add_edge(0, v);
    return g;
}

inline dlab::SimpleGraph path_graph(int n) {
    dlab::SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
inline dlab::SimpleGraph petersen_graph() {
    dlab::SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// Seeded Erdos-Renyi-style graph; edge probability varies with `salt` so a
// family sweeps sparse through dense.
inline dlab::SimpleGraph random_graph(int n, std::uint64_t seed, std::uint64_t salt) {
    std::mt19937_64 rng(dlab::splitmix64(seed) ^ dlab::splitmix64(salt));
    std::uint64_t threshold = (rng() % 9 + 1) * (~std::uint64_t{0} / 10);  // p in 0.1..0.9
    dlab::SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) g.add_edge(u, v);
    return g;
}

// Four corners with one interior point. The exact center would sit on both
// diagonals and violate general position, so the interior point is offset.
inline dlab::PointSet square_plus_center() {
    return dlab::PointSet({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
}

inline dlab::PointSet triangle_points() {
    return dlab::PointSet({{0, 0}, {1, 0}, {0, 1}});
}

// The three order types of five points: convex, four hull points with one
// interior, three hull points with two interior.
inline dlab::PointSet five_convex() {
    return dlab::PointSet({{0, 0}, {4, 1}, {5, 4}, {2, 6}, {-1, 3}});
}

inline dlab::PointSet five_four_hull() {
    return dlab::PointSet({{0, 0}, {6, 1}, {5, 5}, {1, 4}, {3, 2}});
}

inline dlab::PointSet five_three_hull() {
    return dlab::PointSet({{0, 0}, {8, 1}, {3, 7}, {3, 2}, {4, 3}});
}

inline dlab::PointSet convex_heptagon() {
    return dlab::PointSet({{0, 0}, {3, -1}, {6, 0}, {8, 3}, {5, 6}, {2, 6}, {-1, 3}});
}

// Uniform general-position set with coordinates in [0, range), by rejection.
inline dlab::PointSet random_point_set(int n, std::uint64_t seed, std::int64_t range = 64) {
    std::mt19937_64 rng(dlab::splitmix64(seed) ^ 0x9e3779b97f4a7c15ull);
    std::vector<dlab::Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        dlab::Point q{static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range)),
                      static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range))};
        bool ok = true;
        for (std::size_t a = 0; a < pts.size() && ok; ++a) {
            if (pts[a] == q) ok = false;
            for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
                if (dlab::orient(pts[a], pts[b], q) == 0) ok = false;
        }
        if (ok) pts.push_back(q);
    }
    return dlab::PointSet(pts);
}

}  // namespace fixtures
