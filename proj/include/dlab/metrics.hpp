#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "dlab/disjointness.hpp"
#include "dlab/graph.hpp"
#include "dlab/util.hpp"

namespace dlab {

namespace detail {

// Exact maximum clique over the vertices in `allowed`, branch-and-bound with
// a greedy-coloring upper bound (vertices are expanded in reverse color
// order). Adjacency is given as bitset rows. Returns the clique size and
// stores one maximum clique in best_mask.
struct MaxCliqueSolver {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best_mask = 0;
    int best = 0;

    explicit MaxCliqueSolver(const std::vector<std::uint64_t>& rows) : adj(rows) {}

    void search(std::uint64_t cand, std::uint64_t cur_mask, int cur_size) {
        if (cur_size + std::popcount(cand) <= best) return;
        std::array<int, 64> order{}, color{};
        int cnt = 0;
        std::uint64_t un = cand;
        int col = 0;
        while (un) {
            ++col;
            std::uint64_t avail = un;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v));
                un &= ~(std::uint64_t{1} << v);
                order[static_cast<std::size_t>(cnt)] = v;
                color[static_cast<std::size_t>(cnt)] = col;
                ++cnt;
            }
        }
        for (int idx = cnt - 1; idx >= 0; --idx) {
            if (cur_size + color[static_cast<std::size_t>(idx)] <= best) return;
            int v = order[static_cast<std::size_t>(idx)];
            std::uint64_t next = cand & adj[static_cast<std::size_t>(v)];
            std::uint64_t mask = cur_mask | (std::uint64_t{1} << v);
            if (!next) {
                if (cur_size + 1 > best) {
                    best = cur_size + 1;
                    best_mask = mask;
                }
            } else {
                search(next, mask, cur_size + 1);
            }
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

inline int max_clique_mask(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                           std::uint64_t* witness = nullptr) {
    MaxCliqueSolver s(adj);
    s.search(allowed, 0, 0);
    if (witness) *witness = s.best_mask;
    return s.best;
}

inline std::vector<std::uint64_t> complement_rows(const SimpleGraph& g) {
    SimpleGraph c = g.complement();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v) rows[static_cast<std::size_t>(v)] = c.neighbors(v);
    return rows;
}

}  // namespace detail

// Independence number: maximum clique of the complement.
inline int independence_number(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return 0;
    return detail::max_clique_mask(detail::complement_rows(g), g.all_vertices_mask());
}

// The lexicographically smallest maximum independent set, built greedily:
// vertex v joins exactly when some maximum independent set extends the
// current choice through v (checked by solving the residual subproblem).
inline std::vector<int> max_independent_set_lex(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    auto rows = detail::complement_rows(g);
    int alpha = detail::max_clique_mask(rows, g.all_vertices_mask());
    std::vector<int> out;
    std::uint64_t cand = g.all_vertices_mask();
    int have = 0;
    for (int v = 0; v < n && have < alpha; ++v) {
        if (!(cand & SimpleGraph::bit(v))) continue;
        std::uint64_t rest = cand & rows[static_cast<std::size_t>(v)];
        if (have + 1 + detail::max_clique_mask(rows, rest) == alpha) {
            out.push_back(v);
            ++have;
            cand = rest;
        } else {
            cand &= ~SimpleGraph::bit(v);
        }
    }
    return out;
}

// A thrackle of P is a set of spanned segments that pairwise intersect:
// each pair either shares an endpoint or crosses properly. This predicate
// re-derives intersection from orientation signs rather than reusing the
// disjointness predicate, so the two can cross-check each other.
inline bool is_thrackle_pair(const Segment& s, const Segment& t) {
    if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return true;
    int d1 = orient(t.a, t.b, s.a);
    int d2 = orient(t.a, t.b, s.b);
    int d3 = orient(s.a, s.b, t.a);
    int d4 = orient(s.a, s.b, t.b);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

struct ThrackleResult {
    int size = 0;
    std::vector<SegmentId> segments;
};

// Maximum thrackle via maximum clique of the pairwise-intersection graph.
inline ThrackleResult max_thrackle(const PointSet& ps) {
    int n = ps.size();
    int m = n * (n - 1) / 2;
    if (m > 64) throw Error("thrackle search exceeds the 64-segment cap");
    std::vector<SegmentId> ids;
    ids.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ids.push_back(SegmentId{i, j});
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Segment sa{ps[ids[static_cast<std::size_t>(a)].i], ps[ids[static_cast<std::size_t>(a)].j]};
            Segment sb{ps[ids[static_cast<std::size_t>(b)].i], ps[ids[static_cast<std::size_t>(b)].j]};
            if (is_thrackle_pair(sa, sb)) {
                rows[static_cast<std::size_t>(a)] |= SimpleGraph::bit(b);
                rows[static_cast<std::size_t>(b)] |= SimpleGraph::bit(a);
            }
        }
    std::uint64_t witness = 0;
    std::uint64_t allowed = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    ThrackleResult res;
    res.size = detail::max_clique_mask(rows, allowed, &witness);
    while (witness) {
        int v = std::countr_zero(witness);
        witness &= witness - 1;
        res.segments.push_back(ids[static_cast<std::size_t>(v)]);
    }
    return res;
}

namespace detail {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent)
// by unit-capacity max flow on the vertex-split network: every vertex other
// than s and t becomes an in/out pair joined by a capacity-1 arc. Stops
// early once `cap_at` augmenting paths are found (pass a value > n for the
// exact count).
inline int vertex_disjoint_paths(const SimpleGraph& g, int s, int t, int cap_at) {
    int n = g.vertex_count();
    // Node numbering: v_in = v, v_out = v + n; s and t participate only as
    // s_out and t_in respectively.
    int N = 2 * n;
    std::vector<std::vector<int>> res(static_cast<std::size_t>(N),
                                      std::vector<int>(static_cast<std::size_t>(N), 0));
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) res[static_cast<std::size_t>(v)][static_cast<std::size_t>(v + n)] = 1;
    res[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + n)] = 0;
    for (int u = 0; u < n; ++u) {
        std::uint64_t nb = g.neighbors(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            res[static_cast<std::size_t>(u + n)][static_cast<std::size_t>(v)] = 1;
        }
    }
    int source = s + n, sink = t;
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(N));
    while (flow < cap_at) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<std::size_t>(source)] = source;
        std::vector<int> queue{source};
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(sink)] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < N; ++v)
                if (prev[static_cast<std::size_t>(v)] < 0 &&
                    res[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                    prev[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0) break;
        for (int v = sink; v != source; ) {
            int u = prev[static_cast<std::size_t>(v)];
            --res[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            ++res[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            v = u;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Vertex connectivity. Complete graphs have connectivity n-1; otherwise the
// minimum over all non-adjacent pairs of the maximum number of internally
// disjoint paths between them (Menger). Disconnected and trivial graphs
// report 0.
inline int vertex_connectivity(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return n - 1;
    if (!g.is_connected()) return 0;
    int best = n;  // strictly above any possible value for a non-complete graph
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) {
                best = std::min(best, detail::vertex_disjoint_paths(g, s, t, best));
                if (best == 0) return 0;
            }
    return best;
}

// Lower bound on the connectivity of a disjointness graph of n >= 3 points:
// binom(floor((n-2)/2), 2) + binom(ceil((n-2)/2), 2).
inline int connectivity_lower_bound(int n) {
    if (n < 3) throw Error("connectivity bound requires n >= 3, got " + std::to_string(n));
    auto choose2 = [](int k) { return k * (k - 1) / 2; };
    return choose2((n - 2) / 2) + choose2((n - 1) / 2);
}

// Sufficient hamiltonicity condition: connectivity at least independence
// number (for graphs on at least three vertices).
inline bool chvatal_erdos_applies(const SimpleGraph& g) {
    if (g.vertex_count() < 3) return false;
    return vertex_connectivity(g) >= independence_number(g);
}

}  // namespace dlab
