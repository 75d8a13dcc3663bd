#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/util.hpp"

namespace dlab {

// Undirected simple graph on at most 64 vertices, adjacency stored as one
// 64-bit row per vertex. All toolkit graphs (disjointness graphs up to ten
// points have 45 vertices) fit this cap comfortably.
class SimpleGraph {
   public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > 64) throw Error("graph order " + std::to_string(n) + " outside [0, 64]");
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (std::uint64_t r : rows_) total += std::popcount(r);
        return total / 2;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        rows_[static_cast<std::size_t>(u)] |= bit(v);
        rows_[static_cast<std::size_t>(v)] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        rows_[static_cast<std::size_t>(u)] &= ~bit(v);
        rows_[static_cast<std::size_t>(v)] &= ~bit(u);
    }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return rows_[static_cast<std::size_t>(u)] & bit(v);
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(rows_[static_cast<std::size_t>(v)]);
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    std::uint64_t all_vertices_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    // Connectivity in the toolkit's sense: a graph must have at least two
    // vertices and a path between every pair. A single-vertex graph reports
    // disconnected so "connected" always implies a usable spanning structure.
    bool is_connected() const {
        if (n_ < 2) return false;
        std::uint64_t reached = reach_from(0, all_vertices_mask());
        return reached == all_vertices_mask();
    }

    int component_count() const {
        std::uint64_t unseen = all_vertices_mask();
        int comps = 0;
        while (unseen) {
            int v = std::countr_zero(unseen);
            unseen &= ~reach_from(v, unseen);
            ++comps;
        }
        return comps;
    }

    // Vertices reachable from `start` while walking only inside `allowed`
    // (start must be in allowed). Returns the reached subset of allowed.
    std::uint64_t reach_from(int start, std::uint64_t allowed) const {
        std::uint64_t seen = bit(start) & allowed;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= rows_[static_cast<std::size_t>(v)] & allowed & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    SimpleGraph complement() const {
        SimpleGraph c(n_);
        for (int v = 0; v < n_; ++v)
            c.rows_[static_cast<std::size_t>(v)] =
                ~rows_[static_cast<std::size_t>(v)] & all_vertices_mask() & ~bit(v);
        return c;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

   private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u) + " not allowed");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Exhaustive isomorphism test with degree-sequence pruning; intended for the
// small graphs this toolkit manipulates (minor fixtures, quotients).
inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(static_cast<std::size_t>(n)), dh(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dg[static_cast<std::size_t>(v)] = g.degree(v);
        dh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    // map[v in g] = image in h; assign vertices of g in order, backtracking.
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used & SimpleGraph::bit(w)) continue;
            if (dg[static_cast<std::size_t>(v)] != dh[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != h.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used |= SimpleGraph::bit(w);
            if (self(self, v + 1)) return true;
            used &= ~SimpleGraph::bit(w);
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Plain graph text format: first significant line "n m", then m lines
// "u v" with 0-based endpoints. '#' comments and blank lines are skipped.
inline SimpleGraph read_graph(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string head;
    if (!next_line(head)) throw Error("graph file is empty");
    int n = 0, m = 0;
    {
        std::istringstream ss(head);
        if (!(ss >> n >> m)) throw Error("invalid graph header line: '" + head + "'");
    }
    SimpleGraph g(n);
    for (int e = 0; e < m; ++e) {
        std::string row;
        if (!next_line(row))
            throw Error("expected " + std::to_string(m) + " edges, file ends after " +
                        std::to_string(e));
        std::istringstream ss(row);
        int u, v;
        if (!(ss >> u >> v)) throw Error("malformed edge line: '" + row + "'");
        if (g.has_edge(u, v)) throw Error("duplicate edge in line: '" + row + "'");
        g.add_edge(u, v);
    }
    return g;
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
}

}  // namespace dlab
