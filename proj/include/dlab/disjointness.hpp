#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/geometry.hpp"
#include "dlab/graph.hpp"
#include "dlab/util.hpp"

namespace dlab {

// A segment spanned by two labelled points, identified by endpoint indices
// with i < j. Segments are ordered lexicographically; that order is the
// vertex numbering of the disjointness graph.
struct SegmentId {
    int i = 0, j = 0;
    friend bool operator==(const SegmentId&, const SegmentId&) = default;
    friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

inline int segment_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j) throw Error("invalid segment endpoints");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// The disjointness graph D(P): one vertex per segment spanned by P, with two
// segments adjacent exactly when they share no point (as closed sets). The
// generating point set travels with the graph.
struct DisjointnessGraph {
    PointSet points;
    std::vector<SegmentId> segments;  // lexicographic, position = vertex id
    SimpleGraph graph;

    Segment segment(int v) const {
        const SegmentId& id = segments[static_cast<std::size_t>(v)];
        return Segment{points[id.i], points[id.j]};
    }
};

inline DisjointnessGraph build_disjointness_graph(const PointSet& ps) {
    int n = ps.size();
    int m = n * (n - 1) / 2;
    if (m > 64) throw Error("disjointness graph of " + std::to_string(n) +
                            " points exceeds the 64-vertex graph cap");
    DisjointnessGraph d{ps, {}, SimpleGraph(m)};
    d.segments.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.segments.push_back(SegmentId{i, j});
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (segments_disjoint(d.segment(a), d.segment(b))) d.graph.add_edge(a, b);
    return d;
}

// Checks whether the point bijection gamma (gamma[p_index] = q_index) lifts
// to a graph isomorphism D(P) -> D(Q) under {i,j} |-> {gamma[i], gamma[j]}.
inline bool lifted_bijection_is_isomorphism(const PointSet& p, const PointSet& q,
                                            const std::vector<int>& gamma) {
    int n = p.size();
    if (q.size() != n || static_cast<int>(gamma.size()) != n) return false;
    std::uint64_t hit = 0;
    for (int v : gamma) {
        if (v < 0 || v >= n || (hit & (std::uint64_t{1} << v))) return false;
        hit |= std::uint64_t{1} << v;
    }
    DisjointnessGraph dp = build_disjointness_graph(p);
    DisjointnessGraph dq = build_disjointness_graph(q);
    int m = dp.graph.vertex_count();
    std::vector<int> image(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
        const SegmentId& id = dp.segments[static_cast<std::size_t>(v)];
        image[static_cast<std::size_t>(v)] =
            segment_index(gamma[static_cast<std::size_t>(id.i)],
                          gamma[static_cast<std::size_t>(id.j)], n);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (dp.graph.has_edge(a, b) !=
                dq.graph.has_edge(image[static_cast<std::size_t>(a)],
                                  image[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

// Text export: a comment header, then "n m" (vertex and edge counts of the
// graph), then one "i j <-> k l" line per edge naming the two segments by
// their endpoint indices in P.
inline void export_graph(std::ostream& out, const DisjointnessGraph& d) {
    int m = d.graph.vertex_count();
    out << "# disjointness graph of " << d.points.size() << " points\n";
    out << "# vertices are segments in lexicographic endpoint order\n";
    out << m << " " << d.graph.edge_count() << "\n";
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (d.graph.has_edge(a, b)) {
                const SegmentId& s = d.segments[static_cast<std::size_t>(a)];
                const SegmentId& t = d.segments[static_cast<std::size_t>(b)];
                out << s.i << " " << s.j << " <-> " << t.i << " " << t.j << "\n";
            }
}

// Reads either export format: plain "u v" edge lines or "i j <-> k l"
// segment lines (detected per file from the first edge line).
inline SimpleGraph read_graph_auto(std::istream& in) {
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw Error("graph file is empty");
    int n = 0, m = 0;
    {
        std::istringstream ss(rows[0]);
        if (!(ss >> n >> m)) throw Error("invalid graph header line: '" + rows[0] + "'");
    }
    if (static_cast<int>(rows.size()) != m + 1)
        throw Error("graph file announces " + std::to_string(m) + " edges but holds " +
                    std::to_string(rows.size() - 1) + " edge lines");
    bool segment_format = m > 0 && rows[1].find("<->") != std::string::npos;
    SimpleGraph g(n);
    if (!segment_format) {
        for (int e = 0; e < m; ++e) {
            std::istringstream ss(rows[static_cast<std::size_t>(e) + 1]);
            int u, v;
            if (!(ss >> u >> v)) throw Error("malformed edge line: '" + rows[static_cast<std::size_t>(e) + 1] + "'");
            g.add_edge(u, v);
        }
        return g;
    }
    // Recover the point count: n must be a triangular number C(p, 2).
    int p = 2;
    while (p * (p - 1) / 2 < n) ++p;
    if (p * (p - 1) / 2 != n)
        throw Error("segment-format graph order " + std::to_string(n) +
                    " is not a triangular number");
    for (int e = 0; e < m; ++e) {
        std::string row = rows[static_cast<std::size_t>(e) + 1];
        std::size_t arrow = row.find("<->");
        if (arrow == std::string::npos)
            throw Error("expected '<->' in edge line: '" + row + "'");
        std::istringstream left(row.substr(0, arrow)), right(row.substr(arrow + 3));
        int i, j, k, l;
        if (!(left >> i >> j) || !(right >> k >> l))
            throw Error("malformed segment edge line: '" + row + "'");
        g.add_edge(segment_index(i, j, p), segment_index(k, l, p));
    }
    return g;
}

// The canonical six points in convex position used throughout as the
// exceptional configuration: a hexagon with no three points collinear.
inline PointSet convex_hexagon_c6() {
    return PointSet({{0, 0}, {2, -1}, {4, 0}, {4, 2}, {2, 3}, {0, 2}});
}

}  // namespace dlab
