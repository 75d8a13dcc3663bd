#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/util.hpp"

namespace dlab {

// Coordinates are bounded so that the 3x3 orientation determinant fits in
// int64 with slack: |coord| < 2^30 keeps every product below 2^62.
inline constexpr std::int64_t kCoordBound = std::int64_t{1} << 30;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Sign of the determinant |b-a, c-a|: +1 if a,b,c make a left turn (counter-
// clockwise), -1 for a right turn, 0 iff collinear. Exact for bounded coords.
inline int orient(const Point& a, const Point& b, const Point& c) {
    std::int64_t det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

inline bool coord_in_range(const Point& p) {
    return p.x > -kCoordBound && p.x < kCoordBound && p.y > -kCoordBound && p.y < kCoordBound;
}

// True iff no three of the given points are collinear. Distinctness is not
// checked here; duplicate points trivially fail (duplicates are collinear
// with any third point only in the degenerate sense and are caught by the
// PointSet constructor separately).
inline bool is_general_position(const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
    return true;
}

// An ordered labelled set of at least two distinct points in general
// position with bounded integer coordinates. Construction validates all
// invariants and reports the first offending point or triple by index.
class PointSet {
   public:
    explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
        int n = static_cast<int>(pts_.size());
        if (n < 2) throw Error("point set needs at least 2 points, got " + std::to_string(n));
        for (int i = 0; i < n; ++i) {
            if (!coord_in_range(pts_[i]))
                throw Error("point " + std::to_string(i) + " exceeds the coordinate bound |c| < 2^30");
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pts_[i] == pts_[j])
                    throw Error("points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (orient(pts_[i], pts_[j], pts_[k]) == 0)
                        throw GeneralPositionError(
                            "points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + " are collinear",
                            i, j, k);
    }

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](int i) const { return pts_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return pts_; }
    friend bool operator==(const PointSet&, const PointSet&) = default;

   private:
    std::vector<Point> pts_;
};

// A closed segment between two distinct points.
struct Segment {
    Point a, b;
};

namespace detail {
// p is collinear with [a,b]; true iff p lies inside the closed bounding box.
inline bool on_collinear_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}
}  // namespace detail

// True iff the closed segments share no point at all. A shared endpoint
// counts as intersecting, as does any touching or crossing configuration.
// Collinear overlaps are handled exactly even though they cannot arise
// between segments spanned by a general-position set; the predicate is also
// used on raw, not-yet-validated input.
inline bool segments_disjoint(const Segment& s, const Segment& t) {
    if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return false;
    int d1 = orient(t.a, t.b, s.a);
    int d2 = orient(t.a, t.b, s.b);
    int d3 = orient(s.a, s.b, t.a);
    int d4 = orient(s.a, s.b, t.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return false;
    if (d1 == 0 && detail::on_collinear_segment(t.a, t.b, s.a)) return false;
    if (d2 == 0 && detail::on_collinear_segment(t.a, t.b, s.b)) return false;
    if (d3 == 0 && detail::on_collinear_segment(s.a, s.b, t.a)) return false;
    if (d4 == 0 && detail::on_collinear_segment(s.a, s.b, t.b)) return false;
    return true;
}

// Convex hull in counter-clockwise order starting from the lexicographically
// smallest point (by x, then y). For general-position input every hull vertex
// is extreme, so strict turns suffice.
inline std::vector<Point> convex_hull(const PointSet& ps) {
    std::vector<Point> p = ps.points();
    std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    int n = static_cast<int>(p.size());
    if (n == 2) return p;
    std::vector<Point> h(static_cast<std::size_t>(2 * n));
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[static_cast<std::size_t>(k++)] = p[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper chain
        while (k >= lower && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[static_cast<std::size_t>(k++)] = p[i];
    }
    h.resize(static_cast<std::size_t>(k - 1));
    return h;
}

inline bool is_convex_position(const PointSet& ps) {
    return static_cast<int>(convex_hull(ps).size()) == ps.size();
}

// Text format: blank lines and lines starting with '#' are ignored; the
// first significant line holds the point count, then one "x y" pair per line.
inline PointSet read_point_set(std::istream& in) {
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
    if (!next_line(head)) throw Error("point-set file is empty");
    long long n = 0;
    {
        std::istringstream ss(head);
        if (!(ss >> n) || n < 2 || n > 1000000)
            throw Error("invalid point count line: '" + head + "'");
    }
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        std::string row;
        if (!next_line(row))
            throw Error("expected " + std::to_string(n) + " points, file ends after " +
                        std::to_string(i));
        std::istringstream ss(row);
        Point p;
        if (!(ss >> p.x >> p.y)) throw Error("malformed point line: '" + row + "'");
        pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

inline void write_point_set(std::ostream& out, const PointSet& ps) {
    out << ps.size() << "\n";
    for (const Point& p : ps.points()) out << p.x << " " << p.y << "\n";
}

}  // namespace dlab
