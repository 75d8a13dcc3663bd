#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/util.hpp"

namespace dlab {

// One step of a minor derivation. Vertices are addressed by persistent
// labels: the source graph starts with labels 0..n-1 and labels never shift
// as vertices disappear, so a recorded script replays unambiguously.
struct MinorOp {
    enum class Kind { kDeleteVertex, kDeleteEdge, kContractEdge };
    Kind kind = Kind::kDeleteVertex;
    int u = 0;
    int v = 0;  // unused for kDeleteVertex
    friend bool operator==(const MinorOp&, const MinorOp&) = default;
};

// A checkable certificate that `result` is a minor of the named source
// graph: replaying `ops` on the source and relabelling surviving labels in
// ascending order must yield a graph isomorphic to `result`.
struct MinorWitness {
    std::string source_id;  // single token, e.g. "D(C6)"
    int source_n = 0;
    std::vector<MinorOp> ops;
    SimpleGraph result;
};

// Applies the script to `source`. Throws on any invalid step: dead or
// out-of-range labels, deleting a missing edge, contracting a non-edge.
inline SimpleGraph replay_minor_ops(const SimpleGraph& source, const std::vector<MinorOp>& ops) {
    int n = source.vertex_count();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = source.neighbors(v);
    std::uint64_t alive = source.all_vertices_mask();
    auto check_alive = [&](int v, const char* what) {
        if (v < 0 || v >= n || !(alive & SimpleGraph::bit(v)))
            throw Error(std::string(what) + " references dead or invalid label " +
                        std::to_string(v));
    };
    auto drop_vertex = [&](int v) {
        for (int u = 0; u < n; ++u) rows[static_cast<std::size_t>(u)] &= ~SimpleGraph::bit(v);
        rows[static_cast<std::size_t>(v)] = 0;
        alive &= ~SimpleGraph::bit(v);
    };
    for (const MinorOp& op : ops) {
        switch (op.kind) {
            case MinorOp::Kind::kDeleteVertex:
                check_alive(op.u, "vertex deletion");
                drop_vertex(op.u);
                break;
            case MinorOp::Kind::kDeleteEdge: {
                check_alive(op.u, "edge deletion");
                check_alive(op.v, "edge deletion");
                if (!(rows[static_cast<std::size_t>(op.u)] & SimpleGraph::bit(op.v)))
                    throw Error("edge deletion: no edge between labels " + std::to_string(op.u) +
                                " and " + std::to_string(op.v));
                rows[static_cast<std::size_t>(op.u)] &= ~SimpleGraph::bit(op.v);
                rows[static_cast<std::size_t>(op.v)] &= ~SimpleGraph::bit(op.u);
                break;
            }
            case MinorOp::Kind::kContractEdge: {
                check_alive(op.u, "contraction");
                check_alive(op.v, "contraction");
                if (!(rows[static_cast<std::size_t>(op.u)] & SimpleGraph::bit(op.v)))
                    throw Error("contraction: no edge between labels " + std::to_string(op.u) +
                                " and " + std::to_string(op.v));
                std::uint64_t merged = rows[static_cast<std::size_t>(op.v)];
                drop_vertex(op.v);
                rows[static_cast<std::size_t>(op.u)] |= merged & alive;
                rows[static_cast<std::size_t>(op.u)] &= ~SimpleGraph::bit(op.u);
                std::uint64_t nb = rows[static_cast<std::size_t>(op.u)];
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    rows[static_cast<std::size_t>(w)] |= SimpleGraph::bit(op.u);
                }
                break;
            }
        }
    }
    // Compact surviving labels in ascending order.
    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (alive & SimpleGraph::bit(v)) idx[static_cast<std::size_t>(v)] = k++;
    SimpleGraph out(k);
    for (int v = 0; v < n; ++v) {
        if (!(alive & SimpleGraph::bit(v))) continue;
        std::uint64_t nb = rows[static_cast<std::size_t>(v)];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w > v) out.add_edge(idx[static_cast<std::size_t>(v)], idx[static_cast<std::size_t>(w)]);
        }
    }
    return out;
}

// True iff replaying the witness script on `source` produces a graph
// isomorphic to the recorded result.
inline bool verify_witness(const MinorWitness& w, const SimpleGraph& source) {
    if (w.source_n != source.vertex_count()) return false;
    SimpleGraph got = replay_minor_ops(source, w.ops);
    if (got == w.result) return true;
    return is_isomorphic(got, w.result);
}

// Text format: '#' comments, then
//   source <id> <n>
//   one op line each: "D v" | "DE u v" | "C u v"
//   result <k> <m>
//   m edge lines "u v" in the result's 0-based labels.
inline void write_witness(std::ostream& out, const MinorWitness& w) {
    out << "# minor witness\n";
    out << "source " << w.source_id << " " << w.source_n << "\n";
    for (const MinorOp& op : w.ops) {
        switch (op.kind) {
            case MinorOp::Kind::kDeleteVertex: out << "D " << op.u << "\n"; break;
            case MinorOp::Kind::kDeleteEdge: out << "DE " << op.u << " " << op.v << "\n"; break;
            case MinorOp::Kind::kContractEdge: out << "C " << op.u << " " << op.v << "\n"; break;
        }
    }
    out << "result " << w.result.vertex_count() << " " << w.result.edge_count() << "\n";
    for (int u = 0; u < w.result.vertex_count(); ++u)
        for (int v = u + 1; v < w.result.vertex_count(); ++v)
            if (w.result.has_edge(u, v)) out << u << " " << v << "\n";
}

inline MinorWitness read_witness(std::istream& in) {
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
    MinorWitness w;
    std::string row;
    if (!next_line(row)) throw Error("witness file is empty");
    {
        std::istringstream ss(row);
        std::string kw;
        if (!(ss >> kw >> w.source_id >> w.source_n) || kw != "source")
            throw Error("expected 'source <id> <n>', got: '" + row + "'");
    }
    int k = -1, m = -1;
    for (;;) {
        if (!next_line(row)) throw Error("witness file ends before 'result' line");
        std::istringstream ss(row);
        std::string kw;
        ss >> kw;
        if (kw == "result") {
            if (!(ss >> k >> m)) throw Error("malformed result line: '" + row + "'");
            break;
        }
        MinorOp op;
        if (kw == "D") {
            op.kind = MinorOp::Kind::kDeleteVertex;
            if (!(ss >> op.u)) throw Error("malformed op line: '" + row + "'");
        } else if (kw == "DE") {
            op.kind = MinorOp::Kind::kDeleteEdge;
            if (!(ss >> op.u >> op.v)) throw Error("malformed op line: '" + row + "'");
        } else if (kw == "C") {
            op.kind = MinorOp::Kind::kContractEdge;
            if (!(ss >> op.u >> op.v)) throw Error("malformed op line: '" + row + "'");
        } else {
            throw Error("unknown witness line: '" + row + "'");
        }
        w.ops.push_back(op);
    }
    w.result = SimpleGraph(k);
    for (int e = 0; e < m; ++e) {
        if (!next_line(row))
            throw Error("witness result announces " + std::to_string(m) + " edges, file ends after " +
                        std::to_string(e));
        std::istringstream ss(row);
        int u, v;
        if (!(ss >> u >> v)) throw Error("malformed result edge line: '" + row + "'");
        w.result.add_edge(u, v);
    }
    return w;
}

}  // namespace dlab
