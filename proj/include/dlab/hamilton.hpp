#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/util.hpp"

namespace dlab {

// Outcome of an exact hamiltonicity search. A kNone verdict is always
// accompanied by exhausted == true and the node count, so negative answers
// carry an explicit exhaustion certificate. kUnknown only appears when a
// caller-supplied node budget ran out.
struct HamiltonResult {
    enum class Status { kFound, kNone, kUnknown };
    Status status = Status::kUnknown;
    std::vector<int> cycle;    // vertex order starting at 0; empty unless kFound
    std::uint64_t nodes = 0;   // search-tree nodes expanded
    bool exhausted = false;    // true iff the whole search space was covered
};

inline bool verify_cycle(const SimpleGraph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (n < 3 || static_cast<int>(order.size()) != n) return false;
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= n || (seen & SimpleGraph::bit(v))) return false;
        seen |= SimpleGraph::bit(v);
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(order[static_cast<std::size_t>(i)],
                        order[static_cast<std::size_t>((i + 1) % n)]))
            return false;
    return true;
}

namespace detail {

struct HamSearch {
    const SimpleGraph& g;
    int n;
    std::uint64_t all;
    std::uint64_t budget;  // 0 = unlimited
    HamiltonResult res;
    std::vector<int> path;

    explicit HamSearch(const SimpleGraph& graph, std::uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), all(graph.all_vertices_mask()), budget(node_budget) {}

    // Cheap necessary conditions on the set of unvisited vertices. `cur` is
    // the path head, vertex 0 the fixed tail the cycle must return to.
    bool viable(int cur, std::uint64_t visited) const {
        std::uint64_t free = all & ~visited;
        if (!free) return true;
        // The closing edge needs a free neighbor of 0 (or cur~0 when done,
        // handled at the leaf).
        if (!(g.neighbors(0) & free)) return false;
        std::uint64_t ends = SimpleGraph::bit(cur) | SimpleGraph::bit(0);
        std::uint64_t f = free;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            // v still needs two incident cycle edges among free vertices and
            // the two path ends.
            if (std::popcount(g.neighbors(v) & (free | ends)) < 2) return false;
        }
        // Every free vertex must be reachable from cur without re-entering
        // the visited interior.
        std::uint64_t reached = g.reach_from(cur, free | SimpleGraph::bit(cur));
        return (reached & free) == free;
    }

    // Returns true once a cycle is found or the budget is exhausted.
    bool dfs(int cur, std::uint64_t visited) {
        ++res.nodes;
        if (budget != 0 && res.nodes > budget) {
            res.status = HamiltonResult::Status::kUnknown;
            return true;
        }
        if (visited == all) {
            if (g.has_edge(cur, 0)) {
                res.status = HamiltonResult::Status::kFound;
                res.cycle = path;
                return true;
            }
            return false;
        }
        if (!viable(cur, visited)) return false;
        std::uint64_t cand = g.neighbors(cur) & ~visited;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            if (dfs(v, visited | SimpleGraph::bit(v))) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// Deterministic exact search: the path is rooted at vertex 0 and branches in
// ascending vertex order, so the returned cycle is reproducible across runs.
// node_budget == 0 searches without limit.
inline HamiltonResult find_hamiltonian_cycle(const SimpleGraph& g, std::uint64_t node_budget = 0) {
    detail::HamSearch s(g, node_budget);
    if (s.n < 3) {
        s.res.status = HamiltonResult::Status::kNone;
        s.res.exhausted = true;
        return s.res;
    }
    s.path.push_back(0);
    bool stopped = s.dfs(0, SimpleGraph::bit(0));
    if (!stopped) {
        s.res.status = HamiltonResult::Status::kNone;
        s.res.exhausted = true;
    }
    return s.res;
}

// Reference decision by explicit permutation enumeration, usable as an
// independent cross-check for graphs of at most 12 vertices. Fixes vertex 0
// and walks every ordering of the rest, halving the work by orienting each
// cycle so its second vertex is smaller than its last.
inline bool brute_force_hamiltonian(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 12) throw Error("brute-force hamiltonicity limited to 12 vertices, got " +
                            std::to_string(n));
    if (n < 3) return false;
    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (perm.front() > perm.back()) continue;
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace dlab
