#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/hamilton.hpp"
#include "dlab/metrics.hpp"
#include "dlab/minor.hpp"
#include "dlab/util.hpp"

namespace dlab {

namespace detail {

inline std::uint64_t mask_of(const std::vector<int>& xs) {
    std::uint64_t m = 0;
    for (int v : xs) m |= SimpleGraph::bit(v);
    return m;
}

inline std::vector<int> vector_of(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Can v send two units of flow into the terminal set X, where every vertex
// outside X (and other than v) has capacity one and members of X absorb flow
// on arrival? Equivalent to two paths from v to two distinct members of X,
// disjoint except at v and meeting X only at their ends — exactly the
// condition for v to lie inside a simple path between two members of X.
inline bool two_legs_into(const SimpleGraph& g, int v, std::uint64_t xmask) {
    int n = g.vertex_count();
    // Nodes: u_in = u, u_out = u + n (only used for vertices outside X),
    // sink = 2n. The source is v_out.
    int N = 2 * n + 1;
    int sink = 2 * n;
    std::vector<std::vector<std::int8_t>> res(
        static_cast<std::size_t>(N), std::vector<std::int8_t>(static_cast<std::size_t>(N), 0));
    for (int u = 0; u < n; ++u) {
        if (xmask & SimpleGraph::bit(u)) {
            res[static_cast<std::size_t>(u)][static_cast<std::size_t>(sink)] = 1;
            continue;  // terminal: no pass-through
        }
        res[static_cast<std::size_t>(u)][static_cast<std::size_t>(u + n)] =
            static_cast<std::int8_t>(u == v ? 2 : 1);
    }
    for (int a = 0; a < n; ++a) {
        if (xmask & SimpleGraph::bit(a)) continue;
        std::uint64_t nb = g.neighbors(a);
        while (nb) {
            int b = std::countr_zero(nb);
            nb &= nb - 1;
            res[static_cast<std::size_t>(a + n)][static_cast<std::size_t>(b)] = 1;
        }
    }
    int source = v + n;
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(N));
    while (flow < 2) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<std::size_t>(source)] = source;
        std::vector<int> queue{source};
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(sink)] < 0; ++qi) {
            int u = queue[qi];
            for (int w = 0; w < N; ++w)
                if (prev[static_cast<std::size_t>(w)] < 0 &&
                    res[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0) {
                    prev[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0) break;
        for (int w = sink; w != source; ) {
            int u = prev[static_cast<std::size_t>(w)];
            --res[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
            ++res[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
            w = u;
        }
        ++flow;
    }
    return flow >= 2;
}

inline void validate_terminal_set(const SimpleGraph& g, const std::vector<int>& x) {
    if (x.size() < 2) throw Error("terminal set needs at least 2 vertices");
    std::uint64_t seen = 0;
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw Error("terminal vertex " + std::to_string(v) + " out of range");
        if (seen & SimpleGraph::bit(v))
            throw Error("terminal vertex " + std::to_string(v) + " repeated");
        seen |= SimpleGraph::bit(v);
    }
}

}  // namespace detail

// The vertices outside X that lie on some simple path whose two endpoints
// are distinct members of X, in ascending order.
inline std::vector<int> path_vertex_set(const SimpleGraph& g, const std::vector<int>& x) {
    detail::validate_terminal_set(g, x);
    std::uint64_t xmask = detail::mask_of(x);
    std::uint64_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!(xmask & SimpleGraph::bit(v)) && detail::two_legs_into(g, v, xmask))
            out |= SimpleGraph::bit(v);
    return detail::vector_of(out);
}

// Smallest U inside P(X) \ X whose removal leaves the members of X pairwise
// in different components; std::nullopt when no such U exists at all (the
// separator minimum over an empty family is infinite). Subsets are tried in
// ascending size and lexicographic order, so the witness is deterministic.
// max_size < 0 searches all of P(X) \ X; otherwise sizes up to max_size.
inline std::optional<std::vector<int>> min_separator(const SimpleGraph& g,
                                                     const std::vector<int>& x,
                                                     int max_size = -1) {
    detail::validate_terminal_set(g, x);
    std::uint64_t xmask = detail::mask_of(x);
    std::vector<int> cand = path_vertex_set(g, x);
    int c = static_cast<int>(cand.size());
    int cap = max_size < 0 ? c : std::min(max_size, c);
    auto separates = [&](std::uint64_t umask) {
        std::uint64_t allowed = g.all_vertices_mask() & ~umask;
        for (int xi : x) {
            std::uint64_t reach = g.reach_from(xi, allowed);
            if (reach & xmask & ~SimpleGraph::bit(xi)) return false;
        }
        return true;
    };
    std::vector<int> pick;
    auto combos = [&](auto&& self, int start, int remaining, std::uint64_t umask) -> bool {
        if (remaining == 0) return separates(umask);
        for (int i = start; i <= c - remaining; ++i) {
            pick.push_back(cand[static_cast<std::size_t>(i)]);
            if (self(self, i + 1, remaining - 1,
                     umask | SimpleGraph::bit(cand[static_cast<std::size_t>(i)])))
                return true;
            pick.pop_back();
        }
        return false;
    };
    for (int k = 0; k <= cap; ++k) {
        pick.clear();
        if (combos(combos, 0, k, 0)) return pick;
    }
    return std::nullopt;
}

// Minimum size of a separator of X drawn from its path vertex set, or
// std::nullopt when no subset separates X at all (an infinite minimum).
inline std::optional<int> min_separator_size(const SimpleGraph& g, const std::vector<int>& x) {
    auto u = min_separator(g, x);
    if (!u) return std::nullopt;
    return static_cast<int>(u->size());
}

// A witnessed failure of the criterion: the independent set X admits a
// separator inside P(X) \ X smaller than |X|.
struct SeparatorCertificate {
    std::vector<int> x;
    std::vector<int> separator;
};

struct PlotnikovReport {
    bool holds = true;
    std::optional<SeparatorCertificate> violation;
    std::uint64_t sets_checked = 0;
};

// Evaluates the criterion: for every independent set X with |X| >= 2, every
// separator of X inside P(X) \ X must have at least |X| vertices. Sets are
// enumerated in ascending lexicographic order and the first violation is
// reported.
inline PlotnikovReport evaluate_plotnikov(const SimpleGraph& g) {
    PlotnikovReport rep;
    int n = g.vertex_count();
    std::vector<int> xs;
    auto enumerate = [&](auto&& self, int start) -> bool {
        if (xs.size() >= 2) {
            ++rep.sets_checked;
            if (auto u = min_separator(g, xs, static_cast<int>(xs.size()) - 1)) {
                rep.holds = false;
                rep.violation = SeparatorCertificate{xs, *u};
                return true;
            }
        }
        for (int v = start; v < n; ++v) {
            bool independent = true;
            for (int w : xs)
                if (g.has_edge(w, v)) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            xs.push_back(v);
            if (self(self, v + 1)) return true;
            xs.pop_back();
        }
        return false;
    };
    enumerate(enumerate, 0);
    return rep;
}

inline bool plotnikov_holds(const SimpleGraph& g) { return evaluate_plotnikov(g).holds; }

// The four properties that make H a counterexample to the criterion: H is
// 2-connected, satisfies the criterion, has independence number at most 3,
// and still is not hamiltonian (with an exhaustive search certificate).
struct CounterexampleReport {
    int kappa = 0;
    bool two_connected = false;
    HamiltonResult ham;
    bool non_hamiltonian = false;
    int alpha = 0;
    bool alpha_at_most_3 = false;
    PlotnikovReport criterion;

    bool is_counterexample() const {
        return two_connected && non_hamiltonian && alpha_at_most_3 && criterion.holds;
    }
};

inline CounterexampleReport verify_counterexample(const SimpleGraph& h) {
    CounterexampleReport r;
    r.kappa = vertex_connectivity(h);
    r.two_connected = r.kappa >= 2;
    r.ham = find_hamiltonian_cycle(h);
    r.non_hamiltonian = r.ham.status == HamiltonResult::Status::kNone && r.ham.exhausted;
    r.alpha = independence_number(h);
    r.alpha_at_most_3 = r.alpha <= 3;
    r.criterion = evaluate_plotnikov(h);
    return r;
}

// ---------------------------------------------------------------------------
// Randomized search for a criterion counterexample among the minors of a
// source graph.

struct MineParams {
    std::uint64_t seed = 1;
    std::uint64_t budget = 20000;  // candidate partitions to examine
    unsigned jobs = 1;
    int min_parts = 9;
    int max_parts = 12;
    std::uint64_t dfs_node_cap = 3000;       // deletion-search nodes per candidate
    std::uint64_t ham_node_budget = 200000;  // per hamiltonicity call inside the search
};

struct MineOutcome {
    bool found = false;
    std::uint64_t candidates_tried = 0;
    MinorWitness witness;
    CounterexampleReport report;
};

namespace detail {

// Necessary condition derived from the criterion itself: in a 2-connected
// graph, a pair of vertices whose removal leaves three or more components
// yields an independent transversal of three components separated by a
// 2-element subset of its path vertex set. Any graph containing such a pair
// can therefore never verify as a counterexample, and edge deletions never
// remove the defect, so the search may prune on it.
inline bool has_overloaded_two_cut(const SimpleGraph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t allowed =
                g.all_vertices_mask() & ~SimpleGraph::bit(u) & ~SimpleGraph::bit(v);
            int comps = 0;
            std::uint64_t unseen = allowed;
            while (unseen && comps < 3) {
                int w = std::countr_zero(unseen);
                unseen &= ~g.reach_from(w, allowed);
                ++comps;
            }
            if (comps >= 3) return true;
        }
    return false;
}

// The three prunes are all preserved under further edge deletion, so a
// subtree can be abandoned as soon as one fails; a hamiltonian survivor must
// lose at least one edge of any one of its hamiltonian cycles, so branching
// on the edges of a single found cycle keeps the search complete over the
// spanning subgraphs of the root.
struct DeletionSearch {
    const MineParams& params;
    std::uint64_t nodes = 0;
    std::set<std::vector<std::uint64_t>> seen;

    explicit DeletionSearch(const MineParams& p) : params(p) {}

    static std::vector<std::uint64_t> key_of(const SimpleGraph& g) {
        std::vector<std::uint64_t> key(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) key[static_cast<std::size_t>(v)] = g.neighbors(v);
        return key;
    }

    std::optional<SimpleGraph> run(const SimpleGraph& g) {
        if (++nodes > params.dfs_node_cap) return std::nullopt;
        if (!seen.insert(key_of(g)).second) return std::nullopt;
        if (independence_number(g) > 3) return std::nullopt;
        if (vertex_connectivity(g) < 2) return std::nullopt;
        if (has_overloaded_two_cut(g)) return std::nullopt;
        HamiltonResult ham = find_hamiltonian_cycle(g, params.ham_node_budget);
        if (ham.status == HamiltonResult::Status::kUnknown) return std::nullopt;
        if (ham.status == HamiltonResult::Status::kNone) return g;
        int n = static_cast<int>(ham.cycle.size());
        for (int i = 0; i < n; ++i) {
            int u = ham.cycle[static_cast<std::size_t>(i)];
            int v = ham.cycle[static_cast<std::size_t>((i + 1) % n)];
            SimpleGraph child = g;
            child.remove_edge(u, v);
            if (auto hit = run(child)) return hit;
        }
        return std::nullopt;
    }
};

struct CandidateResult {
    std::vector<std::uint64_t> parts;  // branch-set masks, ascending min vertex
    SimpleGraph quotient;              // the surviving subgraph of the quotient
};

// One seeded candidate: draw a random connected partition of the source
// into k parts by repeatedly merging adjacent parts, filter the quotient,
// then run the deletion search below it.
inline std::optional<CandidateResult> try_candidate(const SimpleGraph& source,
                                                    std::uint64_t seed, std::uint64_t index,
                                                    const MineParams& params) {
    std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(index + 0xab1eull));
    int n = source.vertex_count();
    int span = params.max_parts - params.min_parts + 1;
    int k = params.min_parts + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    if (k >= n) return std::nullopt;
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(v)] = SimpleGraph::bit(v);
    auto adjacent = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t m = a;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (source.neighbors(v) & b) return true;
        }
        return false;
    };
    while (static_cast<int>(parts.size()) > k) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                if (adjacent(parts[a], parts[b])) pairs.emplace_back(a, b);
        if (pairs.empty()) return std::nullopt;
        auto [a, b] = pairs[static_cast<std::size_t>(rng() % pairs.size())];
        parts[a] |= parts[b];
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
    }
    std::sort(parts.begin(), parts.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    SimpleGraph q(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (adjacent(parts[static_cast<std::size_t>(a)], parts[static_cast<std::size_t>(b)]))
                q.add_edge(a, b);
    if (independence_number(q) > 3) return std::nullopt;
    if (vertex_connectivity(q) < 2) return std::nullopt;
    if (has_overloaded_two_cut(q)) return std::nullopt;
    DeletionSearch search(params);
    if (auto hit = search.run(q))
        return CandidateResult{std::move(parts), std::move(*hit)};
    return std::nullopt;
}

// Certificate assembly: delete the cross edges of dropped quotient pairs
// while all labels are still original, then contract each branch set onto
// its minimum label in breadth-first order. Ascending surviving labels then
// match the quotient's vertex order, so the replay reproduces the result
// graph exactly.
inline MinorWitness witness_from(const SimpleGraph& source, const std::string& source_id,
                                 const CandidateResult& cand) {
    int n = source.vertex_count();
    int k = static_cast<int>(cand.parts.size());
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < k; ++p) {
        std::uint64_t m = cand.parts[static_cast<std::size_t>(p)];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            part_of[static_cast<std::size_t>(v)] = p;
        }
    }
    MinorWitness w;
    w.source_id = source_id;
    w.source_n = n;
    w.result = cand.quotient;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!source.has_edge(u, v)) continue;
            int pu = part_of[static_cast<std::size_t>(u)], pv = part_of[static_cast<std::size_t>(v)];
            if (pu != pv && !cand.quotient.has_edge(pu, pv))
                w.ops.push_back(MinorOp{MinorOp::Kind::kDeleteEdge, u, v});
        }
    for (int p = 0; p < k; ++p) {
        std::uint64_t mask = cand.parts[static_cast<std::size_t>(p)];
        int root = std::countr_zero(mask);
        std::uint64_t merged = SimpleGraph::bit(root);
        std::uint64_t frontier = merged;
        while (merged != mask) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= source.neighbors(v) & mask & ~merged;
            }
            std::uint64_t nf = next;
            while (nf) {
                int v = std::countr_zero(nf);
                nf &= nf - 1;
                w.ops.push_back(MinorOp{MinorOp::Kind::kContractEdge, root, v});
            }
            merged |= next;
            frontier = next;
        }
    }
    return w;
}

}  // namespace detail

// Searches minors of `source` for a counterexample to the criterion.
// Candidates are independently seeded, so runs are reproducible for a fixed
// seed regardless of the job count, and a NOT_FOUND outcome can be resumed
// with a fresh seed. The first success by candidate index wins.
inline MineOutcome mine_counterexample(const SimpleGraph& source, const std::string& source_id,
                                       const MineParams& params) {
    MineOutcome out;
    std::uint64_t block = std::max<std::uint64_t>(std::uint64_t{params.jobs} * 4, 64);
    for (std::uint64_t start = 0; start < params.budget && !out.found; start += block) {
        std::uint64_t count = std::min(block, params.budget - start);
        std::vector<std::optional<detail::CandidateResult>> results(static_cast<std::size_t>(count));
        std::atomic<std::uint64_t> best{count};
        parallel_for(static_cast<std::size_t>(count), params.jobs, [&](std::size_t i) {
            if (i > best.load()) return;  // a lower index already succeeded
            auto r = detail::try_candidate(source, params.seed, start + i, params);
            if (r) {
                results[i] = std::move(r);
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        });
        std::uint64_t hit = count;
        for (std::uint64_t i = 0; i < count; ++i)
            if (results[static_cast<std::size_t>(i)]) {
                hit = i;
                break;
            }
        if (hit == count) {
            out.candidates_tried = start + count;
            continue;
        }
        out.candidates_tried = start + hit + 1;
        const detail::CandidateResult& cand = *results[static_cast<std::size_t>(hit)];
        out.report = verify_counterexample(cand.quotient);
        if (!out.report.is_counterexample())
            throw Error("mining produced a candidate that fails verification");
        out.witness = detail::witness_from(source, source_id, cand);
        if (!verify_witness(out.witness, source))
            throw Error("mining produced a witness that fails replay");
        out.found = true;
    }
    return out;
}

}  // namespace dlab
