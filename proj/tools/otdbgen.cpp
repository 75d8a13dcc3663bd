// Generates the order-type database files otypes03.bin .. otypes08.bin on
// the 8-bit grid by incremental one-point extension.
//
// Method: every order type of n points, restricted to the grid, arises from
// some (n-1)-point realization by adding one more grid point. For a fixed
// parent realization, two candidate points yield the same extended order
// type whenever they induce the same orientation sign for every parent pair,
// i.e. whenever they lie in the same cell of the arrangement of the
// C(n-1,2) spanned lines — so one candidate per cell suffices. Extending
// every stored realization and deduplicating by canonical signature either
// reaches the published class count (which certifies completeness, since
// signatures are distinct by construction and the published total is exact)
// or the tool fails loudly.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"

#include "dlab/geometry.hpp"
#include "dlab/ordertype.hpp"
#include "dlab/util.hpp"

namespace {

constexpr std::int64_t kGrid = 256;

struct Realization {
    std::vector<dlab::Point> pts;
    std::int64_t fatness = 0;  // min |orientation determinant| over triples
};

using Pool = std::map<dlab::OrderTypeSignature, std::vector<Realization>>;

std::int64_t fatness_of(const std::vector<dlab::Point>& pts) {
    std::int64_t fat = INT64_MAX;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::int64_t det = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                                   (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                fat = std::min(fat, det < 0 ? -det : det);
            }
    return fat == INT64_MAX ? 0 : fat;
}

// Extension needs empty space around the parent: a parent hugging the grid
// boundary can never gain a new extreme point. Translate to the origin and
// halve coordinates while that provably preserves the order type (checked by
// chirality-sensitive signature comparison), aiming below the quarter grid.
std::vector<dlab::Point> normalize(std::vector<dlab::Point> pts) {
    auto translate = [&] {
        std::int64_t mx = INT64_MAX, my = INT64_MAX;
        for (const dlab::Point& p : pts) {
            mx = std::min(mx, p.x);
            my = std::min(my, p.y);
        }
        for (dlab::Point& p : pts) {
            p.x -= mx;
            p.y -= my;
        }
    };
    auto max_coord = [&] {
        std::int64_t m = 0;
        for (const dlab::Point& p : pts) m = std::max({m, p.x, p.y});
        return m;
    };
    translate();
    dlab::OrderTypeSignature sig = dlab::canonical_signature(dlab::PointSet(pts), false);
    while (max_coord() >= kGrid / 2) {
        std::vector<dlab::Point> half = pts;
        for (dlab::Point& p : half) {
            p.x /= 2;
            p.y /= 2;
        }
        try {
            if (dlab::canonical_signature(dlab::PointSet(half), false) != sig) break;
        } catch (const dlab::Error&) {
            break;  // halving collapsed points or broke general position
        }
        pts = std::move(half);
        translate();
    }
    return pts;
}

void keep_best(std::vector<Realization>& reps, Realization cand, int cap) {
    for (const Realization& r : reps)
        if (r.pts == cand.pts) return;
    reps.push_back(std::move(cand));
    std::sort(reps.begin(), reps.end(),
              [](const Realization& a, const Realization& b) { return a.fatness > b.fatness; });
    if (static_cast<int>(reps.size()) > cap) reps.resize(static_cast<std::size_t>(cap));
}

std::vector<dlab::Point> translate_to_origin(std::vector<dlab::Point> pts) {
    std::int64_t mx = INT64_MAX, my = INT64_MAX;
    for (const dlab::Point& p : pts) {
        mx = std::min(mx, p.x);
        my = std::min(my, p.y);
    }
    for (dlab::Point& p : pts) {
        p.x -= mx;
        p.y -= my;
    }
    return pts;
}

// Sweep the whole grid, keep one candidate per arrangement cell of the lines
// spanned by parent pairs (the one maximizing its smallest |determinant|),
// and return each extended realization with its canonical signature. Output
// is sorted so callers merge deterministically.
std::vector<std::pair<dlab::OrderTypeSignature, Realization>> scan_parent(
    const std::vector<dlab::Point>& parent_pts) {
    int k = static_cast<int>(parent_pts.size());
    std::unordered_map<std::uint32_t, std::pair<dlab::Point, std::int64_t>> cells;
    for (std::int64_t x = 0; x < kGrid; ++x)
        for (std::int64_t y = 0; y < kGrid; ++y) {
            dlab::Point q{x, y};
            bool skip = false;
            for (const dlab::Point& p : parent_pts)
                if (p == q) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            std::uint32_t key = 0;
            std::int64_t min_abs = INT64_MAX;
            int idx = 0;
            for (int i = 0; i < k && !skip; ++i)
                for (int j = i + 1; j < k; ++j, ++idx) {
                    const dlab::Point& a = parent_pts[static_cast<std::size_t>(i)];
                    const dlab::Point& b = parent_pts[static_cast<std::size_t>(j)];
                    std::int64_t det =
                        (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
                    if (det == 0) {
                        skip = true;
                        break;
                    }
                    if (det > 0) key |= std::uint32_t{1} << idx;
                    min_abs = std::min(min_abs, det < 0 ? -det : det);
                }
            if (skip) continue;
            auto it = cells.find(key);
            if (it == cells.end() || min_abs > it->second.second)
                cells[key] = {q, min_abs};
        }
    std::vector<std::pair<dlab::OrderTypeSignature, Realization>> out;
    out.reserve(cells.size());
    for (const auto& [key, best] : cells) {
        (void)key;
        std::vector<dlab::Point> pts = parent_pts;
        pts.push_back(best.first);
        dlab::PointSet ps(pts);
        out.emplace_back(dlab::canonical_signature(ps, true),
                         Realization{std::move(pts), fatness_of(ps.points())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.pts < b.second.pts;
    });
    return out;
}

Pool extend(const Pool& parents, int reps_per_class) {
    Pool next;
    for (const auto& [sig, reps] : parents) {
        (void)sig;
        for (const Realization& stored : reps) {
            // Two parent variants: compacted (repeatedly halved) for room to
            // grow outward, and translate-only for full coordinate precision.
            std::vector<std::vector<dlab::Point>> variants;
            variants.push_back(normalize(stored.pts));
            std::vector<dlab::Point> shifted = translate_to_origin(stored.pts);
            if (shifted != variants.front()) variants.push_back(std::move(shifted));
            for (const auto& parent_pts : variants)
                for (auto& [s, real] : scan_parent(parent_pts))
                    keep_best(next[s], std::move(real), reps_per_class);
        }
    }
    return next;
}

// Extension from one generation of parents can miss a few classes: storing
// only the fattest realizations per class trades away the near-degenerate
// shapes some children require. The closure pass recovers them by local
// search over the found realizations themselves: delete each point of each
// stored n-set, rescan the resulting (n-1)-point parent at full precision,
// and iterate on whatever new classes appear until the published count is
// reached or no unscanned parent remains.
void closure_pass(Pool& pool, std::uint64_t want, unsigned jobs) {
    std::deque<std::vector<dlab::Point>> frontier;
    for (const auto& [sig, reps] : pool) {
        (void)sig;
        for (const Realization& r : reps) frontier.push_back(r.pts);
    }
    std::set<std::vector<dlab::Point>> scanned;
    std::deque<std::vector<dlab::Point>> parents;
    const std::size_t chunk = std::max<std::size_t>(64, std::size_t{jobs} * 16);
    while (pool.size() < want) {
        while (parents.size() < chunk && !frontier.empty()) {
            std::vector<dlab::Point> whole = std::move(frontier.front());
            frontier.pop_front();
            for (std::size_t d = 0; d < whole.size(); ++d) {
                std::vector<dlab::Point> parent = whole;
                parent.erase(parent.begin() + static_cast<std::ptrdiff_t>(d));
                parent = translate_to_origin(std::move(parent));
                if (scanned.insert(parent).second) parents.push_back(std::move(parent));
            }
        }
        if (parents.empty()) break;
        std::size_t take = std::min(chunk, parents.size());
        std::vector<std::vector<dlab::Point>> batch(
            std::make_move_iterator(parents.begin()),
            std::make_move_iterator(parents.begin() + static_cast<std::ptrdiff_t>(take)));
        parents.erase(parents.begin(), parents.begin() + static_cast<std::ptrdiff_t>(take));
        std::vector<std::vector<std::pair<dlab::OrderTypeSignature, Realization>>> found(take);
        dlab::parallel_for(take, jobs,
                           [&](std::size_t i) { found[i] = scan_parent(batch[i]); });
        for (auto& per_parent : found)
            for (auto& [s, real] : per_parent)
                if (pool.find(s) == pool.end()) {
                    frontier.push_back(real.pts);
                    pool.emplace(s, std::vector<Realization>{std::move(real)});
                    if (pool.size() >= want) return;
                }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-type database generator (8-bit grid)"};
    std::string out_dir = "data";
    int max_n = 8;
    int reps_per_class = 6;
    unsigned jobs = dlab::default_jobs();
    app.add_option("--out-dir", out_dir, "output directory for otypes*.bin");
    app.add_option("--max-n", max_n, "largest point count to generate")
        ->check(CLI::Range(3, 8));
    app.add_option("--reps-per-class", reps_per_class,
                   "stored realizations per class used as extension parents")
        ->check(CLI::Range(1, 64));
    app.add_option("--jobs", jobs, "worker threads for the closure pass")
        ->check(CLI::Range(1u, 256u));
    CLI11_PARSE(app, argc, argv);

    try {
        Pool pool;
        {
            std::vector<dlab::Point> base{{0, 0}, {kGrid - 1, 0}};
            dlab::PointSet ps(base);
            pool[dlab::canonical_signature(ps, true)] = {Realization{base, 0}};
        }
        for (int n = 3; n <= max_n; ++n) {
            pool = extend(pool, reps_per_class);
            auto want = dlab::known_order_type_count(n);
            if (want && pool.size() < *want) {
                std::cout << "n=" << n << ": " << pool.size() << " of " << *want
                          << " after extension, running closure pass\n";
                closure_pass(pool, *want, jobs);
            }
            std::cout << "n=" << n << ": " << pool.size() << " order types (expected "
                      << (want ? std::to_string(*want) : std::string("?")) << ")\n";
            if (want && pool.size() != *want) {
                std::cerr << "class count mismatch at n=" << n
                          << "; rerun with a larger --reps-per-class\n";
                return 1;
            }
            std::vector<dlab::PointSet> out;
            out.reserve(pool.size());
            for (const auto& [sig, reps] : pool) {
                (void)sig;
                out.emplace_back(reps.front().pts);
            }
            std::string path = out_dir + "/" + dlab::database_filename(n);
            dlab::write_database(path, out, n);
            std::cout << "  wrote " << path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
