#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dlab/geometry.hpp"
#include "dlab/util.hpp"

namespace dlab {

// Combinatorial fingerprint of a labelled point set up to relabelling:
// the lexicographically smallest orientation bit string over all labelings
// (and, when reflection is identified, over both chiralities). Two sets have
// the same order type exactly when their signatures coincide.
//
// Encoding: triples are visited in incremental groups, for m = 2..n-1 and
// then pairs i < j < m in lexicographic (i, j) order; each triple contributes
// one bit, 1 for a positive (counter-clockwise) orientation and 0 for a
// negative one. Bits are packed most-significant-first into bytes, with zero
// padding in the final byte.
struct OrderTypeSignature {
    int n = 0;
    std::vector<std::uint8_t> bytes;
    friend bool operator==(const OrderTypeSignature&, const OrderTypeSignature&) = default;
    friend auto operator<=>(const OrderTypeSignature&, const OrderTypeSignature&) = default;
    std::string hex() const { return to_hex(bytes); }
};

namespace detail {

// Dense table of orientation signs for all ordered triples of a point set.
struct SignTable {
    int n = 0;
    std::vector<std::int8_t> s;  // index (i*n + j)*n + k

    std::int8_t at(int i, int j, int k) const {
        return s[static_cast<std::size_t>((i * n + j) * n + k)];
    }

    SignTable negated() const {
        SignTable t = *this;
        for (auto& v : t.s) v = static_cast<std::int8_t>(-v);
        return t;
    }
};

inline SignTable make_sign_table(const PointSet& ps) {
    SignTable t;
    t.n = ps.size();
    t.s.assign(static_cast<std::size_t>(t.n) * t.n * t.n, 0);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            for (int k = 0; k < t.n; ++k)
                if (i != j && j != k && i != k)
                    t.s[static_cast<std::size_t>((i * t.n + j) * t.n + k)] =
                        static_cast<std::int8_t>(orient(ps[i], ps[j], ps[k]));
    return t;
}

inline std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

struct CanonicalLabeling {
    std::vector<std::uint8_t> bits;  // unpacked 0/1, one per triple
    std::vector<int> perm;           // perm[slot] = original point index
};

// Branch-and-bound computation of the lex-min bit string over all n!
// labelings. Partial labelings are extended one point at a time; each new
// point m contributes the block of bits for the pairs i < j < m, so any
// labeling whose block compares greater than the best block at this level
// can never reach the minimum and is dropped. The survivors (ties) carry on.
inline CanonicalLabeling bnb_canonical(const SignTable& t) {
    int n = t.n;
    CanonicalLabeling out;
    if (n == 2) {
        out.perm = {0, 1};
        return out;
    }
    std::vector<std::vector<std::uint8_t>> frontier;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) frontier.push_back({static_cast<std::uint8_t>(a),
                                            static_cast<std::uint8_t>(b)});
    std::vector<std::uint8_t> block, best;
    for (int m = 2; m < n; ++m) {
        best.clear();
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& p : frontier) {
            std::uint64_t used = 0;
            for (std::uint8_t v : p) used |= std::uint64_t{1} << v;
            for (int c = 0; c < n; ++c) {
                if (used & (std::uint64_t{1} << c)) continue;
                block.clear();
                for (int j = 1; j < m; ++j)
                    for (int i = 0; i < j; ++i)
                        block.push_back(t.at(p[static_cast<std::size_t>(i)],
                                             p[static_cast<std::size_t>(j)], c) > 0);
                if (best.empty() || block < best) {
                    best = block;
                    next.clear();
                }
                if (block == best) {
                    next.push_back(p);
                    next.back().push_back(static_cast<std::uint8_t>(c));
                }
            }
        }
        frontier = std::move(next);
        out.bits.insert(out.bits.end(), best.begin(), best.end());
        if (frontier.size() > 200000)
            throw Error("canonical labeling frontier exceeded safety cap");
    }
    out.perm.assign(frontier.front().begin(), frontier.front().end());
    return out;
}

}  // namespace detail

// Canonical signature of the order type. With include_reflection the mirror
// image (all orientation signs negated) competes for the minimum too, so a
// set and its reflection share one signature.
inline OrderTypeSignature canonical_signature(const PointSet& ps, bool include_reflection = true) {
    detail::SignTable t = detail::make_sign_table(ps);
    detail::CanonicalLabeling c = detail::bnb_canonical(t);
    if (include_reflection) {
        detail::CanonicalLabeling r = detail::bnb_canonical(t.negated());
        if (r.bits < c.bits) c = std::move(r);
    }
    return OrderTypeSignature{ps.size(), detail::pack_bits(c.bits)};
}

// Chirality-sensitive equality: a set and its mirror image compare unequal
// unless the order type happens to be symmetric.
inline bool same_order_type(const PointSet& p, const PointSet& q) {
    if (p.size() != q.size()) return false;
    return canonical_signature(p, false) == canonical_signature(q, false);
}

// Orientation-preserving index bijection gamma with
// orient(p_a, p_b, p_c) == orient(q_gamma(a), q_gamma(b), q_gamma(c)) for all
// triples, if one exists. Built from the two canonical labelings, which
// agree position-by-position whenever the chirality-sensitive signatures do.
inline std::optional<std::vector<int>> order_type_bijection(const PointSet& p,
                                                            const PointSet& q) {
    if (p.size() != q.size()) return std::nullopt;
    detail::CanonicalLabeling cp = detail::bnb_canonical(detail::make_sign_table(p));
    detail::CanonicalLabeling cq = detail::bnb_canonical(detail::make_sign_table(q));
    if (cp.bits != cq.bits) return std::nullopt;
    std::vector<int> gamma(static_cast<std::size_t>(p.size()));
    for (int slot = 0; slot < p.size(); ++slot)
        gamma[static_cast<std::size_t>(cp.perm[static_cast<std::size_t>(slot)])] =
            cq.perm[static_cast<std::size_t>(slot)];
    return gamma;
}

// Published number of distinct order types (reflections identified) of n
// points in general position, for the sizes with exhaustively known lists.
inline std::optional<std::uint64_t> known_order_type_count(int n) {
    switch (n) {
        case 2: return 1;
        case 3: return 1;
        case 4: return 2;
        case 5: return 3;
        case 6: return 16;
        case 7: return 135;
        case 8: return 3315;
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Randomized order-type census.

struct Census {
    // First-encountered representative per signature (earliest trial wins).
    std::map<OrderTypeSignature, PointSet> representatives;
    // (1-based trial index, cumulative distinct count) at each new discovery.
    std::vector<std::pair<std::uint64_t, std::size_t>> milestones;
    std::uint64_t trials = 0;
};

namespace detail {

// Trials are processed in fixed-size blocks, each with its own RNG stream
// derived from (seed, block). The sampled coordinates for trial t therefore
// depend only on seed and t, never on the trial budget or the thread count.
inline constexpr std::uint64_t kCensusBlock = 16384;

struct CensusHit {
    std::uint64_t trial = 0;  // 1-based
    OrderTypeSignature sig;
    std::vector<Point> rep;
};

inline std::vector<CensusHit> census_block(int n, std::uint64_t block, std::uint64_t first_trial,
                                           std::uint64_t count, std::uint64_t seed,
                                           bool include_reflection, std::int64_t range) {
    std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(block + 0x51ab1ull));
    bool pow2 = (range & (range - 1)) == 0;
    auto draw = [&]() -> std::int64_t {
        std::uint64_t r = rng();
        return static_cast<std::int64_t>(pow2 ? (r & static_cast<std::uint64_t>(range - 1))
                                              : (r % static_cast<std::uint64_t>(range)));
    };
    std::map<OrderTypeSignature, std::pair<std::uint64_t, std::vector<Point>>> seen;
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (std::uint64_t t = 0; t < count; ++t) {
        for (;;) {  // redraw the whole set until it is in general position
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                pts[static_cast<std::size_t>(i)] = Point{draw(), draw()};
                for (int a = 0; a < i && ok; ++a) {
                    if (pts[static_cast<std::size_t>(a)] == pts[static_cast<std::size_t>(i)])
                        ok = false;
                    for (int b = a + 1; b < i && ok; ++b)
                        if (orient(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                                   pts[static_cast<std::size_t>(i)]) == 0)
                            ok = false;
                }
            }
            if (ok) break;
        }
        PointSet ps(pts);
        OrderTypeSignature sig = canonical_signature(ps, include_reflection);
        auto it = seen.find(sig);
        if (it == seen.end()) seen.emplace(std::move(sig), std::make_pair(first_trial + t, pts));
    }
    std::vector<CensusHit> hits;
    hits.reserve(seen.size());
    for (auto& [sig, val] : seen)
        hits.push_back(CensusHit{val.first, sig, std::move(val.second)});
    std::sort(hits.begin(), hits.end(),
              [](const CensusHit& a, const CensusHit& b) { return a.trial < b.trial; });
    return hits;
}

}  // namespace detail

// Samples `trials` random n-point sets with coordinates in [0, coord_range)
// (rejecting degenerate draws) and collects the distinct order types found.
// Deterministic for a fixed seed independently of the job count.
inline Census census(int n, std::uint64_t trials, std::uint64_t seed,
                     bool include_reflection = true, unsigned jobs = 1,
                     std::int64_t coord_range = 65536) {
    if (n < 3 || n > 8) throw Error("census supports 3 <= n <= 8, got " + std::to_string(n));
    if (coord_range < 4 || coord_range >= kCoordBound) throw Error("census coordinate range out of bounds");
    Census out;
    out.trials = trials;
    std::uint64_t blocks = (trials + detail::kCensusBlock - 1) / detail::kCensusBlock;
    std::vector<std::vector<detail::CensusHit>> per_block(static_cast<std::size_t>(blocks));
    parallel_for(blocks, jobs, [&](std::size_t b) {
        std::uint64_t first = static_cast<std::uint64_t>(b) * detail::kCensusBlock;
        std::uint64_t count = std::min(detail::kCensusBlock, trials - first);
        per_block[b] = detail::census_block(n, b, first + 1, count, seed, include_reflection,
                                            coord_range);
    });
    std::vector<detail::CensusHit> all;
    for (auto& v : per_block)
        for (auto& h : v) all.push_back(std::move(h));
    std::sort(all.begin(), all.end(),
              [](const detail::CensusHit& a, const detail::CensusHit& b) { return a.trial < b.trial; });
    for (auto& h : all) {
        if (out.representatives.contains(h.sig)) continue;
        out.representatives.emplace(std::move(h.sig), PointSet(std::move(h.rep)));
        out.milestones.emplace_back(h.trial, out.representatives.size());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Order-type database files: fixed-size binary records, one labelled point
// set each, n points by two unsigned little-endian coordinates of one byte
// for n <= 8 and two bytes for n in {9, 10}.

inline int database_coord_bytes(int n) { return n <= 8 ? 1 : 2; }

inline std::string database_filename(int n) {
    return n < 10 ? "otypes0" + std::to_string(n) + ".bin" : "otypes10.bin";
}

// Streams every record through fn(record_index, PointSet). Validates record
// framing, coordinate ranges, distinctness, general position, and — for the
// exhaustively known sizes 6, 7, 8 — the total record count.
template <class Fn>
void for_each_database_record(const std::string& path, int n, Fn&& fn) {
    if (n < 3 || n > 10)
        throw Error("database point count must be in [3, 10], got " + std::to_string(n));
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open database file: " + path);
    int cb = database_coord_bytes(n);
    std::size_t record_size = static_cast<std::size_t>(n) * 2 * static_cast<std::size_t>(cb);
    std::vector<unsigned char> buf(record_size);
    std::uint64_t offset = 0;
    std::uint64_t records = 0;
    for (;;) {
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(record_size));
        std::streamsize got = in.gcount();
        if (got == 0) break;
        if (static_cast<std::size_t>(got) != record_size)
            throw IngestError("truncated record (file size is not a multiple of " +
                                  std::to_string(record_size) + " bytes) at byte offset " +
                                  std::to_string(offset),
                              offset);
        std::vector<Point> pts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::uint64_t x = 0, y = 0;
            for (int b = 0; b < cb; ++b) {
                x |= static_cast<std::uint64_t>(buf[static_cast<std::size_t>((2 * i) * cb + b)])
                     << (8 * b);
                y |= static_cast<std::uint64_t>(buf[static_cast<std::size_t>((2 * i + 1) * cb + b)])
                     << (8 * b);
            }
            pts[static_cast<std::size_t>(i)] =
                Point{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
        }
        try {
            fn(records, PointSet(std::move(pts)));
        } catch (const Error& e) {
            throw IngestError("record " + std::to_string(records) + " at byte offset " +
                                  std::to_string(offset) + ": " + e.what(),
                              offset);
        }
        ++records;
        offset += record_size;
    }
    if (auto want = known_order_type_count(n); want && n >= 6 && records != *want)
        throw IngestError("database for n=" + std::to_string(n) + " holds " +
                              std::to_string(records) + " records, expected " +
                              std::to_string(*want),
                          offset);
    if (records == 0) throw IngestError("database file is empty: " + path, 0);
}

inline std::vector<PointSet> ingest_database(const std::string& path, int n) {
    std::vector<PointSet> out;
    if (auto want = known_order_type_count(n)) out.reserve(static_cast<std::size_t>(*want));
    for_each_database_record(path, n, [&](std::uint64_t, PointSet ps) { out.push_back(std::move(ps)); });
    return out;
}

inline void write_database(const std::string& path, const std::vector<PointSet>& sets, int n) {
    if (n < 3 || n > 10)
        throw Error("database point count must be in [3, 10], got " + std::to_string(n));
    int cb = database_coord_bytes(n);
    std::int64_t limit = std::int64_t{1} << (8 * cb);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create database file: " + path);
    for (const PointSet& ps : sets) {
        if (ps.size() != n) throw Error("record size mismatch while writing database");
        for (int i = 0; i < n; ++i) {
            const Point& p = ps[i];
            if (p.x < 0 || p.x >= limit || p.y < 0 || p.y >= limit)
                throw Error("coordinate outside database range while writing");
            for (int b = 0; b < cb; ++b)
                out.put(static_cast<char>((static_cast<std::uint64_t>(p.x) >> (8 * b)) & 0xff));
            for (int b = 0; b < cb; ++b)
                out.put(static_cast<char>((static_cast<std::uint64_t>(p.y) >> (8 * b)) & 0xff));
        }
    }
    if (!out) throw Error("write failure on database file: " + path);
}

}  // namespace dlab
