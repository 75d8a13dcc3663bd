#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dlab {

// Base class for all toolkit errors so the CLI can map them to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates the general-position requirement; names the offending triple.
struct GeneralPositionError : Error {
    GeneralPositionError(const std::string& what, int a, int b, int c)
        : Error(what), i(a), j(b), k(c) {}
    int i, j, k;
};

// Database or fixture file is unreadable/inconsistent; carries a byte offset.
struct IngestError : Error {
    IngestError(const std::string& what, std::uint64_t off) : Error(what), offset(off) {}
    std::uint64_t offset;
};

inline std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

// SplitMix64 finalizer; used to derive independent RNG streams from a seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Runs f(0..count-1) on `jobs` threads. Results must be written to
// index-addressed slots by the caller; completion order is unspecified.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned k = std::min<std::size_t>(jobs, count);
    pool.reserve(k);
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

}  // namespace dlab
