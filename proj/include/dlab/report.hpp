#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlab/util.hpp"

namespace dlab {

// Reports are line-delimited JSON; ordered_json keeps field order stable so
// two runs with identical inputs produce byte-identical streams.
using ojson = nlohmann::ordered_json;

// The expectation the database sweep checks every point set against:
// the disjointness graph of n points in general position is hamiltonian
// exactly when n >= 6, except for six points in convex position.
inline bool theorem1_expected_hamiltonian(int n, bool convex_position) {
    return n >= 6 && !(n == 6 && convex_position);
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string file_hash_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for hashing: " + path);
    std::vector<char> buf(1 << 16);
    std::uint64_t h = 1469598103934665603ull;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[static_cast<std::size_t>(i)]);
            h *= 1099511628211ull;
        }
    }
    return hash_hex(h);
}

// Emits one JSON object per line. Wall-clock fields are opt-in because they
// make otherwise deterministic report streams differ between runs.
class ReportStream {
   public:
    ReportStream(std::ostream& out, bool timings)
        : out_(&out), timings_(timings), start_(std::chrono::steady_clock::now()) {}

    void emit(ojson rec) {
        if (timings_) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            rec["elapsed_ms"] = ms;
        }
        (*out_) << rec.dump() << "\n";
    }

   private:
    std::ostream* out_;
    bool timings_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace dlab
