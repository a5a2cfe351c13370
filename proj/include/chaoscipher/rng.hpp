#pragma once

#include <cstdint>

namespace chaoscipher {

// SplitMix64 finalizer. Counter-based use: stream_u64(seed, i) is the i-th
// value of the stream, computable at any index independently.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_u64(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + index * 0x9e3779b97f4a7c15ULL);
}

// Uniform in [0,1), 53-bit resolution.
inline double stream_unit(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(stream_u64(seed, index) >> 11) * 0x1.0p-53;
}

// Sequential convenience wrapper over the same stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return stream_u64(seed_, index_++); }
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    // Unbiased-enough modulo draw for test-scale bounds.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

private:
    std::uint64_t seed_;
    std::uint64_t index_ = 0;
};

}  // namespace chaoscipher
