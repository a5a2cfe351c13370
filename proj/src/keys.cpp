#include "chaoscipher/keys.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>

#include "chaoscipher/keystream.hpp"

namespace chaoscipher {

ChaoticKey ChaoticKey::from_hex(std::string_view hex) {
    if (hex.size() != 32 && hex.size() != 64)
        throw InvalidKey("key must be 32 or 64 hex characters, got " +
                         std::to_string(hex.size()));
    ChaoticKey key;
    key.hex.reserve(hex.size());
    for (char c : hex) {
        char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!((lc >= '0' && lc <= '9') || (lc >= 'a' && lc <= 'f')))
            throw InvalidKey("key contains a non-hex character");
        key.hex.push_back(lc);
    }
    key.bit_length = hex.size() * 4;
    return key;
}

std::vector<std::uint8_t> ChaoticKey::bytes() const {
    auto nibble = [](char c) -> std::uint8_t {
        return c <= '9' ? static_cast<std::uint8_t>(c - '0')
                        : static_cast<std::uint8_t>(c - 'a' + 10);
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return out;
}

ChaoticKey generate_key(std::size_t bit_length) {
    if (bit_length != 128 && bit_length != 256)
        throw PreconditionViolation("key bit length must be 128 or 256");

    std::size_t n_bytes = bit_length / 8;
    std::vector<std::uint8_t> buf(n_bytes);
    std::FILE* f = std::fopen("/dev/urandom", "rb");
    if (!f) throw EntropyUnavailable("cannot open the OS entropy source");
    std::size_t got = std::fread(buf.data(), 1, n_bytes, f);
    std::fclose(f);
    if (got != n_bytes) throw EntropyUnavailable("short read from the OS entropy source");

    static constexpr char digits[] = "0123456789abcdef";
    ChaoticKey key;
    key.bit_length = bit_length;
    key.hex.reserve(n_bytes * 2);
    for (std::uint8_t b : buf) {
        key.hex.push_back(digits[b >> 4]);
        key.hex.push_back(digits[b & 0x0f]);
    }
    return key;
}

namespace {

// Twelve byte spans at boundaries floor(i*L/12); each is at most 3 bytes so
// its value scales to [0,1) exactly in a double.
std::array<double, 12> span_units(const std::vector<std::uint8_t>& bytes) {
    std::array<double, 12> units{};
    const std::size_t L = bytes.size();
    for (std::size_t i = 0; i < 12; ++i) {
        std::size_t lo = i * L / 12;
        std::size_t hi = (i + 1) * L / 12;
        std::uint64_t value = 0;
        for (std::size_t b = lo; b < hi; ++b) value = (value << 8) | bytes[b];
        units[i] = static_cast<double>(value) /
                   static_cast<double>(std::uint64_t{1} << (8 * (hi - lo)));
    }
    return units;
}

inline double frac(double v) { return v - std::floor(v); }

// Irrational shift constants for seed re-mixing: frac of the golden ratio,
// sqrt(2), sqrt(3).
constexpr std::array<double, 3> kRemixShift = {0.6180339887498949, 0.41421356237309515,
                                               0.7320508075688772};

// Keeps a1/a2/a3 perturbations strictly inside (-0.005, 0.005).
constexpr double kParamSpan = 0.01 * 255.0 / 256.0;

constexpr std::size_t kProbeLength = 256;
constexpr std::size_t kMinDistinctBytes = 32;
constexpr std::size_t kMaxSeedAttempts = 64;

// A healthy chaotic stretch yields well over 100 distinct keystream bytes out
// of 256 samples; orbits trapped on a fixed line or short cycle yield a
// handful. Escaping orbits blow past the divergence limit within ~20 steps,
// so a probe of burn-in length separates usable seeds from dead ones.
bool stream_is_live(const std::vector<double>& values) {
    std::set<std::uint8_t> seen;
    for (double v : values) {
        seen.insert(state_to_byte(v));
        if (seen.size() >= kMinDistinctBytes) return true;
    }
    return false;
}

bool qualifies3(const Hyper3DParams& p, const State3& seed, std::size_t burn_in) {
    try {
        Orbit3 orb = orbit3(seed, p, burn_in, kProbeLength);
        return stream_is_live(orbit_component(orb, 'x')) &&
               stream_is_live(orbit_component(orb, 'y')) &&
               stream_is_live(orbit_component(orb, 'z'));
    } catch (const OrbitDiverged&) {
        return false;
    }
}

bool qualifies2(const Mem2DParams& p, const State2& seed, std::size_t burn_in) {
    try {
        Orbit2 orb = orbit2(seed, p, burn_in, kProbeLength);
        return stream_is_live(orbit_component(orb, 'x')) &&
               stream_is_live(orbit_component(orb, 'q'));
    } catch (const OrbitDiverged&) {
        return false;
    }
}

double remixed(double t, std::size_t attempt, std::size_t j) {
    if (attempt == 0) return t;
    return frac(t + static_cast<double>(attempt) * kRemixShift[j]);
}

}  // namespace

DerivedConfig derive_config(const ChaoticKey& key, MapId map_id) {
    if (key.hex.size() != key.bit_length / 4 || (key.bit_length != 128 && key.bit_length != 256))
        throw InvalidKey("key fields are inconsistent");

    const std::array<double, 12> u = span_units(key.bytes());

    DerivedConfig config;
    config.map_id = map_id;
    config.burn_in = kDerivedBurnIn;

    // Parameters always come straight from the affine map; only seed targets
    // are re-mixed when the probe finds a dead orbit, so parameter derivation
    // stays a pure function of the key.
    if (map_id == MapId::Hyper3D) {
        Hyper3DParams p;
        p.a1 += ((u[3] + u[9]) / 2.0 - 0.5) * kParamSpan;
        p.a2 += ((u[4] + u[10]) / 2.0 - 0.5) * kParamSpan;
        p.a3 += ((u[5] + u[11]) / 2.0 - 0.5) * kParamSpan;
        config.params = p;
        for (std::size_t attempt = 0; attempt < kMaxSeedAttempts; ++attempt) {
            State3 seed{0.05 + 0.9 * remixed((u[0] + u[6]) / 2.0, attempt, 0),
                        0.05 + 0.9 * remixed((u[1] + u[7]) / 2.0, attempt, 1),
                        0.05 + 0.9 * remixed((u[2] + u[8]) / 2.0, attempt, 2)};
            config.seed_state = seed;
            config.seed_attempts = attempt;
            if (qualifies3(p, seed, config.burn_in)) break;
        }
    } else {
        Mem2DParams p{1.74 + 0.02 * (u[2] + u[5] + u[8] + u[11]) / 4.0};
        config.params = p;
        for (std::size_t attempt = 0; attempt < kMaxSeedAttempts; ++attempt) {
            State2 seed{0.05 + 0.9 * remixed((u[0] + u[3] + u[6] + u[9]) / 4.0, attempt, 0),
                        0.05 + 0.9 * remixed((u[1] + u[4] + u[7] + u[10]) / 4.0, attempt, 1)};
            config.seed_state = seed;
            config.seed_attempts = attempt;
            if (qualifies2(p, seed, config.burn_in)) break;
        }
    }
    return config;
}

}  // namespace chaoscipher
