#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chaoscipher/maps.hpp"

namespace chaoscipher {

// Secret key as a lowercase hex string, 128 or 256 bits.
struct ChaoticKey {
    std::string hex;
    std::size_t bit_length = 256;

    // Validates charset and length (32 or 64 hex chars); uppercase input is
    // canonicalized to lowercase. Throws InvalidKey.
    static ChaoticKey from_hex(std::string_view hex);

    std::vector<std::uint8_t> bytes() const;

    bool operator==(const ChaoticKey&) const = default;
};

// Reads bit_length/8 bytes from the OS entropy source.
// Throws EntropyUnavailable if it cannot be read, PreconditionViolation for
// bit_length outside {128, 256}.
ChaoticKey generate_key(std::size_t bit_length = 256);

inline constexpr std::size_t kDerivedBurnIn = 1000;

struct DerivedConfig {
    MapId map_id = MapId::Hyper3D;
    std::variant<Hyper3DParams, Mem2DParams> params;
    std::variant<State3, State2> seed_state;
    std::size_t burn_in = kDerivedBurnIn;
    // Seed re-probe rounds applied to escape dead orbits (0 for most keys).
    std::size_t seed_attempts = 0;
};

// Deterministically derives map parameters and a seed state from the key via
// fixed byte-span fields and one affine map per field. Seed components land
// in [0.05, 0.95); 3D a1/a2/a3 move at most 0.005 off the reference set; 2D k
// lands in [1.74, 1.76). The seed is probed over the burn-in window and
// deterministically re-mixed if its orbit escapes or collapses onto a fixed
// line or short cycle; parameters are never re-mixed. Derivation is total:
// every valid key yields a config.
DerivedConfig derive_config(const ChaoticKey& key, MapId map_id);

}  // namespace chaoscipher
