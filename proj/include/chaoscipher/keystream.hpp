#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoscipher/keys.hpp"
#include "chaoscipher/maps.hpp"

namespace chaoscipher {

// Per-pixel byte streams extracted from a chaotic orbit. The 3D pipeline
// fills kx/ky/kz; the 2D pipeline fills kx/kq. Unused streams stay empty.
struct Keystream {
    std::size_t length = 0;
    std::vector<std::uint8_t> kx;
    std::vector<std::uint8_t> ky;
    std::vector<std::uint8_t> kz;
    std::vector<std::uint8_t> kq;
};

// frac(|v| * 1e6): maps an arbitrary finite state value into [0,1).
double normalize_state(double v);

// floor(normalize_state(v) * 255), always in [0, 254].
std::uint8_t state_to_byte(double v);

// One byte per stream per orbit sample, for the first n_pixels samples.
// Throws InsufficientOrbit if the orbit is shorter than n_pixels.
Keystream keystream_from_orbit3(const Orbit3& orbit, std::size_t n_pixels);

// n_values = width * height * channels; one (kx, kq) byte pair per channel
// sample, indexed by flat position.
Keystream keystream_from_orbit2(const Orbit2& orbit, std::size_t n_values);

// derive + orbit + extract in one call; n_values as above.
Keystream keystream_for_config(const DerivedConfig& config, std::size_t n_values);

}  // namespace chaoscipher
