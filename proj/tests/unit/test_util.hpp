#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "chaoscipher/image.hpp"
#include "chaoscipher/rng.hpp"

namespace testutil {

inline std::filesystem::path data_dir() { return CHAOSCIPHER_DATA_DIR; }

// Deterministic pseudo-random image, independent of the library's keystream path.
inline chaoscipher::ImageBuffer random_image(std::size_t w, std::size_t h, std::size_t channels,
                                             std::uint64_t seed) {
    chaoscipher::ImageBuffer img = chaoscipher::make_image(w, h, channels);
    chaoscipher::SplitMix64 rng(seed);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.next_u64() & 0xff);
    return img;
}

inline chaoscipher::ImageBuffer gradient_image(std::size_t w, std::size_t h) {
    chaoscipher::ImageBuffer img = chaoscipher::make_image(w, h, 1);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x)
            img.pixels[y * w + x] = static_cast<std::uint8_t>((x + y) * 255 / (w + h - 2));
    return img;
}

inline std::string hex_key_of(char c, std::size_t hex_digits) {
    return std::string(hex_digits, c);
}

}  // namespace testutil
