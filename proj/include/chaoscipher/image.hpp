#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaoscipher {

// Row-major, channel-interleaved 8-bit image. channels is 1 (gray) or 3 (RGB).
struct ImageBuffer {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 1;
    std::vector<std::uint8_t> pixels;

    std::size_t sample_count() const { return width * height * channels; }
    std::size_t pixel_count() const { return width * height; }

    bool operator==(const ImageBuffer&) const = default;
};

inline ImageBuffer make_image(std::size_t width, std::size_t height, std::size_t channels,
                              std::uint8_t fill = 0) {
    return ImageBuffer{width, height, channels,
                       std::vector<std::uint8_t>(width * height * channels, fill)};
}

}  // namespace chaoscipher
