#pragma once

#include <filesystem>

#include "chaoscipher/image.hpp"

namespace chaoscipher {

// Binary netpbm only: P5 (gray) and P6 (RGB), maxval 255. Header comments are
// tolerated on read; writes emit the canonical "P5\n<w> <h>\n255\n" header.
ImageBuffer load_image(const std::filesystem::path& path);
void save_image(const ImageBuffer& img, const std::filesystem::path& path);

// BT.601 luma: gray = round(0.299 R + 0.587 G + 0.114 B). Grayscale input is
// returned unchanged.
ImageBuffer to_grayscale(const ImageBuffer& img);

// Nearest-neighbor with floor mapping; never invents pixel values.
ImageBuffer resize_nearest(const ImageBuffer& img, std::size_t new_w, std::size_t new_h);

}  // namespace chaoscipher
