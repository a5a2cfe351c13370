// Writes the deterministic test corpus: four 512x512 grayscale images with
// smooth large-scale structure and one RGB image. Run once; the outputs are
// committed under tests/data/ so builds never depend on this tool.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "chaoscipher/image.hpp"
#include "chaoscipher/imageio.hpp"

namespace cc = chaoscipher;

namespace {

constexpr std::size_t kSide = 512;

cc::ImageBuffer from_field(const std::function<double(double, double)>& field) {
    std::vector<double> raw(kSide * kSide);
    double lo = 1e300, hi = -1e300;
    for (std::size_t y = 0; y < kSide; ++y)
        for (std::size_t x = 0; x < kSide; ++x) {
            double v = field(static_cast<double>(x), static_cast<double>(y));
            raw[y * kSide + x] = v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    cc::ImageBuffer img = cc::make_image(kSide, kSide, 1);
    double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i)
        img.pixels[i] = static_cast<std::uint8_t>(std::lround((raw[i] - lo) * scale));
    return img;
}

cc::ImageBuffer make_blobs() {
    struct Blob {
        double cx, cy, sigma, amp;
    };
    static constexpr Blob kBlobs[] = {{130, 100, 60, 140}, {370, 90, 90, -90},
                                      {250, 300, 120, 160}, {90, 420, 70, 110},
                                      {430, 390, 50, 120},  {300, 180, 40, -70}};
    return from_field([](double x, double y) {
        double acc = 0.12 * x + 0.07 * y;
        for (const Blob& b : kBlobs) {
            double dx = x - b.cx, dy = y - b.cy;
            acc += b.amp * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
        }
        return acc;
    });
}

cc::ImageBuffer make_waves() {
    return from_field([](double x, double y) {
        double r = std::hypot(x - 256.0, y - 256.0);
        return std::sin(x / 23.0) + std::sin(y / 31.0) + std::sin((x + y) / 41.0) +
               std::sin(r / 17.0);
    });
}

cc::ImageBuffer make_rings() {
    cc::ImageBuffer img = cc::make_image(kSide, kSide, 1);
    for (std::size_t y = 0; y < kSide; ++y)
        for (std::size_t x = 0; x < kSide; ++x) {
            double fx = static_cast<double>(x), fy = static_cast<double>(y);
            double r = std::hypot(fx - 200.0, fy - 280.0);
            double v = 128.0 + 90.0 * std::sin(r / 11.0) * std::exp(-r / 420.0) + 0.08 * fx -
                       0.05 * fy;
            long q = std::lround(v);
            img.pixels[y * kSide + x] = static_cast<std::uint8_t>(std::clamp(q, 0L, 255L));
        }
    return img;
}

cc::ImageBuffer make_terrain() {
    struct Harmonic {
        double fx, fy, phase, amp;
    };
    static constexpr Harmonic kWavesList[] = {{3, 2, 0.5, 1.0},
                                              {5, 7, 1.3, 0.55},
                                              {11, 13, 2.1, 0.30},
                                              {23, 19, 0.7, 0.18},
                                              {47, 53, 1.9, 0.08}};
    constexpr double kTau = 6.283185307179586;
    constexpr double kW = static_cast<double>(kSide);
    return from_field([](double x, double y) {
        double acc = 0.0;
        for (const Harmonic& h : kWavesList)
            acc += h.amp * std::sin(kTau * (h.fx * x / kW + h.fy * y / kW) + h.phase) *
                   std::cos(kTau * (h.fy * x / kW - h.fx * y / kW) - h.phase);
        return acc;
    });
}

cc::ImageBuffer make_plasma() {
    cc::ImageBuffer img = cc::make_image(kSide, kSide, 3);
    for (std::size_t y = 0; y < kSide; ++y)
        for (std::size_t x = 0; x < kSide; ++x) {
            double fx = static_cast<double>(x), fy = static_cast<double>(y);
            double r = 128.0 + 127.0 * std::sin(fx / 29.0 + 0.8 * std::sin(fy / 37.0));
            double g = 128.0 + 127.0 * std::sin((fx + fy) / 43.0 + 1.7);
            double b =
                128.0 + 127.0 * std::sin(std::hypot(fx - 256.0, fy - 256.0) / 23.0 + 0.5);
            std::size_t i = (y * kSide + x) * 3;
            img.pixels[i] = static_cast<std::uint8_t>(std::clamp(std::lround(r), 0L, 255L));
            img.pixels[i + 1] = static_cast<std::uint8_t>(std::clamp(std::lround(g), 0L, 255L));
            img.pixels[i + 2] = static_cast<std::uint8_t>(std::clamp(std::lround(b), 0L, 255L));
        }
    return img;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/data";
    std::filesystem::create_directories(dir);

    cc::save_image(make_blobs(), dir / "blobs.pgm");
    cc::save_image(make_waves(), dir / "waves.pgm");
    cc::save_image(make_rings(), dir / "rings.pgm");
    cc::save_image(make_terrain(), dir / "terrain.pgm");
    cc::save_image(make_plasma(), dir / "plasma.ppm");

    std::printf("wrote 5 images to %s\n", dir.string().c_str());
    return 0;
}
