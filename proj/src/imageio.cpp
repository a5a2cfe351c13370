#include "chaoscipher/imageio.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "chaoscipher/errors.hpp"

namespace chaoscipher {

namespace {

struct HeaderParser {
    const std::string& data;
    std::size_t pos = 0;

    // Skips whitespace and # comments (comment runs to end of line).
    void skip_separators() {
        while (pos < data.size()) {
            char c = data[pos];
            if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    long next_int() {
        skip_separators();
        if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
            throw MalformedHeader("expected a decimal header field");
        long value = 0;
        while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
            value = value * 10 + (data[pos] - '0');
            if (value > 1'000'000'000L) throw MalformedHeader("header field out of range");
            ++pos;
        }
        return value;
    }
};

std::string read_file(const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "rb");
    if (!f) throw IoFailure("cannot open " + path.string());
    std::string data;
    char buf[65536];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, got);
    bool bad = std::ferror(f);
    std::fclose(f);
    if (bad) throw IoFailure("read error on " + path.string());
    return data;
}

}  // namespace

ImageBuffer load_image(const std::filesystem::path& path) {
    std::string data = read_file(path);
    if (data.size() < 2 || data[0] != 'P')
        throw MalformedHeader("not a netpbm file: " + path.string());
    char kind = data[1];
    if (kind != '5' && kind != '6') {
        if (kind >= '1' && kind <= '7')
            throw UnsupportedFormat(std::string("netpbm type P") + kind +
                                    " is not supported, use binary P5 or P6");
        throw MalformedHeader("unrecognized magic in " + path.string());
    }

    HeaderParser parser{data, 2};
    long width = parser.next_int();
    long height = parser.next_int();
    long maxval = parser.next_int();
    if (width < 1 || height < 1) throw MalformedHeader("image dimensions must be positive");
    if (maxval != 255)
        throw UnsupportedFormat("maxval " + std::to_string(maxval) + " is not supported, only 255");
    // Exactly one whitespace byte separates the header from the raster.
    if (parser.pos >= data.size() ||
        (data[parser.pos] != '\n' && data[parser.pos] != ' ' && data[parser.pos] != '\t' &&
         data[parser.pos] != '\r'))
        throw MalformedHeader("missing separator before pixel data");
    std::size_t raster = parser.pos + 1;

    ImageBuffer img;
    img.width = static_cast<std::size_t>(width);
    img.height = static_cast<std::size_t>(height);
    img.channels = kind == '5' ? 1 : 3;
    std::size_t need = img.sample_count();
    if (data.size() - raster < need)
        throw TruncatedPixelData("raster holds " + std::to_string(data.size() - raster) +
                                 " bytes, need " + std::to_string(need));
    img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(raster),
                      data.begin() + static_cast<std::ptrdiff_t>(raster + need));
    return img;
}

void save_image(const ImageBuffer& img, const std::filesystem::path& path) {
    if (img.width == 0 || img.height == 0)
        throw PreconditionViolation("cannot save an empty image");
    if (img.channels != 1 && img.channels != 3)
        throw PreconditionViolation("channels must be 1 or 3");
    if (img.pixels.size() != img.sample_count())
        throw PreconditionViolation("pixel array size does not match dimensions");

    std::string header = (img.channels == 1 ? "P5\n" : "P6\n") + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";

    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw IoFailure("cannot open " + path.string() + " for writing");
    bool ok = std::fwrite(header.data(), 1, header.size(), f) == header.size() &&
              std::fwrite(img.pixels.data(), 1, img.pixels.size(), f) == img.pixels.size();
    ok = std::fclose(f) == 0 && ok;
    if (!ok) throw IoFailure("write error on " + path.string());
}

ImageBuffer to_grayscale(const ImageBuffer& img) {
    if (img.channels == 1) return img;
    if (img.channels != 3) throw PreconditionViolation("channels must be 1 or 3");

    ImageBuffer out;
    out.width = img.width;
    out.height = img.height;
    out.channels = 1;
    out.pixels.resize(img.pixel_count());
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        double r = img.pixels[3 * i];
        double g = img.pixels[3 * i + 1];
        double b = img.pixels[3 * i + 2];
        long v = std::lround(0.299 * r + 0.587 * g + 0.114 * b);
        out.pixels[i] = static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
    }
    return out;
}

ImageBuffer resize_nearest(const ImageBuffer& img, std::size_t new_w, std::size_t new_h) {
    if (new_w < 1 || new_h < 1) throw PreconditionViolation("target dimensions must be positive");
    if (img.width == 0 || img.height == 0) throw PreconditionViolation("source image is empty");

    ImageBuffer out;
    out.width = new_w;
    out.height = new_h;
    out.channels = img.channels;
    out.pixels.resize(out.sample_count());
    for (std::size_t y = 0; y < new_h; ++y) {
        std::size_t sy = y * img.height / new_h;
        for (std::size_t x = 0; x < new_w; ++x) {
            std::size_t sx = x * img.width / new_w;
            for (std::size_t c = 0; c < img.channels; ++c)
                out.pixels[(y * new_w + x) * img.channels + c] =
                    img.pixels[(sy * img.width + sx) * img.channels + c];
        }
    }
    return out;
}

}  // namespace chaoscipher
