#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "chaoscipher/errors.hpp"
#include "chaoscipher/imageio.hpp"

#include "test_util.hpp"

using namespace chaoscipher;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("chaoscipher_test_" + name);
}

std::filesystem::path write_raw(const std::string& name, const std::string& content) {
    auto path = temp_path(name);
    std::ofstream out(path, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    return path;
}

std::string read_raw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("loads P5 with assorted header whitespace") {
    using namespace std::string_literals;
    ImageBuffer a = load_image(write_raw("p5_plain.pgm", "P5 2 2 255 \x01\x02\x03\x04"s));
    CHECK(a.width == 2);
    CHECK(a.height == 2);
    CHECK(a.channels == 1);
    CHECK(a.pixels == std::vector<std::uint8_t>{1, 2, 3, 4});

    ImageBuffer b = load_image(write_raw("p5_newlines.pgm", "P5\n2\n2\n255\n\x01\x02\x03\x04"s));
    CHECK(b.pixels == a.pixels);

    ImageBuffer c = load_image(
        write_raw("p5_comment.pgm", "P5\n# generated upstream\n2 2\n# another note\n255\n\x01\x02\x03\x04"s));
    CHECK(c.pixels == a.pixels);
}

TEST_CASE("loads P6 channel-interleaved") {
    using namespace std::string_literals;
    ImageBuffer img =
        load_image(write_raw("p6_two.ppm", "P6\n2 1\n255\n\xff\x00\x00\x00\xff\x00"s));
    CHECK(img.width == 2);
    CHECK(img.height == 1);
    CHECK(img.channels == 3);
    CHECK(img.pixels == std::vector<std::uint8_t>{255, 0, 0, 0, 255, 0});
}

TEST_CASE("rejects what it cannot faithfully represent") {
    using namespace std::string_literals;
    CHECK_THROWS_AS(load_image(write_raw("deep.pgm", "P5 2 2 65535 \x00\x01\x02\x03"s)),
                    UnsupportedFormat);
    CHECK_THROWS_AS(load_image(write_raw("bitmap.pbm", "P4\n8 1\n\xff"s)), UnsupportedFormat);
    CHECK_THROWS_AS(load_image(write_raw("ascii.pgm", "P2 1 1 255 7"s)), UnsupportedFormat);
    CHECK_THROWS_AS(load_image(write_raw("garbage.bin", "PNG not really"s)), MalformedHeader);
    CHECK_THROWS_AS(load_image(write_raw("noise.bin", "\x89PNG\r\n"s)), MalformedHeader);
    CHECK_THROWS_AS(load_image(write_raw("negative.pgm", "P5 -2 2 255 ...."s)), MalformedHeader);
    CHECK_THROWS_AS(load_image(write_raw("nonnumeric.pgm", "P5 two 2 255 ...."s)),
                    MalformedHeader);
    CHECK_THROWS_AS(load_image(write_raw("short.pgm", "P5 4 4 255 \x01\x02"s)),
                    TruncatedPixelData);
    CHECK_THROWS_AS(load_image(temp_path("does_not_exist.pgm")), IoFailure);
}

TEST_CASE("save writes a canonical byte-deterministic header") {
    ImageBuffer img = make_image(3, 2, 1);
    img.pixels = {10, 20, 30, 40, 50, 60};
    auto path = temp_path("canonical.pgm");
    save_image(img, path);
    std::string raw = read_raw(path);
    CHECK(raw.substr(0, 11) == "P5\n3 2\n255\n");
    CHECK(raw.size() == 11 + 6);

    ImageBuffer rgb = make_image(1, 1, 3);
    rgb.pixels = {9, 8, 7};
    auto path6 = temp_path("canonical.ppm");
    save_image(rgb, path6);
    CHECK(read_raw(path6).substr(0, 11) == "P6\n1 1\n255\n");
}

TEST_CASE("save/load round-trips random buffers byte-exactly") {
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t w = 1 + (trial * 7) % 40;
        std::size_t h = 1 + (trial * 13) % 30;
        std::size_t channels = trial % 2 == 0 ? 1 : 3;
        ImageBuffer img = testutil::random_image(w, h, channels, 1000 + trial);
        auto path = temp_path("roundtrip_" + std::to_string(trial) +
                              (channels == 1 ? ".pgm" : ".ppm"));
        save_image(img, path);
        CHECK(load_image(path) == img);
    }
}

TEST_CASE("save rejects malformed buffers") {
    CHECK_THROWS_AS(save_image(ImageBuffer{}, temp_path("empty.pgm")), PreconditionViolation);

    ImageBuffer two_channel = make_image(2, 2, 1);
    two_channel.channels = 2;
    two_channel.pixels.resize(8);
    CHECK_THROWS_AS(save_image(two_channel, temp_path("two.pgm")), PreconditionViolation);

    ImageBuffer mismatched = make_image(4, 4, 1);
    mismatched.pixels.resize(3);
    CHECK_THROWS_AS(save_image(mismatched, temp_path("mismatch.pgm")), PreconditionViolation);

    CHECK_THROWS_AS(save_image(make_image(2, 2, 1), "/nonexistent_dir_zz/x.pgm"), IoFailure);
}

TEST_CASE("grayscale conversion uses the broadcast luma weights") {
    ImageBuffer rgb = make_image(4, 1, 3);
    rgb.pixels = {255, 255, 255, 255, 0, 0, 0, 0, 0, 0, 255, 0};
    ImageBuffer gray = to_grayscale(rgb);
    CHECK(gray.channels == 1);
    REQUIRE(gray.pixels.size() == 4);
    CHECK(gray.pixels[0] == 255);
    CHECK(gray.pixels[1] == 76);
    CHECK(gray.pixels[2] == 0);
    CHECK(gray.pixels[3] == 150);

    ImageBuffer already = make_image(2, 2, 1, 9);
    CHECK(to_grayscale(already) == already);

    auto path = temp_path("gray_cycle.pgm");
    save_image(gray, path);
    CHECK(to_grayscale(load_image(path)) == gray);
}

TEST_CASE("nearest-neighbor resize") {
    ImageBuffer img = make_image(2, 2, 1);
    img.pixels = {1, 2, 3, 4};

    CHECK(resize_nearest(img, 2, 2) == img);
    CHECK(resize_nearest(img, 1, 1).pixels == std::vector<std::uint8_t>{1});

    ImageBuffer single = make_image(1, 1, 1, 42);
    ImageBuffer blown = resize_nearest(single, 3, 3);
    CHECK(blown.width == 3);
    CHECK(blown.height == 3);
    for (std::uint8_t p : blown.pixels) CHECK(p == 42);

    ImageBuffer big = testutil::random_image(17, 9, 3, 31);
    ImageBuffer shrunk = resize_nearest(big, 5, 4);
    CHECK(shrunk.channels == 3);
    for (std::size_t i = 0; i < shrunk.pixels.size(); ++i) {
        bool found = false;
        for (std::uint8_t p : big.pixels) found = found || p == shrunk.pixels[i];
        CHECK(found);
    }

    CHECK_THROWS_AS(resize_nearest(img, 0, 3), PreconditionViolation);
}
