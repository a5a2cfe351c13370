#include <doctest.h>

#include <cstdint>
#include <vector>

#include "chaoscipher/analysis.hpp"
#include "chaoscipher/cipher.hpp"
#include "chaoscipher/errors.hpp"
#include "chaoscipher/keys.hpp"

#include "test_util.hpp"

using namespace chaoscipher;

namespace {

Keystream ks3_of(std::vector<std::uint8_t> kx, std::vector<std::uint8_t> ky,
                 std::vector<std::uint8_t> kz) {
    Keystream ks;
    ks.length = kx.size();
    ks.kx = std::move(kx);
    ks.ky = std::move(ky);
    ks.kz = std::move(kz);
    return ks;
}

Keystream ks2_of(std::vector<std::uint8_t> kx, std::vector<std::uint8_t> kq) {
    Keystream ks;
    ks.length = kx.size();
    ks.kx = std::move(kx);
    ks.kq = std::move(kq);
    return ks;
}

ImageBuffer one_pixel(std::uint8_t value) {
    ImageBuffer img = make_image(1, 1, 1);
    img.pixels[0] = value;
    return img;
}

double byte_diff_fraction(const ImageBuffer& a, const ImageBuffer& b) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) diff += a.pixels[i] != b.pixels[i];
    return static_cast<double>(diff) / static_cast<double>(a.pixels.size());
}

const ChaoticKey kKeyA = ChaoticKey::from_hex(
    "9d4c8f2a6e1b7305c2a5f8e1d4b7a0936f2c5e8b1d4a7f0c3e6b9d2a5c8f1e4b");
const ChaoticKey kKeyB = ChaoticKey::from_hex(
    "9d4c8f2a6e1b7305c2a5f8e1d4b7a0936f2c5e8b1d4a7f0c3e6b9d2a5c8f1e4a");

}  // namespace

TEST_CASE("three-stage pipeline matches hand-computed bytes") {
    CHECK(encrypt3(one_pixel(10), ks3_of({255}, {1}, {0})).pixels[0] == 246);
    CHECK(encrypt3(one_pixel(0), ks3_of({0}, {0}, {1})).pixels[0] == 255);
    CHECK(decrypt3(one_pixel(246), ks3_of({255}, {1}, {0})).pixels[0] == 10);

    Keystream zero = ks3_of({0, 0, 0}, {0, 0, 0}, {0, 0, 0});
    ImageBuffer img = make_image(3, 1, 1);
    img.pixels = {7, 130, 255};
    CHECK(encrypt3(img, zero) == img);
    CHECK(decrypt3(img, zero) == img);
}

TEST_CASE("two-stage pipeline matches hand-computed bytes") {
    // P=200, kx=15, kq=100: 200^15 = 199, (199+100) mod 256 = 43.
    CHECK(encrypt2(one_pixel(200), ks2_of({15}, {100})).pixels[0] == 43);
    CHECK(decrypt2(one_pixel(43), ks2_of({15}, {100})).pixels[0] == 200);

    Keystream zero = ks2_of({0, 0}, {0, 0});
    ImageBuffer img = make_image(2, 1, 1);
    img.pixels = {0, 254};
    CHECK(encrypt2(img, zero) == img);

    ImageBuffer single = one_pixel(137);
    Keystream ks = ks2_of({0xa7}, {0x3c});
    CHECK(decrypt2(encrypt2(single, ks), ks) == single);
}

TEST_CASE("stream count and length are enforced") {
    ImageBuffer img = make_image(2, 2, 1);

    CHECK_THROWS_AS(encrypt3(img, ks3_of({1, 2}, {3, 4}, {5, 6})), KeystreamMismatch);
    CHECK_THROWS_AS(encrypt3(img, ks2_of({1, 2, 3, 4}, {5, 6, 7, 8})), KeystreamMismatch);
    CHECK_THROWS_AS(encrypt2(img, ks3_of({1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4})),
                    KeystreamMismatch);
    CHECK_THROWS_AS(decrypt2(img, ks2_of({1, 2}, {3, 4})), KeystreamMismatch);
}

TEST_CASE("low-level round-trips across byte patterns") {
    SplitMix64 rng(5150);
    for (std::size_t n : {1u, 7u, 64u, 997u}) {
        std::vector<std::uint8_t> kx(n), ky(n), kz(n), kq(n);
        for (std::size_t i = 0; i < n; ++i) {
            kx[i] = static_cast<std::uint8_t>(rng.next_u64());
            ky[i] = static_cast<std::uint8_t>(rng.next_u64());
            kz[i] = static_cast<std::uint8_t>(rng.next_u64());
            kq[i] = static_cast<std::uint8_t>(rng.next_u64());
        }
        ImageBuffer img = testutil::random_image(n, 1, 1, rng.next_u64());

        Keystream ks3 = ks3_of(kx, ky, kz);
        CHECK(decrypt3(encrypt3(img, ks3), ks3) == img);

        Keystream ks2 = ks2_of(kx, kq);
        CHECK(decrypt2(encrypt2(img, ks2), ks2) == img);
    }
}

TEST_CASE("keyed round-trips are byte exact in both modes") {
    for (auto mode : {CipherMode::Hyper3D, CipherMode::Mem2D}) {
        ImageBuffer gray = testutil::random_image(37, 21, 1, 11);
        ImageBuffer color = testutil::random_image(16, 9, 3, 12);

        ImageBuffer enc_gray = encrypt_with_key(gray, kKeyA, mode);
        CHECK(enc_gray.width == gray.width);
        CHECK(enc_gray.height == gray.height);
        CHECK(enc_gray.channels == gray.channels);
        CHECK(decrypt_with_key(enc_gray, kKeyA, mode) == gray);

        ImageBuffer enc_color = encrypt_with_key(color, kKeyA, mode);
        CHECK(decrypt_with_key(enc_color, kKeyA, mode) == color);
    }
}

TEST_CASE("different keys and different modes give unrelated ciphertexts") {
    ImageBuffer img = testutil::gradient_image(64, 64);

    ImageBuffer ea = encrypt_with_key(img, kKeyA, CipherMode::Hyper3D);
    ImageBuffer eb = encrypt_with_key(img, kKeyB, CipherMode::Hyper3D);
    CHECK(byte_diff_fraction(ea, eb) > 0.99);

    ImageBuffer e2 = encrypt_with_key(img, kKeyA, CipherMode::Mem2D);
    CHECK(ea.pixels != e2.pixels);
}

TEST_CASE("keystream cipher changes exactly the bytes of a changed pixel") {
    ImageBuffer a = testutil::random_image(32, 32, 1, 77);
    ImageBuffer b = a;
    b.pixels[517] ^= 0x40;

    ImageBuffer ea = encrypt_with_key(a, kKeyA, CipherMode::Hyper3D);
    ImageBuffer eb = encrypt_with_key(b, kKeyA, CipherMode::Hyper3D);
    for (std::size_t i = 0; i < ea.pixels.size(); ++i) {
        if (i == 517)
            CHECK(ea.pixels[i] != eb.pixels[i]);
        else
            CHECK(ea.pixels[i] == eb.pixels[i]);
    }
}

TEST_CASE("decrypting with a near-miss key yields noise, not the image") {
    ImageBuffer img = testutil::gradient_image(128, 128);
    ImageBuffer enc = encrypt_with_key(img, kKeyA, CipherMode::Hyper3D);

    ImageBuffer wrong = decrypt_with_key(enc, kKeyB, CipherMode::Hyper3D);
    CHECK(wrong.pixels != img.pixels);
    double corr = pearson(std::span<const std::uint8_t>(img.pixels),
                          std::span<const std::uint8_t>(wrong.pixels));
    CHECK(std::abs(corr) < 0.05);
}

TEST_CASE("degenerate cipher inputs") {
    ImageBuffer zero_cipher = make_image(8, 8, 1, 0);
    ImageBuffer out = decrypt_with_key(zero_cipher, kKeyA, CipherMode::Mem2D);
    CHECK(out.pixels.size() == 64);

    ImageBuffer empty;
    CHECK_THROWS_AS(encrypt_with_key(empty, kKeyA, CipherMode::Hyper3D), PreconditionViolation);
}
