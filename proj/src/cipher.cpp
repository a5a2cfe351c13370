#include "chaoscipher/cipher.hpp"

namespace chaoscipher {

namespace {

void check_streams3(const ImageBuffer& img, const Keystream& ks) {
    std::size_t n = img.sample_count();
    if (ks.kx.size() != n || ks.ky.size() != n || ks.kz.size() != n)
        throw KeystreamMismatch("3-stream keystream of length " + std::to_string(ks.kx.size()) +
                                " does not cover " + std::to_string(n) + " samples");
}

void check_streams2(const ImageBuffer& img, const Keystream& ks) {
    std::size_t n = img.sample_count();
    if (ks.kx.size() != n || ks.kq.size() != n)
        throw KeystreamMismatch("2-stream keystream of length " + std::to_string(ks.kx.size()) +
                                " does not cover " + std::to_string(n) + " samples");
}

}  // namespace

ImageBuffer encrypt3(const ImageBuffer& plain, const Keystream& ks) {
    check_streams3(plain, ks);
    ImageBuffer out = plain;
    for (std::size_t t = 0; t < out.pixels.size(); ++t) {
        std::uint8_t v = out.pixels[t] ^ ks.kx[t];
        v = static_cast<std::uint8_t>(v + ks.ky[t]);
        v = static_cast<std::uint8_t>(v - ks.kz[t]);
        out.pixels[t] = v;
    }
    return out;
}

ImageBuffer decrypt3(const ImageBuffer& cipher, const Keystream& ks) {
    check_streams3(cipher, ks);
    ImageBuffer out = cipher;
    for (std::size_t t = 0; t < out.pixels.size(); ++t) {
        std::uint8_t v = static_cast<std::uint8_t>(out.pixels[t] + ks.kz[t]);
        v = static_cast<std::uint8_t>(v - ks.ky[t]);
        out.pixels[t] = v ^ ks.kx[t];
    }
    return out;
}

ImageBuffer encrypt2(const ImageBuffer& plain, const Keystream& ks) {
    check_streams2(plain, ks);
    ImageBuffer out = plain;
    for (std::size_t t = 0; t < out.pixels.size(); ++t)
        out.pixels[t] = static_cast<std::uint8_t>((out.pixels[t] ^ ks.kx[t]) + ks.kq[t]);
    return out;
}

ImageBuffer decrypt2(const ImageBuffer& cipher, const Keystream& ks) {
    check_streams2(cipher, ks);
    ImageBuffer out = cipher;
    for (std::size_t t = 0; t < out.pixels.size(); ++t)
        out.pixels[t] = static_cast<std::uint8_t>(out.pixels[t] - ks.kq[t]) ^ ks.kx[t];
    return out;
}

ImageBuffer encrypt_with_config(const ImageBuffer& plain, const DerivedConfig& config) {
    if (plain.sample_count() == 0) throw PreconditionViolation("image is empty");
    Keystream ks = keystream_for_config(config, plain.sample_count());
    return config.map_id == MapId::Hyper3D ? encrypt3(plain, ks) : encrypt2(plain, ks);
}

ImageBuffer decrypt_with_config(const ImageBuffer& cipher, const DerivedConfig& config) {
    if (cipher.sample_count() == 0) throw PreconditionViolation("image is empty");
    Keystream ks = keystream_for_config(config, cipher.sample_count());
    return config.map_id == MapId::Hyper3D ? decrypt3(cipher, ks) : decrypt2(cipher, ks);
}

ImageBuffer encrypt_with_key(const ImageBuffer& plain, const ChaoticKey& key, CipherMode mode) {
    return encrypt_with_config(plain, derive_config(key, mode));
}

ImageBuffer decrypt_with_key(const ImageBuffer& cipher, const ChaoticKey& key, CipherMode mode) {
    return decrypt_with_config(cipher, derive_config(key, mode));
}

}  // namespace chaoscipher
