#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "chaoscipher/errors.hpp"
#include "chaoscipher/keys.hpp"
#include "chaoscipher/keystream.hpp"
#include "chaoscipher/maps.hpp"

#include "test_util.hpp"

using namespace chaoscipher;

namespace {

std::array<std::uint64_t, 256> byte_histogram(const std::vector<std::uint8_t>& bytes) {
    std::array<std::uint64_t, 256> h{};
    for (std::uint8_t b : bytes) ++h[b];
    return h;
}

double lag1_autocorrelation(const std::vector<std::uint8_t>& bytes) {
    double mean = 0;
    for (std::uint8_t b : bytes) mean += b;
    mean /= static_cast<double>(bytes.size());
    double var = 0, cov = 0;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        double d = bytes[i] - mean;
        var += d * d;
        if (i + 1 < bytes.size()) cov += d * (bytes[i + 1] - mean);
    }
    return cov / var;
}

}  // namespace

TEST_CASE("normalize_state extracts fractional digits of the scaled magnitude") {
    CHECK(normalize_state(0.0) == 0.0);
    CHECK(normalize_state(1.25) == 0.0);
    CHECK(normalize_state(0.1234567891) == doctest::Approx(0.7891).epsilon(1e-9));
    CHECK(normalize_state(-0.1234567891) == doctest::Approx(0.7891).epsilon(1e-9));

    for (double v : {0.001, -3.7, 123.456, 1e-9, 0.9999}) {
        double n = normalize_state(v);
        CHECK(n >= 0.0);
        CHECK(n < 1.0);
    }

    CHECK_THROWS_AS(normalize_state(std::numeric_limits<double>::infinity()),
                    PreconditionViolation);
    CHECK_THROWS_AS(normalize_state(std::numeric_limits<double>::quiet_NaN()),
                    PreconditionViolation);
}

TEST_CASE("state_to_byte floors into [0, 254]") {
    CHECK(state_to_byte(0.0) == 0);
    CHECK(state_to_byte(0.000000999999) == 254);

    Orbit3 orb = orbit3({0.1, 0.1, 0.1}, Hyper3DParams{}, 1000, 100000);
    Keystream ks = keystream_from_orbit3(orb, 100000);
    for (auto stream : {&ks.kx, &ks.ky, &ks.kz})
        for (std::uint8_t b : *stream) CHECK(b <= 254);
}

TEST_CASE("zero states produce zero bytes") {
    Orbit3 orb;
    orb.states = {{0.0, 0.0, 0.0}};
    Keystream ks3 = keystream_from_orbit3(orb, 1);
    CHECK(ks3.kx[0] == 0);
    CHECK(ks3.ky[0] == 0);
    CHECK(ks3.kz[0] == 0);

    Orbit2 fixed = orbit2({0, 0}, Mem2DParams{}, 50, 100);
    Keystream ks2 = keystream_from_orbit2(fixed, 100);
    for (std::uint8_t b : ks2.kx) CHECK(b == 0);
    for (std::uint8_t b : ks2.kq) CHECK(b == 0);
}

TEST_CASE("keystream length contracts") {
    Orbit2 orb = orbit2({0.1, 0.1}, Mem2DParams{}, 100, 40);
    Keystream ks = keystream_from_orbit2(orb, 36);
    CHECK(ks.length == 36);
    CHECK(ks.kx.size() == 36);
    CHECK(ks.kq.size() == 36);
    CHECK(ks.ky.empty());
    CHECK(ks.kz.empty());

    CHECK_THROWS_AS(keystream_from_orbit2(orb, 41), InsufficientOrbit);

    Orbit3 orb3 = orbit3({0.1, 0.1, 0.1}, Hyper3DParams{}, 100, 10);
    CHECK_THROWS_AS(keystream_from_orbit3(orb3, 11), InsufficientOrbit);
}

TEST_CASE("keystream bytes from a hyperchaotic orbit are close to uniform") {
    Orbit2 orb = orbit2({0.1, 0.1}, Mem2DParams{1.75}, 1000, 100000);
    Keystream ks = keystream_from_orbit2(orb, 100000);

    for (auto stream : {&ks.kx, &ks.kq}) {
        auto h = byte_histogram(*stream);
        CHECK(h[255] == 0);

        const double n = 100000.0, p = 1.0 / 255.0;
        const double expected = n * p;
        const double sigma = std::sqrt(n * p * (1.0 - p));
        double chi2 = 0;
        for (int bin = 0; bin <= 254; ++bin) {
            CHECK(h[bin] > 0);
            CHECK(std::abs(static_cast<double>(h[bin]) - expected) < 5.0 * sigma);
            double d = static_cast<double>(h[bin]) - expected;
            chi2 += d * d / expected;
        }
        // 0.01-significance chi-square threshold for 254 degrees of freedom.
        CHECK(chi2 < 309.354);
    }
}

TEST_CASE("keystream bytes are serially decorrelated") {
    Orbit2 orb2 = orbit2({0.1, 0.1}, Mem2DParams{1.75}, 1000, 100000);
    Keystream ks2 = keystream_from_orbit2(orb2, 100000);
    CHECK(std::abs(lag1_autocorrelation(ks2.kx)) < 0.01);
    CHECK(std::abs(lag1_autocorrelation(ks2.kq)) < 0.01);

    Orbit3 orb3 = orbit3({0.1, 0.1, 0.1}, Hyper3DParams{}, 1000, 100000);
    Keystream ks3 = keystream_from_orbit3(orb3, 100000);
    CHECK(std::abs(lag1_autocorrelation(ks3.kx)) < 0.01);
    CHECK(std::abs(lag1_autocorrelation(ks3.ky)) < 0.01);
    CHECK(std::abs(lag1_autocorrelation(ks3.kz)) < 0.01);
}

TEST_CASE("keystream_for_config is deterministic") {
    ChaoticKey key = ChaoticKey::from_hex(
        "2b7e151628aed2a6abf7158809cf4f3c2b7e151628aed2a6abf7158809cf4f3c");

    DerivedConfig c3 = derive_config(key, MapId::Hyper3D);
    Keystream a = keystream_for_config(c3, 5000);
    Keystream b = keystream_for_config(c3, 5000);
    CHECK(a.kx == b.kx);
    CHECK(a.ky == b.ky);
    CHECK(a.kz == b.kz);

    DerivedConfig c2 = derive_config(key, MapId::Mem2D);
    Keystream c = keystream_for_config(c2, 36);
    CHECK(c.kx.size() == 36);
    CHECK(c.kq.size() == 36);
    Keystream d = keystream_for_config(c2, 36);
    CHECK(c.kx == d.kx);
    CHECK(c.kq == d.kq);
}
