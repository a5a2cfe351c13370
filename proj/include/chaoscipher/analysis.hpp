#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chaoscipher/cipher.hpp"
#include "chaoscipher/image.hpp"
#include "chaoscipher/keys.hpp"

namespace chaoscipher {

// Structured metric result. Ordered containers keep serialization stable.
struct AnalysisReport {
    std::string metric_name;
    std::vector<std::pair<std::string, double>> scalars;
    std::optional<std::vector<std::pair<std::string, double>>> per_channel;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Shannon entropy in bits over the 256-bin byte histogram, flattened over all
// channel samples. Always in [0, 8].
double entropy(const ImageBuffer& img);

// Pearson correlation. Throws DegenerateVariance when either input has zero
// variance, PreconditionViolation on length mismatch or length < 2.
double pearson(std::span<const double> a, std::span<const double> b);
double pearson(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

enum class Direction { Horizontal, Vertical, Diagonal };

// Pearson over n_samples randomly sampled neighbor pairs (same channel,
// channel picked per pair for interleaved images). Seeded and deterministic.
double adjacent_pixel_correlation(const ImageBuffer& img, Direction direction,
                                  std::size_t n_samples = 5000, std::uint64_t rng_seed = 0);

// (lag, Pearson(seq, seq shifted by lag)) for lag = 1..max_lag.
std::vector<std::pair<std::size_t, double>> sequence_autocorrelation(std::span<const double> seq,
                                                                     std::size_t max_lag);

double mse(const ImageBuffer& a, const ImageBuffer& b);

// Mean local SSIM, 8x8 sliding windows, stride 1, C1=(0.01*255)^2,
// C2=(0.03*255)^2. Color inputs are scored per channel and averaged.
// Throws TooSmall when min(width, height) < 8.
double ssim(const ImageBuffer& a, const ImageBuffer& b);

// 10*log10(255^2 / MSE); nullopt marks identical inputs (MSE = 0).
std::optional<double> psnr(const ImageBuffer& a, const ImageBuffer& b);

// Percentage of differing sample positions.
double npcr(const ImageBuffer& a, const ImageBuffer& b);

// 100 * mean(|a - b| / 255).
double uaci(const ImageBuffer& a, const ImageBuffer& b);

std::array<std::uint64_t, 256> histogram(const ImageBuffer& img);
std::vector<std::array<std::uint64_t, 256>> histogram_per_channel(const ImageBuffer& img);

struct NoiseSpec {
    double variance = 0.0;
    std::uint64_t rng_seed = 0;
};

// Adds round-and-clamp Gaussian noise, Box-Muller over a counter-based
// SplitMix64 stream: byte-reproducible for a given seed on any platform.
ImageBuffer add_gaussian_noise(const ImageBuffer& img, const NoiseSpec& noise);

// encrypt -> corrupt ciphertext with Gaussian noise -> decrypt -> score the
// decryption against the original. One (mse, psnr) pair per variance,
// ascending. MSE 0 rows report the PSNR marker "identical" in metadata.
AnalysisReport noise_robustness_experiment(const ImageBuffer& plain, const ChaoticKey& key,
                                           CipherMode mode, std::vector<double> variances,
                                           std::uint64_t rng_seed);

// Decrypts once with the true config and once with one coefficient shifted by
// +perturbation (default target: a1 for the 3D map, k for the 2D map), and
// reports mse/ssim/npcr of each decryption against the original.
AnalysisReport key_sensitivity_experiment(const ImageBuffer& plain, const ChaoticKey& key,
                                          CipherMode mode, double perturbation = 0.01,
                                          const std::string& coefficient = "");

}  // namespace chaoscipher
