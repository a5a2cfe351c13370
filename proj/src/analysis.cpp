#include "chaoscipher/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "chaoscipher/rng.hpp"

namespace chaoscipher {

namespace {

void require_same_shape(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.width != b.width || a.height != b.height || a.channels != b.channels)
        throw ShapeMismatch("images are " + std::to_string(a.width) + "x" +
                            std::to_string(a.height) + "x" + std::to_string(a.channels) +
                            " vs " + std::to_string(b.width) + "x" + std::to_string(b.height) +
                            "x" + std::to_string(b.channels));
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

double entropy(const ImageBuffer& img) {
    if (img.pixels.empty()) throw PreconditionViolation("image is empty");
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t v : img.pixels) ++counts[v];
    double n = static_cast<double>(img.pixels.size());
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw PreconditionViolation("sequence lengths differ");
    if (a.size() < 2) throw PreconditionViolation("need at least 2 samples");

    double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= n;
    mean_b /= n;

    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - mean_a;
        double db = b[i] - mean_b;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw DegenerateVariance("correlation is undefined for a constant sequence");
    return cov / std::sqrt(var_a * var_b);
}

double pearson(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    std::vector<double> da(a.begin(), a.end());
    std::vector<double> db(b.begin(), b.end());
    return pearson(std::span<const double>(da), std::span<const double>(db));
}

double adjacent_pixel_correlation(const ImageBuffer& img, Direction direction,
                                  std::size_t n_samples, std::uint64_t rng_seed) {
    if (img.width < 2 || img.height < 2)
        throw PreconditionViolation("image must be at least 2x2");
    if (n_samples < 2) throw PreconditionViolation("need at least 2 sampled pairs");

    std::size_t dx = direction == Direction::Vertical ? 0 : 1;
    std::size_t dy = direction == Direction::Horizontal ? 0 : 1;

    SplitMix64 rng(rng_seed);
    std::vector<double> a(n_samples), b(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        std::size_t x = rng.next_below(img.width - dx);
        std::size_t y = rng.next_below(img.height - dy);
        std::size_t c = img.channels > 1 ? rng.next_below(img.channels) : 0;
        a[i] = img.pixels[(y * img.width + x) * img.channels + c];
        b[i] = img.pixels[((y + dy) * img.width + (x + dx)) * img.channels + c];
    }
    return pearson(std::span<const double>(a), std::span<const double>(b));
}

std::vector<std::pair<std::size_t, double>> sequence_autocorrelation(std::span<const double> seq,
                                                                     std::size_t max_lag) {
    if (max_lag < 1) throw PreconditionViolation("max_lag must be at least 1");
    if (seq.size() <= max_lag)
        throw PreconditionViolation("sequence must be longer than max_lag");

    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(max_lag);
    for (std::size_t lag = 1; lag <= max_lag; ++lag) {
        out.emplace_back(lag, pearson(seq.subspan(0, seq.size() - lag), seq.subspan(lag)));
    }
    return out;
}

double mse(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    if (a.pixels.empty()) throw PreconditionViolation("image is empty");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.pixels[i]) - b.pixels[i];
        acc += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(acc) / static_cast<double>(a.pixels.size());
}

namespace {

constexpr double kSsimC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kSsimC2 = (0.03 * 255.0) * (0.03 * 255.0);
constexpr std::size_t kSsimWindow = 8;

// Plane-summed-area table; all entries are exact integers in double range.
struct Integral {
    std::size_t w, h;
    std::vector<double> sum;

    Integral(std::span<const double> plane, std::size_t width, std::size_t height)
        : w(width), h(height), sum((width + 1) * (height + 1), 0.0) {
        for (std::size_t y = 0; y < h; ++y) {
            double row = 0.0;
            for (std::size_t x = 0; x < w; ++x) {
                row += plane[y * w + x];
                sum[(y + 1) * (w + 1) + (x + 1)] = sum[y * (w + 1) + (x + 1)] + row;
            }
        }
    }

    double window(std::size_t x, std::size_t y, std::size_t n) const {
        return sum[(y + n) * (w + 1) + (x + n)] - sum[y * (w + 1) + (x + n)] -
               sum[(y + n) * (w + 1) + x] + sum[y * (w + 1) + x];
    }
};

double ssim_plane(std::span<const double> pa, std::span<const double> pb, std::size_t w,
                  std::size_t h) {
    std::vector<double> aa(pa.size()), bb(pa.size()), ab(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        aa[i] = pa[i] * pa[i];
        bb[i] = pb[i] * pb[i];
        ab[i] = pa[i] * pb[i];
    }
    Integral ia(pa, w, h), ib(pb, w, h), iaa(aa, w, h), ibb(bb, w, h), iab(ab, w, h);

    const double n = kSsimWindow * kSsimWindow;
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t y = 0; y + kSsimWindow <= h; ++y) {
        for (std::size_t x = 0; x + kSsimWindow <= w; ++x) {
            double mua = ia.window(x, y, kSsimWindow) / n;
            double mub = ib.window(x, y, kSsimWindow) / n;
            double va = iaa.window(x, y, kSsimWindow) / n - mua * mua;
            double vb = ibb.window(x, y, kSsimWindow) / n - mub * mub;
            double cov = iab.window(x, y, kSsimWindow) / n - mua * mub;
            double num = (2.0 * mua * mub + kSsimC1) * (2.0 * cov + kSsimC2);
            double den = (mua * mua + mub * mub + kSsimC1) * (va + vb + kSsimC2);
            total += num / den;
            ++count;
        }
    }
    return total / static_cast<double>(count);
}

std::vector<double> extract_plane(const ImageBuffer& img, std::size_t channel) {
    std::vector<double> plane(img.pixel_count());
    for (std::size_t i = 0; i < plane.size(); ++i)
        plane[i] = img.pixels[i * img.channels + channel];
    return plane;
}

}  // namespace

double ssim(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    if (a.width < kSsimWindow || a.height < kSsimWindow)
        throw TooSmall("both dimensions must be at least 8 for SSIM");

    double total = 0.0;
    for (std::size_t c = 0; c < a.channels; ++c) {
        std::vector<double> pa = extract_plane(a, c);
        std::vector<double> pb = extract_plane(b, c);
        total += ssim_plane(pa, pb, a.width, a.height);
    }
    return total / static_cast<double>(a.channels);
}

std::optional<double> psnr(const ImageBuffer& a, const ImageBuffer& b) {
    double m = mse(a, b);
    if (m == 0.0) return std::nullopt;
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double npcr(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    if (a.pixels.empty()) throw PreconditionViolation("image is empty");
    std::size_t differing = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i)
        if (a.pixels[i] != b.pixels[i]) ++differing;
    return 100.0 * static_cast<double>(differing) / static_cast<double>(a.pixels.size());
}

double uaci(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    if (a.pixels.empty()) throw PreconditionViolation("image is empty");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        int d = static_cast<int>(a.pixels[i]) - static_cast<int>(b.pixels[i]);
        acc += static_cast<std::uint64_t>(d < 0 ? -d : d);
    }
    return 100.0 * static_cast<double>(acc) /
           (255.0 * static_cast<double>(a.pixels.size()));
}

std::array<std::uint64_t, 256> histogram(const ImageBuffer& img) {
    if (img.pixels.empty()) throw PreconditionViolation("image is empty");
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t v : img.pixels) ++counts[v];
    return counts;
}

std::vector<std::array<std::uint64_t, 256>> histogram_per_channel(const ImageBuffer& img) {
    if (img.pixels.empty()) throw PreconditionViolation("image is empty");
    std::vector<std::array<std::uint64_t, 256>> counts(img.channels);
    for (auto& c : counts) c.fill(0);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        ++counts[i % img.channels][img.pixels[i]];
    return counts;
}

ImageBuffer add_gaussian_noise(const ImageBuffer& img, const NoiseSpec& noise) {
    if (noise.variance < 0.0) throw PreconditionViolation("variance must be non-negative");

    double sigma = std::sqrt(noise.variance);
    ImageBuffer out = img;
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        std::uint64_t base = 2 * static_cast<std::uint64_t>(i);
        double u1 =
            static_cast<double>((stream_u64(noise.rng_seed, base) >> 11) + 1) * 0x1.0p-53;
        double u2 = static_cast<double>(stream_u64(noise.rng_seed, base + 1) >> 11) * 0x1.0p-53;
        double g = sigma * std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * std::numbers::pi * u2);
        long v = std::lround(static_cast<double>(out.pixels[i]) + g);
        out.pixels[i] = static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
    }
    return out;
}

AnalysisReport noise_robustness_experiment(const ImageBuffer& plain, const ChaoticKey& key,
                                           CipherMode mode, std::vector<double> variances,
                                           std::uint64_t rng_seed) {
    if (variances.empty()) throw PreconditionViolation("need at least one variance");
    std::sort(variances.begin(), variances.end());

    DerivedConfig config = derive_config(key, mode);
    ImageBuffer cipher = encrypt_with_config(plain, config);

    AnalysisReport report;
    report.metric_name = "noise_robustness";
    for (double variance : variances) {
        ImageBuffer noisy = add_gaussian_noise(cipher, NoiseSpec{variance, rng_seed});
        ImageBuffer decrypted = decrypt_with_config(noisy, config);
        double m = mse(plain, decrypted);
        std::string suffix = "_v" + format_number(variance);
        report.scalars.emplace_back("mse" + suffix, m);
        if (auto p = psnr(plain, decrypted))
            report.scalars.emplace_back("psnr" + suffix, *p);
        else
            report.metadata.emplace_back("psnr" + suffix, "identical");
    }
    report.metadata.emplace_back("mode", mode == CipherMode::Hyper3D ? "3d" : "2d");
    report.metadata.emplace_back("width", std::to_string(plain.width));
    report.metadata.emplace_back("height", std::to_string(plain.height));
    report.metadata.emplace_back("channels", std::to_string(plain.channels));
    report.metadata.emplace_back("rng_seed", std::to_string(rng_seed));
    return report;
}

AnalysisReport key_sensitivity_experiment(const ImageBuffer& plain, const ChaoticKey& key,
                                          CipherMode mode, double perturbation,
                                          const std::string& coefficient) {
    if (perturbation <= 0.0) throw PreconditionViolation("perturbation must be positive");

    DerivedConfig config = derive_config(key, mode);
    std::string coeff = coefficient;
    if (coeff.empty()) coeff = mode == CipherMode::Hyper3D ? "a1" : "k";

    DerivedConfig perturbed = config;
    if (mode == CipherMode::Hyper3D) {
        auto& p = std::get<Hyper3DParams>(perturbed.params);
        double* field = coeff == "a1"   ? &p.a1
                        : coeff == "a2" ? &p.a2
                        : coeff == "a3" ? &p.a3
                        : coeff == "b1" ? &p.b1
                        : coeff == "b2" ? &p.b2
                        : coeff == "c"  ? &p.c
                                        : nullptr;
        if (!field) throw PreconditionViolation("unknown 3D coefficient: " + coeff);
        *field += perturbation;
    } else {
        if (coeff != "k") throw PreconditionViolation("unknown 2D coefficient: " + coeff);
        std::get<Mem2DParams>(perturbed.params).k += perturbation;
    }

    ImageBuffer cipher = encrypt_with_config(plain, config);
    ImageBuffer true_dec = decrypt_with_config(cipher, config);
    ImageBuffer bad_dec = decrypt_with_config(cipher, perturbed);

    AnalysisReport report;
    report.metric_name = "key_sensitivity";
    report.scalars.emplace_back("true_mse", mse(plain, true_dec));
    report.scalars.emplace_back("true_ssim", ssim(plain, true_dec));
    report.scalars.emplace_back("true_npcr", npcr(plain, true_dec));
    report.scalars.emplace_back("perturbed_mse", mse(plain, bad_dec));
    report.scalars.emplace_back("perturbed_ssim", ssim(plain, bad_dec));
    report.scalars.emplace_back("perturbed_npcr", npcr(plain, bad_dec));
    report.metadata.emplace_back("mode", mode == CipherMode::Hyper3D ? "3d" : "2d");
    report.metadata.emplace_back("coefficient", coeff);
    report.metadata.emplace_back("perturbation", format_number(perturbation));
    report.metadata.emplace_back("width", std::to_string(plain.width));
    report.metadata.emplace_back("height", std::to_string(plain.height));
    report.metadata.emplace_back("channels", std::to_string(plain.channels));
    return report;
}

}  // namespace chaoscipher
