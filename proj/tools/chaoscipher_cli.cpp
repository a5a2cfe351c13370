// chaoscipher: keystream image encryption driven by two chaotic maps, plus
// the dynamics and security analysis harnesses, on binary PGM/PPM files.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaoscipher/analysis.hpp"
#include "chaoscipher/cipher.hpp"
#include "chaoscipher/imageio.hpp"
#include "chaoscipher/keys.hpp"
#include "chaoscipher/keystream.hpp"
#include "chaoscipher/maps.hpp"
#include "chaoscipher/serialize.hpp"

namespace cc = chaoscipher;
using ordered_json = nlohmann::ordered_json;

namespace {

struct KeyFlags {
    std::string key_hex;
    std::string key_file;
};

void add_key_flags(CLI::App* cmd, KeyFlags& flags) {
    auto* key = cmd->add_option("--key", flags.key_hex, "Key as a hex string");
    auto* file = cmd->add_option("--key-file", flags.key_file,
                                 "File containing the hex key");
    key->excludes(file);
    file->excludes(key);
}

// Flag wins over file; CHAOSCIPHER_KEY is the fallback. Returns nullopt when
// nothing resolves (caller reports a usage error).
std::optional<cc::ChaoticKey> resolve_key(const KeyFlags& flags) {
    if (!flags.key_hex.empty()) return cc::ChaoticKey::from_hex(flags.key_hex);
    if (!flags.key_file.empty()) {
        std::ifstream in(flags.key_file);
        if (!in) throw cc::IoFailure("cannot read key file " + flags.key_file);
        std::string hex;
        in >> hex;
        return cc::ChaoticKey::from_hex(hex);
    }
    if (const char* env = std::getenv("CHAOSCIPHER_KEY"); env && *env)
        return cc::ChaoticKey::from_hex(env);
    return std::nullopt;
}

cc::CipherMode parse_mode(const std::string& mode, const cc::ImageBuffer& img) {
    if (mode == "3d") return cc::CipherMode::Hyper3D;
    if (mode == "2d") return cc::CipherMode::Mem2D;
    return img.channels == 1 ? cc::CipherMode::Hyper3D : cc::CipherMode::Mem2D;
}

void require_input_file(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw cc::IoFailure("input file does not exist: " + path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out || !(out << text)) throw cc::IoFailure("cannot write " + out_path);
}

std::string report_as(const cc::AnalysisReport& report, const std::string& format) {
    if (format == "json") return cc::report_to_json(report);
    if (format == "csv") return cc::report_to_csv(report);
    std::ostringstream out;
    for (const auto& [name, value] : report.scalars) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", value);
        out << name << ' ' << buf << '\n';
    }
    if (report.per_channel)
        for (const auto& [name, value] : *report.per_channel) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%g", value);
            out << name << ' ' << buf << '\n';
        }
    for (const auto& [name, value] : report.metadata) out << name << ' ' << value << '\n';
    return out.str();
}

int run_crypt(bool encrypting, const std::string& in_path, const std::string& out_path,
              const KeyFlags& key_flags, const std::string& mode_flag) {
    require_input_file(in_path);
    auto key = resolve_key(key_flags);
    if (!key) {
        std::cerr << "error: no key given (use --key, --key-file, or CHAOSCIPHER_KEY)\n";
        return 1;
    }
    auto start = std::chrono::steady_clock::now();
    cc::ImageBuffer img = cc::load_image(in_path);
    cc::CipherMode mode = parse_mode(mode_flag, img);
    cc::ImageBuffer out =
        encrypting ? cc::encrypt_with_key(img, *key, mode) : cc::decrypt_with_key(img, *key, mode);
    cc::save_image(out, out_path);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
    ordered_json summary{{"width", out.width},
                         {"height", out.height},
                         {"channels", out.channels},
                         {"mode", mode == cc::CipherMode::Hyper3D ? "3d" : "2d"},
                         {"elapsed_ms", elapsed}};
    std::cout << summary.dump() << '\n';
    return 0;
}

cc::AnalysisReport analyze_metric(const std::string& metric,
                                  const std::vector<std::string>& paths, std::size_t samples,
                                  std::uint64_t seed, bool per_channel) {
    auto need = [&](std::size_t n) {
        if (paths.size() != n)
            throw cc::PreconditionViolation(metric + " needs exactly " + std::to_string(n) +
                                            " image path(s)");
        for (const std::string& p : paths) require_input_file(p);
    };

    cc::AnalysisReport report;
    report.metric_name = metric;

    if (metric == "entropy") {
        need(1);
        cc::ImageBuffer img = cc::load_image(paths[0]);
        report.scalars.emplace_back("entropy", cc::entropy(img));
    } else if (metric == "adjacency") {
        need(1);
        cc::ImageBuffer img = cc::load_image(paths[0]);
        report.scalars.emplace_back(
            "horizontal",
            cc::adjacent_pixel_correlation(img, cc::Direction::Horizontal, samples, seed));
        report.scalars.emplace_back(
            "vertical",
            cc::adjacent_pixel_correlation(img, cc::Direction::Vertical, samples, seed));
        report.scalars.emplace_back(
            "diagonal",
            cc::adjacent_pixel_correlation(img, cc::Direction::Diagonal, samples, seed));
        report.metadata.emplace_back("samples", std::to_string(samples));
        report.metadata.emplace_back("rng_seed", std::to_string(seed));
    } else if (metric == "correlation") {
        need(2);
        cc::ImageBuffer a = cc::load_image(paths[0]);
        cc::ImageBuffer b = cc::load_image(paths[1]);
        if (a.sample_count() != b.sample_count())
            throw cc::ShapeMismatch("images have different sample counts");
        report.scalars.emplace_back(
            "pearson", cc::pearson(std::span<const std::uint8_t>(a.pixels),
                                   std::span<const std::uint8_t>(b.pixels)));
        if (a.channels == 3 && b.channels == 3) {
            static constexpr const char* kNames[3] = {"red", "green", "blue"};
            std::vector<std::pair<std::string, double>> pc;
            for (std::size_t c = 0; c < 3; ++c) {
                std::vector<std::uint8_t> ca, cb;
                ca.reserve(a.pixel_count());
                cb.reserve(b.pixel_count());
                for (std::size_t i = c; i < a.pixels.size(); i += 3) {
                    ca.push_back(a.pixels[i]);
                    cb.push_back(b.pixels[i]);
                }
                pc.emplace_back(kNames[c],
                                cc::pearson(std::span<const std::uint8_t>(ca),
                                            std::span<const std::uint8_t>(cb)));
            }
            report.per_channel = std::move(pc);
        }
    } else if (metric == "histogram") {
        need(1);
        cc::ImageBuffer img = cc::load_image(paths[0]);
        if (per_channel && img.channels > 1) {
            auto hists = cc::histogram_per_channel(img);
            for (std::size_t c = 0; c < hists.size(); ++c)
                for (std::size_t bin = 0; bin < 256; ++bin)
                    report.scalars.emplace_back(
                        "ch" + std::to_string(c) + "_bin_" + std::to_string(bin),
                        static_cast<double>(hists[c][bin]));
        } else {
            auto hist = cc::histogram(img);
            for (std::size_t bin = 0; bin < 256; ++bin)
                report.scalars.emplace_back("bin_" + std::to_string(bin),
                                            static_cast<double>(hist[bin]));
        }
    } else if (metric == "mse" || metric == "ssim" || metric == "psnr" || metric == "npcr" ||
               metric == "uaci") {
        need(2);
        cc::ImageBuffer a = cc::load_image(paths[0]);
        cc::ImageBuffer b = cc::load_image(paths[1]);
        if (metric == "mse") {
            report.scalars.emplace_back("mse", cc::mse(a, b));
        } else if (metric == "ssim") {
            report.scalars.emplace_back("ssim", cc::ssim(a, b));
        } else if (metric == "psnr") {
            if (auto p = cc::psnr(a, b))
                report.scalars.emplace_back("psnr", *p);
            else
                report.metadata.emplace_back("psnr", "identical");
        } else if (metric == "npcr") {
            report.scalars.emplace_back("npcr", cc::npcr(a, b));
        } else {
            report.scalars.emplace_back("uaci", cc::uaci(a, b));
        }
    } else {
        throw cc::PreconditionViolation("unknown metric: " + metric);
    }
    return report;
}

std::vector<double> parse_seed_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chaotic-map image encryption and analysis toolkit"};
    app.require_subcommand(1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "Generate a random key");
    std::size_t bits = 256;
    keygen->add_option("--bits", bits, "Key length in bits")
        ->check(CLI::IsMember({128, 256}))
        ->capture_default_str();

    // encrypt / decrypt
    std::string in_path, out_path, mode_flag;
    KeyFlags key_flags;
    auto add_crypt = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--in", in_path, "Input image (P5/P6)")->required();
        cmd->add_option("--out", out_path, "Output image path")->required();
        cmd->add_option("--mode", mode_flag, "Cipher mode (default: 3d for gray, 2d for color)")
            ->check(CLI::IsMember({"3d", "2d"}));
        add_key_flags(cmd, key_flags);
        return cmd;
    };
    auto* encrypt = add_crypt("encrypt", "Encrypt an image");
    auto* decrypt = add_crypt("decrypt", "Decrypt an image");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Compute a metric over image(s)");
    std::string metric;
    std::vector<std::string> metric_paths;
    std::size_t adj_samples = 5000;
    std::uint64_t rng_seed = 0;
    bool per_channel = false;
    std::string format = "text";
    std::string analyze_out;
    analyze->add_option("metric", metric, "entropy|correlation|adjacency|histogram|mse|ssim|psnr|npcr|uaci")
        ->required()
        ->check(CLI::IsMember({"entropy", "correlation", "adjacency", "histogram", "mse", "ssim",
                               "psnr", "npcr", "uaci"}));
    analyze->add_option("paths", metric_paths, "Image path(s)")->required();
    analyze->add_option("--samples", adj_samples, "Sampled pairs for adjacency")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    analyze->add_option("--seed", rng_seed, "RNG seed for sampled metrics");
    analyze->add_flag("--per-channel", per_channel, "Per-channel histogram");
    analyze->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    analyze->add_option("--out", analyze_out, "Write output to a file instead of stdout");

    // lyapunov
    auto* lyapunov = app.add_subcommand("lyapunov", "Estimate the Lyapunov spectrum");
    std::string map_flag = "3d";
    double k_flag = 1.75;
    cc::Hyper3DParams params3;
    std::string seed_state_flag;
    std::size_t burn_in = 1000, iters = 100000, renorm = 1;
    lyapunov->add_option("--map", map_flag, "3d or 2d")
        ->check(CLI::IsMember({"3d", "2d"}))
        ->capture_default_str();
    lyapunov->add_option("--k", k_flag, "2D map parameter")->capture_default_str();
    lyapunov->add_option("--a1", params3.a1)->capture_default_str();
    lyapunov->add_option("--a2", params3.a2)->capture_default_str();
    lyapunov->add_option("--a3", params3.a3)->capture_default_str();
    lyapunov->add_option("--b1", params3.b1)->capture_default_str();
    lyapunov->add_option("--b2", params3.b2)->capture_default_str();
    lyapunov->add_option("--c", params3.c)->capture_default_str();
    lyapunov->add_option("--seed-state", seed_state_flag,
                         "Comma-separated initial state (default 0.1 per component)");
    lyapunov->add_option("--burn-in", burn_in)->capture_default_str();
    lyapunov->add_option("--n", iters, "Iterations")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}))
        ->capture_default_str();
    lyapunov->add_option("--renorm", renorm, "QR re-orthonormalization interval")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
        ->capture_default_str();
    lyapunov->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // bifurcate
    auto* bifurcate = app.add_subcommand("bifurcate", "Parameter sweep of long-run samples");
    std::string sweep_param = "k", range_flag, bif_out, component = "x";
    std::size_t sweep_steps = 100, sweep_samples = cc::kBifurcationSamples,
                sweep_burn = cc::kBifurcationBurnIn;
    bifurcate->add_option("--map", map_flag, "3d or 2d")
        ->check(CLI::IsMember({"3d", "2d"}))
        ->required();
    bifurcate->add_option("--param", sweep_param, "Swept parameter name")->required();
    bifurcate->add_option("--range", range_flag, "lo:hi")->required();
    bifurcate->add_option("--steps", sweep_steps, "Parameter values to evaluate")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))
        ->capture_default_str();
    bifurcate->add_option("--samples", sweep_samples, "Samples recorded per value")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}))
        ->capture_default_str();
    bifurcate->add_option("--burn-in", sweep_burn)->capture_default_str();
    bifurcate->add_option("--component", component, "State component to record")
        ->check(CLI::IsMember({"x", "y", "z", "q"}));
    bifurcate->add_option("--seed-state", seed_state_flag, "Comma-separated initial state");
    bifurcate->add_option("--k", k_flag, "2D base parameter")->capture_default_str();
    bifurcate->add_option("--out", bif_out, "Write output to a file instead of stdout");
    bifurcate->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // noise-test
    auto* noise = app.add_subcommand("noise-test", "Noise robustness experiment");
    std::string variances_flag = "10,100,1000";
    noise->add_option("--in", in_path, "Plain image")->required();
    add_key_flags(noise, key_flags);
    noise->add_option("--mode", mode_flag, "Cipher mode")->check(CLI::IsMember({"3d", "2d"}));
    noise->add_option("--variances", variances_flag, "Comma-separated noise variances")
        ->capture_default_str();
    noise->add_option("--seed", rng_seed, "Noise RNG seed");
    noise->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    noise->add_option("--out", analyze_out, "Write output to a file instead of stdout");

    // keysens
    auto* keysens = app.add_subcommand("keysens", "Key sensitivity experiment");
    double perturbation = 0.01;
    std::string coefficient;
    keysens->add_option("--in", in_path, "Plain image")->required();
    add_key_flags(keysens, key_flags);
    keysens->add_option("--mode", mode_flag, "Cipher mode")->check(CLI::IsMember({"3d", "2d"}));
    keysens->add_option("--perturbation", perturbation, "Coefficient shift")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    keysens->add_option("--coeff", coefficient, "Coefficient to perturb (default a1 or k)");
    keysens->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    keysens->add_option("--out", analyze_out, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (keygen->parsed()) {
            std::cout << cc::generate_key(bits).hex << '\n';
            return 0;
        }
        if (encrypt->parsed()) return run_crypt(true, in_path, out_path, key_flags, mode_flag);
        if (decrypt->parsed()) return run_crypt(false, in_path, out_path, key_flags, mode_flag);

        if (analyze->parsed()) {
            cc::AnalysisReport report =
                analyze_metric(metric, metric_paths, adj_samples, rng_seed, per_channel);
            emit(report_as(report, format), analyze_out);
            return 0;
        }

        if (lyapunov->parsed()) {
            cc::LyapunovSpectrum spectrum;
            try {
                if (map_flag == "2d") {
                    cc::State2 seed{0.1, 0.1};
                    if (!seed_state_flag.empty()) {
                        auto v = parse_seed_list(seed_state_flag);
                        if (v.size() != 2)
                            throw cc::PreconditionViolation("2d seed state needs 2 components");
                        seed = {v[0], v[1]};
                    }
                    spectrum =
                        cc::lyapunov_spectrum2(cc::Mem2DParams{k_flag}, seed, burn_in, iters,
                                               renorm);
                } else {
                    cc::State3 seed{0.1, 0.1, 0.1};
                    if (!seed_state_flag.empty()) {
                        auto v = parse_seed_list(seed_state_flag);
                        if (v.size() != 3)
                            throw cc::PreconditionViolation("3d seed state needs 3 components");
                        seed = {v[0], v[1], v[2]};
                    }
                    spectrum = cc::lyapunov_spectrum3(params3, seed, burn_in, iters, renorm);
                }
            } catch (const cc::OrbitDiverged& e) {
                std::string where = map_flag == "2d" ? "k=" + std::to_string(k_flag)
                                                     : "a1=" + std::to_string(params3.a1);
                throw cc::OrbitDiverged(std::string(e.what()) + " (" + where + ")");
            }
            if (format == "json") {
                emit(cc::spectrum_to_json(spectrum), "");
            } else if (format == "csv") {
                emit(cc::spectrum_to_csv(spectrum), "");
            } else {
                std::ostringstream out;
                for (std::size_t i = 0; i < spectrum.exponents.size(); ++i)
                    out << "lambda_" << (i + 1) << ' ' << spectrum.exponents[i] << '\n';
                emit(out.str(), "");
            }
            return 0;
        }

        if (bifurcate->parsed()) {
            auto colon = range_flag.find(':');
            if (colon == std::string::npos)
                throw cc::PreconditionViolation("--range must look like lo:hi");
            double lo = std::stod(range_flag.substr(0, colon));
            double hi = std::stod(range_flag.substr(colon + 1));
            if (!(lo < hi)) throw cc::PreconditionViolation("--range must satisfy lo < hi");

            cc::BifurcationTable table;
            if (map_flag == "2d") {
                cc::State2 seed{0.1, 0.1};
                if (!seed_state_flag.empty()) {
                    auto v = parse_seed_list(seed_state_flag);
                    if (v.size() != 2)
                        throw cc::PreconditionViolation("2d seed state needs 2 components");
                    seed = {v[0], v[1]};
                }
                table = cc::bifurcation_sweep2(cc::Mem2DParams{k_flag}, sweep_param, lo, hi,
                                               sweep_steps, seed, sweep_burn, sweep_samples,
                                               component[0]);
            } else {
                cc::State3 seed{0.1, 0.1, 0.1};
                if (!seed_state_flag.empty()) {
                    auto v = parse_seed_list(seed_state_flag);
                    if (v.size() != 3)
                        throw cc::PreconditionViolation("3d seed state needs 3 components");
                    seed = {v[0], v[1], v[2]};
                }
                table = cc::bifurcation_sweep3(params3, sweep_param, lo, hi, sweep_steps, seed,
                                               sweep_burn, sweep_samples, component[0]);
            }
            emit(format == "json" ? cc::bifurcation_to_json(table) : cc::bifurcation_to_csv(table),
                 bif_out);
            return 0;
        }

        if (noise->parsed()) {
            require_input_file(in_path);
            auto key = resolve_key(key_flags);
            if (!key) {
                std::cerr << "error: no key given (use --key, --key-file, or CHAOSCIPHER_KEY)\n";
                return 1;
            }
            cc::ImageBuffer img = cc::load_image(in_path);
            cc::AnalysisReport report = cc::noise_robustness_experiment(
                img, *key, parse_mode(mode_flag, img), parse_seed_list(variances_flag), rng_seed);
            emit(report_as(report, format), analyze_out);
            return 0;
        }

        if (keysens->parsed()) {
            require_input_file(in_path);
            auto key = resolve_key(key_flags);
            if (!key) {
                std::cerr << "error: no key given (use --key, --key-file, or CHAOSCIPHER_KEY)\n";
                return 1;
            }
            cc::ImageBuffer img = cc::load_image(in_path);
            cc::AnalysisReport report = cc::key_sensitivity_experiment(
                img, *key, parse_mode(mode_flag, img), perturbation, coefficient);
            emit(report_as(report, format), analyze_out);
            return 0;
        }
    } catch (const cc::ChaosError& e) {
        std::cerr << "error: " << e.what() << '\n' << e.name() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n' << "InternalError" << '\n';
        return 2;
    }
    return 0;
}
