#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "chaoscipher/errors.hpp"

namespace chaoscipher {

// 3D hyperchaotic map:
//   x' = a1*x + a2*y + a3*y^2
//   y' = b1 - b2*z
//   z' = c*x
struct Hyper3DParams {
    double a1 = 0.05;
    double a2 = 0.25;
    double a3 = 0.11;
    double b1 = 4.0;
    double b2 = 1.2;
    double c = 2.15;

    bool operator==(const Hyper3DParams&) const = default;
};

// 2D memristor map:
//   x' = k*(q^2 - 1)*x
//   q' = q + x
struct Mem2DParams {
    double k = 1.75;

    bool operator==(const Mem2DParams&) const = default;
};

struct State3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const State3&) const = default;
};

struct State2 {
    double x = 0.0;
    double q = 0.0;

    bool operator==(const State2&) const = default;
};

enum class MapId { Hyper3D, Mem2D };

// Any state component beyond this magnitude (or non-finite) raises OrbitDiverged.
inline constexpr double kDivergenceLimit = 1e12;

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat2 = std::array<std::array<double, 2>, 2>;

State3 step3(const State3& s, const Hyper3DParams& p);
State2 step2(const State2& s, const Mem2DParams& p);

Mat3 jacobian3(const State3& s, const Hyper3DParams& p);
Mat2 jacobian2(const State2& s, const Mem2DParams& p);

struct Orbit3 {
    std::vector<State3> states;
    Hyper3DParams params;
    State3 seed_state;
    std::size_t burn_in = 0;
};

struct Orbit2 {
    std::vector<State2> states;
    Mem2DParams params;
    State2 seed_state;
    std::size_t burn_in = 0;
};

// Iterates burn_in steps discarding output, then records n states.
// Throws OrbitDiverged with the failing iteration index in the message.
Orbit3 orbit3(const State3& seed, const Hyper3DParams& p, std::size_t burn_in, std::size_t n);
Orbit2 orbit2(const State2& seed, const Mem2DParams& p, std::size_t burn_in, std::size_t n);

// Extracts one state component ('x','y','z' / 'x','q') as a flat vector.
std::vector<double> orbit_component(const Orbit3& orbit, char which);
std::vector<double> orbit_component(const Orbit2& orbit, char which);

struct LyapunovSpectrum {
    std::vector<double> exponents;  // sorted descending, length = map dimension
    std::size_t iterations = 0;
    std::size_t renorm_interval = 1;
};

// Tangent-space QR method: evolve an orthonormal frame with the Jacobian,
// re-orthonormalize every renorm_interval steps (modified Gram-Schmidt),
// accumulate log stretch factors, divide by the iteration count.
LyapunovSpectrum lyapunov_spectrum3(const Hyper3DParams& p, const State3& seed,
                                    std::size_t burn_in, std::size_t n,
                                    std::size_t renorm_interval = 1);
LyapunovSpectrum lyapunov_spectrum2(const Mem2DParams& p, const State2& seed,
                                    std::size_t burn_in, std::size_t n,
                                    std::size_t renorm_interval = 1);

struct BifurcationRow {
    double param_value = 0.0;
    std::vector<double> samples;  // empty when diverged
    bool diverged = false;
};

struct BifurcationTable {
    std::string sweep_param;
    char component = 'x';
    std::vector<BifurcationRow> rows;  // ordered by param_value ascending
};

inline constexpr std::size_t kBifurcationBurnIn = 2000;
inline constexpr std::size_t kBifurcationSamples = 200;

// Sweeps one named parameter over `steps` evenly spaced values in [lo, hi]
// (endpoints included) and records `samples_per_value` values of the chosen
// state component per parameter value. Divergent rows are flagged, not fatal.
BifurcationTable bifurcation_sweep3(const Hyper3DParams& base, const std::string& param_name,
                                    double lo, double hi, std::size_t steps, const State3& seed,
                                    std::size_t burn_in = kBifurcationBurnIn,
                                    std::size_t samples_per_value = kBifurcationSamples,
                                    char component = 'x');
BifurcationTable bifurcation_sweep2(const Mem2DParams& base, const std::string& param_name,
                                    double lo, double hi, std::size_t steps, const State2& seed,
                                    std::size_t burn_in = kBifurcationBurnIn,
                                    std::size_t samples_per_value = kBifurcationSamples,
                                    char component = 'x');

}  // namespace chaoscipher
