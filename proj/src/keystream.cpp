#include "chaoscipher/keystream.hpp"

#include <cmath>

namespace chaoscipher {

double normalize_state(double v) {
    if (!std::isfinite(v)) throw PreconditionViolation("state value must be finite");
    double scaled = std::abs(v) * 1e6;
    return scaled - std::floor(scaled);
}

std::uint8_t state_to_byte(double v) {
    return static_cast<std::uint8_t>(normalize_state(v) * 255.0);
}

Keystream keystream_from_orbit3(const Orbit3& orbit, std::size_t n_pixels) {
    if (orbit.states.size() < n_pixels)
        throw InsufficientOrbit("orbit has " + std::to_string(orbit.states.size()) +
                                " states, need " + std::to_string(n_pixels));
    Keystream ks;
    ks.length = n_pixels;
    ks.kx.resize(n_pixels);
    ks.ky.resize(n_pixels);
    ks.kz.resize(n_pixels);
    for (std::size_t t = 0; t < n_pixels; ++t) {
        const State3& s = orbit.states[t];
        ks.kx[t] = state_to_byte(s.x);
        ks.ky[t] = state_to_byte(s.y);
        ks.kz[t] = state_to_byte(s.z);
    }
    return ks;
}

Keystream keystream_from_orbit2(const Orbit2& orbit, std::size_t n_values) {
    if (orbit.states.size() < n_values)
        throw InsufficientOrbit("orbit has " + std::to_string(orbit.states.size()) +
                                " states, need " + std::to_string(n_values));
    Keystream ks;
    ks.length = n_values;
    ks.kx.resize(n_values);
    ks.kq.resize(n_values);
    for (std::size_t t = 0; t < n_values; ++t) {
        const State2& s = orbit.states[t];
        ks.kx[t] = state_to_byte(s.x);
        ks.kq[t] = state_to_byte(s.q);
    }
    return ks;
}

Keystream keystream_for_config(const DerivedConfig& config, std::size_t n_values) {
    if (config.map_id == MapId::Hyper3D) {
        Orbit3 orb = orbit3(std::get<State3>(config.seed_state),
                            std::get<Hyper3DParams>(config.params), config.burn_in, n_values);
        return keystream_from_orbit3(orb, n_values);
    }
    Orbit2 orb = orbit2(std::get<State2>(config.seed_state), std::get<Mem2DParams>(config.params),
                        config.burn_in, n_values);
    return keystream_from_orbit2(orb, n_values);
}

}  // namespace chaoscipher
