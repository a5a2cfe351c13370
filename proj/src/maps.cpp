#include "chaoscipher/maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace chaoscipher {

namespace {

inline State3 advance3(const State3& s, const Hyper3DParams& p) {
    return {p.a1 * s.x + p.a2 * s.y + p.a3 * s.y * s.y,
            p.b1 - p.b2 * s.z,
            p.c * s.x};
}

inline State2 advance2(const State2& s, const Mem2DParams& p) {
    return {p.k * (s.q * s.q - 1.0) * s.x, s.q + s.x};
}

inline bool bad(double v) {
    return !std::isfinite(v) || std::abs(v) > kDivergenceLimit;
}

inline bool diverged(const State3& s) { return bad(s.x) || bad(s.y) || bad(s.z); }
inline bool diverged(const State2& s) { return bad(s.x) || bad(s.q); }

[[noreturn]] void throw_diverged(std::size_t iteration) {
    throw OrbitDiverged("state exceeded magnitude 1e12 or became non-finite at iteration " +
                        std::to_string(iteration));
}

}  // namespace

State3 step3(const State3& s, const Hyper3DParams& p) {
    State3 next = advance3(s, p);
    if (diverged(next))
        throw OrbitDiverged("step produced a non-finite or out-of-range state component");
    return next;
}

State2 step2(const State2& s, const Mem2DParams& p) {
    State2 next = advance2(s, p);
    if (diverged(next))
        throw OrbitDiverged("step produced a non-finite or out-of-range state component");
    return next;
}

Mat3 jacobian3(const State3& s, const Hyper3DParams& p) {
    return Mat3{{{p.a1, p.a2 + 2.0 * p.a3 * s.y, 0.0},
                 {0.0, 0.0, -p.b2},
                 {p.c, 0.0, 0.0}}};
}

Mat2 jacobian2(const State2& s, const Mem2DParams& p) {
    return Mat2{{{p.k * (s.q * s.q - 1.0), 2.0 * p.k * s.q * s.x},
                 {1.0, 1.0}}};
}

Orbit3 orbit3(const State3& seed, const Hyper3DParams& p, std::size_t burn_in, std::size_t n) {
    if (n < 1) throw PreconditionViolation("orbit length must be at least 1");
    Orbit3 out{{}, p, seed, burn_in};
    out.states.reserve(n);
    State3 s = seed;
    for (std::size_t i = 0; i < burn_in + n; ++i) {
        s = advance3(s, p);
        if (diverged(s)) throw_diverged(i);
        if (i >= burn_in) out.states.push_back(s);
    }
    return out;
}

Orbit2 orbit2(const State2& seed, const Mem2DParams& p, std::size_t burn_in, std::size_t n) {
    if (n < 1) throw PreconditionViolation("orbit length must be at least 1");
    Orbit2 out{{}, p, seed, burn_in};
    out.states.reserve(n);
    State2 s = seed;
    for (std::size_t i = 0; i < burn_in + n; ++i) {
        s = advance2(s, p);
        if (diverged(s)) throw_diverged(i);
        if (i >= burn_in) out.states.push_back(s);
    }
    return out;
}

std::vector<double> orbit_component(const Orbit3& orbit, char which) {
    std::vector<double> out;
    out.reserve(orbit.states.size());
    for (const State3& s : orbit.states) {
        switch (which) {
            case 'x': out.push_back(s.x); break;
            case 'y': out.push_back(s.y); break;
            case 'z': out.push_back(s.z); break;
            default: throw PreconditionViolation("unknown 3D component: " + std::string(1, which));
        }
    }
    return out;
}

std::vector<double> orbit_component(const Orbit2& orbit, char which) {
    std::vector<double> out;
    out.reserve(orbit.states.size());
    for (const State2& s : orbit.states) {
        switch (which) {
            case 'x': out.push_back(s.x); break;
            case 'q': out.push_back(s.q); break;
            default: throw PreconditionViolation("unknown 2D component: " + std::string(1, which));
        }
    }
    return out;
}

namespace {

// Modified Gram-Schmidt over the columns of frame; adds log column norms into
// log_sums. Throws DegenerateTangent on a zero or non-finite stretch.
template <std::size_t N>
void qr_renormalize(std::array<std::array<double, N>, N>& frame,
                    std::array<double, N>& log_sums) {
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            double dot = 0.0;
            for (std::size_t r = 0; r < N; ++r) dot += frame[r][i] * frame[r][j];
            for (std::size_t r = 0; r < N; ++r) frame[r][j] -= dot * frame[r][i];
        }
        double norm_sq = 0.0;
        for (std::size_t r = 0; r < N; ++r) norm_sq += frame[r][j] * frame[r][j];
        double norm = std::sqrt(norm_sq);
        if (norm == 0.0 || !std::isfinite(norm)) {
            throw DegenerateTangent("tangent stretch factor collapsed to zero in column " +
                                    std::to_string(j));
        }
        for (std::size_t r = 0; r < N; ++r) frame[r][j] /= norm;
        log_sums[j] += std::log(norm);
    }
}

template <std::size_t N, typename State, typename Params, typename Advance, typename Jac,
          typename Bad>
LyapunovSpectrum spectrum_impl(const Params& p, State s, std::size_t burn_in, std::size_t n,
                               std::size_t renorm_interval, Advance advance, Jac jac, Bad is_bad) {
    if (n < 1) throw PreconditionViolation("iteration count must be at least 1");
    if (renorm_interval < 1) throw PreconditionViolation("renorm interval must be at least 1");

    for (std::size_t i = 0; i < burn_in; ++i) {
        s = advance(s, p);
        if (is_bad(s)) throw_diverged(i);
    }

    std::array<std::array<double, N>, N> frame{};
    for (std::size_t i = 0; i < N; ++i) frame[i][i] = 1.0;
    std::array<double, N> log_sums{};

    std::size_t since_renorm = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto J = jac(s, p);
        std::array<std::array<double, N>, N> next{};
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                double acc = 0.0;
                for (std::size_t m = 0; m < N; ++m) acc += J[r][m] * frame[m][c];
                next[r][c] = acc;
            }
        frame = next;
        s = advance(s, p);
        if (is_bad(s)) throw_diverged(burn_in + i);
        if (++since_renorm == renorm_interval) {
            qr_renormalize<N>(frame, log_sums);
            since_renorm = 0;
        }
    }
    if (since_renorm > 0) qr_renormalize<N>(frame, log_sums);

    LyapunovSpectrum out;
    out.iterations = n;
    out.renorm_interval = renorm_interval;
    out.exponents.assign(log_sums.begin(), log_sums.end());
    for (double& e : out.exponents) e /= static_cast<double>(n);
    std::sort(out.exponents.begin(), out.exponents.end(), std::greater<>());
    return out;
}

}  // namespace

LyapunovSpectrum lyapunov_spectrum3(const Hyper3DParams& p, const State3& seed,
                                    std::size_t burn_in, std::size_t n,
                                    std::size_t renorm_interval) {
    return spectrum_impl<3, State3>(
        p, seed, burn_in, n, renorm_interval,
        [](const State3& s, const Hyper3DParams& q) { return advance3(s, q); },
        [](const State3& s, const Hyper3DParams& q) { return jacobian3(s, q); },
        [](const State3& s) { return diverged(s); });
}

LyapunovSpectrum lyapunov_spectrum2(const Mem2DParams& p, const State2& seed,
                                    std::size_t burn_in, std::size_t n,
                                    std::size_t renorm_interval) {
    return spectrum_impl<2, State2>(
        p, seed, burn_in, n, renorm_interval,
        [](const State2& s, const Mem2DParams& q) { return advance2(s, q); },
        [](const State2& s, const Mem2DParams& q) { return jacobian2(s, q); },
        [](const State2& s) { return diverged(s); });
}

namespace {

double* param_field(Hyper3DParams& p, const std::string& name) {
    if (name == "a1") return &p.a1;
    if (name == "a2") return &p.a2;
    if (name == "a3") return &p.a3;
    if (name == "b1") return &p.b1;
    if (name == "b2") return &p.b2;
    if (name == "c") return &p.c;
    return nullptr;
}

double* param_field(Mem2DParams& p, const std::string& name) {
    if (name == "k") return &p.k;
    return nullptr;
}

template <typename Params, typename State, typename RunOrbit>
BifurcationTable sweep_impl(const Params& base, const std::string& param_name, double lo,
                            double hi, std::size_t steps, const State& seed, std::size_t burn_in,
                            std::size_t samples_per_value, char component, RunOrbit run_orbit) {
    if (!(lo < hi)) throw PreconditionViolation("sweep range must satisfy lo < hi");
    if (steps < 2) throw PreconditionViolation("sweep needs at least 2 steps");
    if (samples_per_value < 1) throw PreconditionViolation("samples_per_value must be at least 1");

    Params probe = base;
    if (param_field(probe, param_name) == nullptr)
        throw PreconditionViolation("unknown sweep parameter: " + param_name);

    BifurcationTable table;
    table.sweep_param = param_name;
    table.component = component;
    table.rows.reserve(steps);

    for (std::size_t i = 0; i < steps; ++i) {
        double value = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
        Params p = base;
        *param_field(p, param_name) = value;
        BifurcationRow row;
        row.param_value = value;
        try {
            auto orb = run_orbit(seed, p, burn_in, samples_per_value);
            row.samples = orbit_component(orb, component);
        } catch (const OrbitDiverged&) {
            row.diverged = true;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

BifurcationTable bifurcation_sweep3(const Hyper3DParams& base, const std::string& param_name,
                                    double lo, double hi, std::size_t steps, const State3& seed,
                                    std::size_t burn_in, std::size_t samples_per_value,
                                    char component) {
    return sweep_impl(base, param_name, lo, hi, steps, seed, burn_in, samples_per_value, component,
                      [](const State3& s, const Hyper3DParams& p, std::size_t b, std::size_t n) {
                          return orbit3(s, p, b, n);
                      });
}

BifurcationTable bifurcation_sweep2(const Mem2DParams& base, const std::string& param_name,
                                    double lo, double hi, std::size_t steps, const State2& seed,
                                    std::size_t burn_in, std::size_t samples_per_value,
                                    char component) {
    return sweep_impl(base, param_name, lo, hi, steps, seed, burn_in, samples_per_value, component,
                      [](const State2& s, const Mem2DParams& p, std::size_t b, std::size_t n) {
                          return orbit2(s, p, b, n);
                      });
}

}  // namespace chaoscipher
