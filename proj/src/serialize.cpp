#include "chaoscipher/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace chaoscipher {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json params_json(const Hyper3DParams& p) {
    return ordered_json{{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3},
                        {"b1", p.b1}, {"b2", p.b2}, {"c", p.c}};
}

}  // namespace

std::string orbit_to_csv(const Orbit3& orbit) {
    std::ostringstream out;
    out << "index,x,y,z\n";
    for (std::size_t i = 0; i < orbit.states.size(); ++i) {
        const State3& s = orbit.states[i];
        out << i << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.z) << '\n';
    }
    return out.str();
}

std::string orbit_to_csv(const Orbit2& orbit) {
    std::ostringstream out;
    out << "index,x,q\n";
    for (std::size_t i = 0; i < orbit.states.size(); ++i) {
        const State2& s = orbit.states[i];
        out << i << ',' << fmt(s.x) << ',' << fmt(s.q) << '\n';
    }
    return out.str();
}

std::string orbit_to_json(const Orbit3& orbit) {
    ordered_json states = ordered_json::array();
    for (const State3& s : orbit.states) states.push_back({s.x, s.y, s.z});
    ordered_json j{{"map", "hyper3d"},
                   {"params", params_json(orbit.params)},
                   {"seed_state", {orbit.seed_state.x, orbit.seed_state.y, orbit.seed_state.z}},
                   {"burn_in", orbit.burn_in},
                   {"states", std::move(states)}};
    return j.dump();
}

std::string orbit_to_json(const Orbit2& orbit) {
    ordered_json states = ordered_json::array();
    for (const State2& s : orbit.states) states.push_back({s.x, s.q});
    ordered_json j{{"map", "mem2d"},
                   {"params", ordered_json{{"k", orbit.params.k}}},
                   {"seed_state", {orbit.seed_state.x, orbit.seed_state.q}},
                   {"burn_in", orbit.burn_in},
                   {"states", std::move(states)}};
    return j.dump();
}

std::string spectrum_to_csv(const LyapunovSpectrum& spectrum) {
    std::ostringstream out;
    out << "rank,exponent\n";
    for (std::size_t i = 0; i < spectrum.exponents.size(); ++i)
        out << (i + 1) << ',' << fmt(spectrum.exponents[i]) << '\n';
    return out.str();
}

std::string spectrum_to_json(const LyapunovSpectrum& spectrum) {
    ordered_json j{{"exponents", spectrum.exponents},
                   {"iterations", spectrum.iterations},
                   {"renorm_interval", spectrum.renorm_interval}};
    return j.dump();
}

std::string bifurcation_to_csv(const BifurcationTable& table) {
    std::ostringstream out;
    out << "param_value,sample_index,value,diverged\n";
    for (const BifurcationRow& row : table.rows) {
        if (row.diverged) {
            out << fmt(row.param_value) << ",0,,1\n";
            continue;
        }
        for (std::size_t i = 0; i < row.samples.size(); ++i)
            out << fmt(row.param_value) << ',' << i << ',' << fmt(row.samples[i]) << ",0\n";
    }
    return out.str();
}

std::string bifurcation_to_json(const BifurcationTable& table) {
    ordered_json rows = ordered_json::array();
    for (const BifurcationRow& row : table.rows)
        rows.push_back(ordered_json{{"param_value", row.param_value},
                                    {"samples", row.samples},
                                    {"diverged", row.diverged}});
    ordered_json j{{"sweep_param", table.sweep_param},
                   {"component", std::string(1, table.component)},
                   {"rows", std::move(rows)}};
    return j.dump();
}

std::string report_to_csv(const AnalysisReport& report) {
    std::ostringstream out;
    out << "section,name,value\n";
    for (const auto& [name, value] : report.scalars)
        out << "scalar," << name << ',' << fmt(value) << '\n';
    if (report.per_channel)
        for (const auto& [name, value] : *report.per_channel)
            out << "per_channel," << name << ',' << fmt(value) << '\n';
    for (const auto& [name, value] : report.metadata)
        out << "metadata," << name << ',' << value << '\n';
    return out.str();
}

std::string report_to_json(const AnalysisReport& report) {
    ordered_json scalars = ordered_json::object();
    for (const auto& [name, value] : report.scalars) scalars[name] = value;
    ordered_json j = ordered_json::object();
    j["metric"] = report.metric_name;
    j["scalars"] = std::move(scalars);
    if (report.per_channel) {
        ordered_json pc = ordered_json::object();
        for (const auto& [name, value] : *report.per_channel) pc[name] = value;
        j["per_channel"] = std::move(pc);
    }
    ordered_json meta = ordered_json::object();
    for (const auto& [name, value] : report.metadata) meta[name] = value;
    j["metadata"] = std::move(meta);
    return j.dump();
}

}  // namespace chaoscipher
