#include "wildfire/scenario_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace wildfire {

namespace {

using nlohmann::json;

// Reads one JSON object, rejecting keys it was not told about.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path, std::initializer_list<std::string_view> keys)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            throw ConfigError(where() + "expected an object");
        }
        for (const auto& item : node_.items()) {
            if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
                throw ConfigError("unknown key '" + key_path(item.key()) + "'");
            }
        }
    }

    bool has(std::string_view key) const { return node_.contains(key); }

    const json& at(std::string_view key) const { return node_.at(std::string(key)); }

    std::string key_path(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    void read(std::string_view key, double& out) const {
        if (!has(key)) return;
        const json& v = at(key);
        if (!v.is_number()) throw ConfigError(key_path(key) + ": expected a number");
        out = v.get<double>();
    }

    template <typename Unsigned>
    void read_unsigned(std::string_view key, Unsigned& out) const {
        if (!has(key)) return;
        const json& v = at(key);
        if (!v.is_number_unsigned()) {
            throw ConfigError(key_path(key) + ": expected a non-negative integer");
        }
        out = static_cast<Unsigned>(v.get<std::uint64_t>());
    }

    void read(std::string_view key, std::string& out) const {
        if (!has(key)) return;
        const json& v = at(key);
        if (!v.is_string()) throw ConfigError(key_path(key) + ": expected a string");
        out = v.get<std::string>();
    }

private:
    std::string where() const { return path_.empty() ? "config: " : path_ + ": "; }

    const json& node_;
    std::string path_;
};

FireModelKind model_from(const json& v, const std::string& path) {
    if (!v.is_string()) throw ConfigError(path + ": expected a model name");
    try {
        return parse_fire_model(v.get<std::string>());
    } catch (const ParameterError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

SweepAxis axis_from(const std::string& name, const std::string& path) {
    if (name == "density") return SweepAxis::Density;
    if (name == "wind") return SweepAxis::Wind;
    if (name == "tau") return SweepAxis::Tau;
    throw ConfigError(path + ": unknown sweep axis '" + name + "' (expected density, wind or tau)");
}

void read_scenario(const json& node, FireScenario& scenario) {
    const ObjectReader r(node, "scenario", {"density", "critical_area", "tau", "radius", "growth"});
    r.read("density", scenario.density);
    r.read("critical_area", scenario.critical_area);
    r.read("tau", scenario.tau);
    if (r.has("radius")) {
        const ObjectReader rr(r.at("radius"), "scenario.radius", {"inner", "outer"});
        double inner = scenario.radius.inner();
        double outer = scenario.radius.outer();
        rr.read("inner", inner);
        rr.read("outer", outer);
        scenario.radius = HybridRadiusModel(inner, outer);
    }
    if (r.has("growth")) {
        const ObjectReader g(r.at("growth"), "scenario.growth",
                             {"alpha", "wind_x", "wind_y", "scale_speed"});
        g.read("alpha", scenario.growth.alpha);
        g.read("wind_x", scenario.growth.wind_x);
        g.read("wind_y", scenario.growth.wind_y);
        g.read("scale_speed", scenario.growth.scale_speed);
    }
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Density: return "density";
        case SweepAxis::Wind: return "wind";
        case SweepAxis::Tau: return "tau";
    }
    return "unknown";
}

void ScenarioConfig::validate() const {
    scenario.validate();
    if (models.empty()) {
        throw ParameterError("config: at least one model required");
    }
    if (!(time_grid.start >= 0.0)) {
        throw ParameterError("config: time_grid.start >= 0 violated");
    }
    if (time_grid.stop && !(*time_grid.stop >= time_grid.start)) {
        throw ParameterError("config: time_grid.stop >= time_grid.start violated");
    }
    if (realizations == 0) {
        throw ParameterError("config: n_realizations >= 1 violated");
    }
    for (const double v : sweep.values) {
        FireScenario probe = scenario;
        switch (sweep.axis) {
            case SweepAxis::Density: probe.density = v; break;
            case SweepAxis::Wind: probe.growth.wind_x = v; break;
            case SweepAxis::Tau: probe.tau = v; break;
        }
        try {
            probe.validate();
        } catch (const ParameterError& e) {
            throw ParameterError(std::string("sweep value: ") + e.what());
        }
    }
}

std::vector<double> ScenarioConfig::times_for(FireModelKind kind) const {
    const double stop = time_grid.stop.value_or(critical_time(scenario.with_kind(kind)));
    return linear_grid(time_grid.start, stop, time_grid.steps);
}

ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig config;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
        return config;
    }

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // what() reports "parse error at line L, column C: ..."
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    try {
        const ObjectReader top(doc, "",
                               {"scenario", "models", "time_grid", "monte_carlo", "sweep", "output"});
        if (top.has("scenario")) read_scenario(top.at("scenario"), config.scenario);

        if (top.has("models")) {
            const json& models = top.at("models");
            if (!models.is_array()) throw ConfigError("models: expected an array of model names");
            config.models.clear();
            for (std::size_t i = 0; i < models.size(); ++i) {
                config.models.push_back(model_from(models[i], "models[" + std::to_string(i) + "]"));
            }
        }

        if (top.has("time_grid")) {
            const ObjectReader g(top.at("time_grid"), "time_grid", {"start", "stop", "steps"});
            g.read("start", config.time_grid.start);
            g.read_unsigned("steps", config.time_grid.steps);
            if (g.has("stop")) {
                const json& stop = g.at("stop");
                if (stop.is_string() && stop.get<std::string>() == "critical") {
                    config.time_grid.stop.reset();
                } else if (stop.is_number()) {
                    config.time_grid.stop = stop.get<double>();
                } else {
                    throw ConfigError("time_grid.stop: expected a number or \"critical\"");
                }
            }
        }

        if (top.has("monte_carlo")) {
            const ObjectReader m(top.at("monte_carlo"), "monte_carlo", {"realizations", "seed", "threads"});
            m.read_unsigned("realizations", config.realizations);
            m.read_unsigned("seed", config.seed);
            m.read_unsigned("threads", config.threads);
        }

        if (top.has("sweep")) {
            const ObjectReader s(top.at("sweep"), "sweep", {"axis", "values", "start", "stop", "steps"});
            std::string axis(to_string(config.sweep.axis));
            s.read("axis", axis);
            config.sweep.axis = axis_from(axis, "sweep.axis");
            if (s.has("values")) {
                if (s.has("start") || s.has("stop") || s.has("steps")) {
                    throw ConfigError("sweep: give either values or start/stop/steps, not both");
                }
                const json& values = s.at("values");
                if (!values.is_array()) throw ConfigError("sweep.values: expected an array of numbers");
                config.sweep.values.clear();
                for (const json& v : values) {
                    if (!v.is_number()) throw ConfigError("sweep.values: expected an array of numbers");
                    config.sweep.values.push_back(v.get<double>());
                }
            } else if (s.has("start") || s.has("stop") || s.has("steps")) {
                double start = 0.0;
                double stop = 0.0;
                std::size_t steps = 11;
                s.read("start", start);
                s.read("stop", stop);
                s.read_unsigned("steps", steps);
                config.sweep.values = linear_grid(start, stop, steps);
            }
        }

        top.read("output", config.output);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const ScenarioConfig& config) {
    const FireScenario& s = config.scenario;
    json doc;
    doc["scenario"] = {
        {"density", s.density},
        {"critical_area", s.critical_area},
        {"tau", s.tau},
        {"radius", {{"inner", s.radius.inner()}, {"outer", s.radius.outer()}}},
        {"growth",
         {{"alpha", s.growth.alpha},
          {"wind_x", s.growth.wind_x},
          {"wind_y", s.growth.wind_y},
          {"scale_speed", s.growth.scale_speed}}},
    };
    json models = json::array();
    for (const FireModelKind kind : config.models) models.push_back(std::string(to_string(kind)));
    doc["models"] = models;

    doc["time_grid"] = {{"start", config.time_grid.start}, {"steps", config.time_grid.steps}};
    if (config.time_grid.stop) {
        doc["time_grid"]["stop"] = *config.time_grid.stop;
    } else {
        doc["time_grid"]["stop"] = "critical";
    }
    doc["monte_carlo"] = {
        {"realizations", config.realizations}, {"seed", config.seed}, {"threads", config.threads}};
    doc["sweep"] = {{"axis", std::string(to_string(config.sweep.axis))}, {"values", config.sweep.values}};
    doc["output"] = config.output;
    return doc.dump(2) + "\n";
}

}  // namespace wildfire
