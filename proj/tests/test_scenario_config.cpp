#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "wildfire/scenario_config.hpp"

using wildfire::ConfigError;
using wildfire::FireModelKind;
using wildfire::ParameterError;
using wildfire::ScenarioConfig;

namespace {

std::string message_of(const std::string& text) {
    try {
        wildfire::parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("empty text gives the reference defaults") {
    const ScenarioConfig c = wildfire::parse_config("");
    CHECK(c == ScenarioConfig{});
    CHECK(wildfire::parse_config("  \n\t") == c);
    CHECK(wildfire::parse_config("{}") == c);

    CHECK(c.scenario.density == 0.05);
    CHECK(c.scenario.radius.inner() == 2.0);
    CHECK(c.scenario.radius.outer() == 4.0);
    CHECK(c.scenario.growth.alpha == 0.33);
    CHECK(c.scenario.growth.wind_x == 3.0);
    CHECK(c.scenario.growth.scale_speed == 10.0);
    CHECK(c.scenario.critical_area == 20.0);
    CHECK(c.scenario.tau == 0.9);
    CHECK(c.models.size() == 3);
    CHECK_FALSE(c.time_grid.stop.has_value());
    CHECK(c.realizations == 10000);
    CHECK(c.sweep.axis == wildfire::SweepAxis::Wind);
    CHECK(c.sweep.values.size() == 11);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("partial documents override only what they mention") {
    const auto c = wildfire::parse_config(R"({
        "scenario": {"density": 0.1, "growth": {"wind_x": 0}},
        "models": ["elliptical"],
        "time_grid": {"stop": 5, "steps": 6},
        "monte_carlo": {"realizations": 500, "seed": 9, "threads": 2},
        "sweep": {"axis": "tau", "start": 0.5, "stop": 0.9, "steps": 5},
        "output": "out.csv"
    })");
    CHECK(c.scenario.density == 0.1);
    CHECK(c.scenario.growth.wind_x == 0.0);
    CHECK(c.scenario.growth.alpha == 0.33);
    CHECK(c.scenario.radius.outer() == 4.0);
    REQUIRE(c.models.size() == 1);
    CHECK(c.models[0] == FireModelKind::Elliptical);
    CHECK(c.realizations == 500);
    CHECK(c.seed == 9);
    CHECK(c.threads == 2);
    CHECK(c.output == "out.csv");
    CHECK(c.sweep.axis == wildfire::SweepAxis::Tau);
    REQUIRE(c.sweep.values.size() == 5);
    CHECK(c.sweep.values.front() == 0.5);
    CHECK(c.sweep.values.back() == 0.9);

    const auto times = c.times_for(FireModelKind::Elliptical);
    REQUIRE(times.size() == 6);
    CHECK(times.front() == 0.0);
    CHECK(times.back() == 5.0);
}

TEST_CASE("a critical stop ends each model's grid at its own t_cr") {
    const ScenarioConfig c;
    for (const auto kind : c.models) {
        const auto times = c.times_for(kind);
        REQUIRE(times.size() == c.time_grid.steps);
        CHECK(times.back() == wildfire::critical_time(c.scenario.with_kind(kind)));
    }
}

TEST_CASE("serialize then parse is the identity") {
    ScenarioConfig c;
    c.scenario.density = 0.0123456789012345;
    c.scenario.radius = wildfire::HybridRadiusModel(1.5, 1.5);
    c.scenario.growth.wind_y = 0.25;
    c.models = {FireModelKind::Piriform, FireModelKind::Circular};
    c.time_grid = {0.5, 12.75, 3};
    c.realizations = 77;
    c.seed = 0xFFFFFFFFFFFFFFFFULL;
    c.threads = 3;
    c.sweep = {wildfire::SweepAxis::Density, {0.01, 0.02, 0.1}};
    c.output = "x.csv";
    const auto text = wildfire::serialize_config(c);
    CHECK(wildfire::parse_config(text) == c);
    CHECK(wildfire::serialize_config(wildfire::parse_config(text)) == text);

    const ScenarioConfig defaults;
    CHECK(wildfire::parse_config(wildfire::serialize_config(defaults)) == defaults);
}

TEST_CASE("malformed documents report where they broke") {
    const auto msg = message_of("{\n  \"scenario\": {\"density\": 0.1,\n");
    CHECK(msg.find("parse error") != std::string::npos);
    CHECK(msg.find("line") != std::string::npos);
    CHECK_THROWS_AS(wildfire::parse_config("[1, 2]"), ConfigError);
}

TEST_CASE("unknown keys and wrong types name the offending path") {
    CHECK(message_of(R"({"scenario": {"densty": 0.1}})").find("scenario.densty") != std::string::npos);
    CHECK(message_of(R"({"extra": 1})").find("extra") != std::string::npos);
    CHECK(message_of(R"({"scenario": {"growth": {"alpha": "fast"}}})").find("scenario.growth.alpha") !=
          std::string::npos);
    CHECK(message_of(R"({"monte_carlo": {"realizations": -5}})").find("monte_carlo.realizations") !=
          std::string::npos);
    CHECK(message_of(R"({"monte_carlo": {"seed": 1.5}})").find("monte_carlo.seed") != std::string::npos);
    CHECK(message_of(R"({"models": ["triangular"]})").find("models[0]") != std::string::npos);
    CHECK(message_of(R"({"models": "circular"})").find("models") != std::string::npos);
    CHECK(message_of(R"({"time_grid": {"stop": "soon"}})").find("time_grid.stop") != std::string::npos);
    CHECK(message_of(R"({"sweep": {"axis": "humidity"}})").find("humidity") != std::string::npos);
    CHECK(message_of(R"({"sweep": {"values": [1, 2], "start": 0}})").find("not both") != std::string::npos);
    CHECK(message_of(R"({"sweep": {"values": [1, "x"]}})").find("sweep.values") != std::string::npos);
}

TEST_CASE("constraint violations inside the document surface as config errors") {
    // outer < inner cannot even be constructed
    CHECK_THROWS_AS(wildfire::parse_config(R"({"scenario": {"radius": {"inner": 3, "outer": 2}}})"), ConfigError);
    // An empty sweep parses; the sweep command is the one that rejects it.
    CHECK(wildfire::parse_config(R"({"sweep": {"start": 0, "stop": 1, "steps": 0}})").sweep.values.empty());
}

TEST_CASE("validate names the violated constraint") {
    auto expect = [](ScenarioConfig c, const std::string& fragment) {
        try {
            c.validate();
            FAIL("no exception for " << fragment);
        } catch (const ParameterError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    ScenarioConfig c;
    c.scenario.density = -1.0;
    expect(c, "lambda >= 0");
    c = {};
    c.scenario.critical_area = 0.0;
    expect(c, "A_cr > 0");
    c = {};
    c.scenario.tau = 1.0;
    expect(c, "0 < tau < 1");
    c = {};
    c.scenario.growth.alpha = -0.1;
    expect(c, "alpha");
    c = {};
    c.models.clear();
    expect(c, "model");
    c = {};
    c.realizations = 0;
    expect(c, "n_realizations");
    c = {};
    c.time_grid.stop = -1.0;
    expect(c, "time_grid.stop");
    c = {};
    c.sweep = {wildfire::SweepAxis::Tau, {0.5, 1.5}};
    expect(c, "sweep value");

    // Parsing succeeds, validation catches it.
    const auto parsed = wildfire::parse_config(R"({"scenario": {"tau": 2}})");
    CHECK_THROWS_AS(parsed.validate(), ParameterError);
}

TEST_CASE("load_config reads files and reports missing ones") {
    const auto path = std::filesystem::temp_directory_path() / "wildfire_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"scenario": {"density": 0.2}})";
    }
    CHECK(wildfire::load_config(path).scenario.density == 0.2);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(wildfire::load_config(path), ConfigError);
}
