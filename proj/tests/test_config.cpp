#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "sbvp/catalog.hpp"
#include "sbvp/config.hpp"
#include "sbvp/report.hpp"
#include "sbvp/scenarios.hpp"

using namespace sbvp;

TEST_CASE("key=value parsing with comments and overrides") {
    const auto kv = parse_key_values(
        "# a comment\n"
        "scenario = solve\n"
        "n=64   # trailing comment\n"
        "\n"
        "n=128\n");
    CHECK(kv.at("scenario") == "solve");
    CHECK(kv.at("n") == "128");
    CHECK(kv.size() == 2);
}

TEST_CASE("malformed lines are collected, not dropped silently") {
    const auto kv = parse_key_values("this is not a pair\n");
    const auto checked = validate_config(kv);
    REQUIRE(std::holds_alternative<std::vector<std::string>>(checked));
}

TEST_CASE("defaults and seed warning") {
    const auto checked = validate_config(parse_key_values("scenario=alpha-table\n"));
    REQUIRE(std::holds_alternative<ExperimentConfig>(checked));
    const auto& cfg = std::get<ExperimentConfig>(checked);
    CHECK(cfg.scenario == Scenario::alpha_table);
    CHECK(cfg.n == 512);
    CHECK(cfg.paths == 10000);
    CHECK(cfg.tol == 1e-8);
    REQUIRE(cfg.warnings.size() == 1);
    CHECK(cfg.warnings[0].find("seed") != std::string::npos);
}

TEST_CASE("violations are collected together") {
    const auto checked = validate_config(parse_key_values(
        "scenario=unknown-thing\n"
        "n=1\n"
        "paths=-5\n"
        "tol=0\n"
        "bogus=1\n"));
    REQUIRE(std::holds_alternative<std::vector<std::string>>(checked));
    CHECK(std::get<std::vector<std::string>>(checked).size() == 5);
}

TEST_CASE("nonlinearity name and parameter count are validated") {
    auto bad_name = validate_config(parse_key_values("seed=1\nf=cubic\n"));
    CHECK(std::holds_alternative<std::vector<std::string>>(bad_name));
    auto bad_params = validate_config(parse_key_values("seed=1\nf=linear\n"));
    CHECK(std::holds_alternative<std::vector<std::string>>(bad_params));
    auto good = validate_config(parse_key_values("seed=1\nf=linear\nf-params=2.0\n"));
    REQUIRE(std::holds_alternative<ExperimentConfig>(good));
    CHECK(std::get<ExperimentConfig>(good).f_params == std::vector<double>{2.0});
}

TEST_CASE("scenario names round-trip") {
    for (Scenario s : {Scenario::solve, Scenario::linear_sweep, Scenario::girsanov_check,
                       Scenario::det2_compare, Scenario::alpha_table, Scenario::condition_check,
                       Scenario::exp_moment, Scenario::resonance_variance}) {
        const auto kv = parse_key_values("seed=1\nscenario=" + scenario_name(s) + "\n");
        const auto checked = validate_config(kv);
        REQUIRE(std::holds_alternative<ExperimentConfig>(checked));
        CHECK(std::get<ExperimentConfig>(checked).scenario == s);
    }
}

TEST_CASE("catalog rejects unknown names and wrong arity") {
    CHECK_THROWS_AS(make_nonlinearity("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_nonlinearity("sine", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_nonlinearity("zero", {1.0}), std::invalid_argument);
    CHECK(catalog_names().size() == 5);
}

TEST_CASE("17-digit formatting survives a round trip") {
    for (double x : {1.0 / 3.0, -2.7182818284590452, 1e-300, 0.0}) {
        CHECK(std::stod(num17(x)) == x);
    }
}

TEST_CASE("csv writer enforces the column count") {
    const auto path = std::filesystem::temp_directory_path() / "sbvp_csv_test.csv";
    {
        CsvWriter csv(path.string(), {"a", "b"});
        csv.row_numeric({1.0, 2.0});
        CHECK_THROWS_AS(csv.row({"only-one"}), std::invalid_argument);
    }
    std::filesystem::remove(path);
}

TEST_CASE("experiment runner: config errors exit 1 with messages") {
    std::string messages;
    CHECK(run_from_text("scenario=nope\n", messages) == 1);
    CHECK_FALSE(messages.empty());
}

TEST_CASE("experiment runner: a small scenario produces its artifacts") {
    const auto dir = std::filesystem::temp_directory_path() / "sbvp_run_test";
    std::filesystem::remove_all(dir);
    std::string messages;
    const int rc = run_from_text(
        "scenario=alpha-table\nseed=1\nassert=true\nout=" + dir.string() + "\n", messages);
    CHECK(rc == 0);
    CHECK(std::filesystem::exists(dir / "manifest.txt"));
    CHECK(std::filesystem::exists(dir / "alpha-table.csv"));
    std::filesystem::remove_all(dir);
}
