#include "support.hpp"

#include "orthofield/cli.hpp"
#include "orthofield/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orthofield;
using namespace orthofield::testing;
using cli::ArithmeticChoice;
using cli::Command;
using cli::OutputFormat;
using cli::RunConfig;

namespace {

RunConfig config(Command command, MeasureSpec measure, int degree,
                 ArithmeticChoice arithmetic = ArithmeticChoice::automatic) {
    RunConfig c;
    c.command = command;
    c.measure = std::move(measure);
    c.degree = degree;
    c.arithmetic = arithmetic;
    return c;
}

Json run_json(const RunConfig& c, int expected_exit) {
    auto outcome = cli::dispatch(c);
    CHECK(outcome.exit_code == expected_exit);
    return Json::parse(outcome.artifact);
}

// Objects parse into ordered maps, so re-serializing reproduces the text
// exactly when every object was written with its keys in ascending order.
bool keys_sorted(const std::string& text) { return Json::parse(text).dump(2) + "\n" == text; }

}  // namespace

TEST_CASE("command names") {
    for (auto c : {Command::moments, Command::alphas, Command::verify, Command::factorize,
                   Command::ladder, Command::roundtrip}) {
        CHECK(cli::parse_command(cli::command_name(c)) == c);
    }
    CHECK_FALSE(cli::parse_command("plot").has_value());
}

TEST_CASE("verify on the gaussian is exact") {
    auto doc = run_json(config(Command::verify, gaussian("1"), 8, ArithmeticChoice::exact), 0);
    CHECK(doc["arithmetic"] == "exact");
    CHECK(doc["passed"] == true);
    CHECK(doc["checks"].size() == 9);
    for (const auto& check : doc["checks"]) {
        CAPTURE(check.dump());
        CHECK(check["passed"] == true);
        CHECK(check["max_residual"] == "0");
    }
}

TEST_CASE("verify in floating mode") {
    RunConfig c = config(Command::verify, disc("1.3"), 10);
    auto doc = run_json(c, 0);
    CHECK(doc["arithmetic"] == "float");
    CHECK(doc["ladder_cutoff"] == 4);
    c.arithmetic = ArithmeticChoice::floating;
    c.measure = closed_form("1/2", "1");
    run_json(c, 0);
}

TEST_CASE("factorize reports the disc as non-factorizable") {
    auto doc = run_json(config(Command::factorize, disc("1"), 6), 0);
    CHECK(doc["factorizable"] == false);
    CHECK(doc["first_violation"]["entry"] == std::vector<int>{1, 1});
    CHECK(std::stod(doc["first_violation"]["log_residual"].get<std::string>()) ==
          doctest::Approx(0.2027).epsilon(1e-3));
    CHECK(std::stod(doc["log_residual"].get<std::string>()) >= 0.2027);

    auto gauss = run_json(config(Command::factorize, gaussian("1"), 6), 0);
    CHECK(gauss["factorizable"] == true);
    CHECK(gauss["q"] == "1");
    CHECK(gauss["c"] == "1");
    CHECK(gauss["first_violation"].is_null());

    auto big_q = run_json(config(Command::factorize, closed_form("2", "1"), 6), 0);
    CHECK(big_q["factorizable"] == true);
    CHECK(big_q["note"] == "moment-growth-unbounded");
}

TEST_CASE("degenerate measures exit with an input error") {
    auto outcome = cli::dispatch(config(Command::verify, circle(), 4));
    CHECK(outcome.exit_code == cli::kExitInputError);
    auto doc = Json::parse(outcome.artifact);
    CHECK(doc["error"] == "DegenerateMeasure");
    CHECK(doc["sector"] == 0);
    CHECK(doc["size"] == 2);
    CHECK(doc["message"].get<std::string>().rfind("DegenerateMeasure(0,2)", 0) == 0);
}

TEST_CASE("input errors exit 2") {
    RunConfig bad_degree = config(Command::verify, gaussian("1"), 0);
    CHECK(cli::dispatch(bad_degree).exit_code == 2);
    RunConfig decimal_exact = config(Command::verify, gaussian("0.5"), 4, ArithmeticChoice::exact);
    auto doc = run_json(decimal_exact, 2);
    CHECK(doc["error"] == "InvalidParameter");
    CHECK(cli::dispatch(config(Command::ladder, gaussian("1"), 4)).exit_code == 2);
    CHECK(cli::dispatch(config(Command::verify, gaussian("-1"), 4)).exit_code == 2);
    CHECK(cli::dispatch(config(Command::verify, explicit_moments({"1", "1/2"}), 4)).exit_code == 2);
    CHECK(cli::dispatch(config(Command::verify, explicit_moments({"2", "1", "1"}), 2)).exit_code ==
          2);
    RunConfig tol = config(Command::verify, gaussian("1"), 4);
    tol.tolerance = 0;
    CHECK(cli::dispatch(tol).exit_code == 2);
}

TEST_CASE("tables and formats") {
    RunConfig c = config(Command::alphas, disc("1"), 3);
    c.format = OutputFormat::csv;
    auto outcome = cli::dispatch(c);
    CHECK(outcome.exit_code == 0);
    std::istringstream lines(outcome.artifact);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "k,l,alpha,alpha_sq");
    CHECK(outcome.artifact.find("0,0,0.70710678118654757,1/2\n") != std::string::npos);

    c.format = OutputFormat::json;
    auto doc = run_json(c, 0);
    CHECK(doc["alphas"][0]["alpha_exact"] == "1/2*sqrt(2)");

    RunConfig m = config(Command::moments, gaussian("1"), 3);
    m.format = OutputFormat::csv;
    CHECK(cli::dispatch(m).artifact == "n,moment\n0,1\n1,1\n2,2\n3,6\n");
    m.arithmetic = ArithmeticChoice::floating;
    CHECK(cli::dispatch(m).artifact == "n,moment\n0,1\n1,1\n2,2\n3,6\n");
}

TEST_CASE("json artifacts have sorted keys") {
    const RunConfig configs[] = {
        config(Command::factorize, disc("1"), 6),
        config(Command::verify, gaussian("1"), 6),
        config(Command::roundtrip, closed_form("1/2", "1"), 6),
        config(Command::verify, circle(), 4),
    };
    for (const auto& c : configs) CHECK(keys_sorted(cli::dispatch(c).artifact));
}

TEST_CASE("artifacts are deterministic") {
    RunConfig ladder = config(Command::ladder, closed_form("3/2", "2"), 4);
    ladder.cutoff = 5;
    const RunConfig configs[] = {
        config(Command::verify, disc("13/10"), 8),
        config(Command::verify, disc("1.3"), 8),
        config(Command::alphas, gaussian("0.7"), 8),
        config(Command::roundtrip, closed_form("0.5", "1"), 8),
        ladder,
    };
    for (const auto& c : configs) {
        auto first = cli::dispatch(c);
        auto second = cli::dispatch(c);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.artifact == second.artifact);
    }
}

TEST_CASE("ladder and roundtrip commands") {
    RunConfig ladder = config(Command::ladder, closed_form("3/2", "2"), 4);
    auto doc = run_json(ladder, 0);
    CHECK(doc["cutoff"] == 8);
    CHECK(doc["checks"].size() == 6);
    for (const auto& check : doc["checks"]) CHECK(check["max_residual"] == "0");
    CHECK(doc["rep"]["phi"][0].size() == 3);

    auto exact = run_json(config(Command::roundtrip, closed_form("1/2", "1"), 8), 0);
    CHECK(exact["moments"][1]["value"] == "1");
    CHECK(exact["moments"][2]["value"] == "5/4");
    CHECK(exact["checks"][0]["max_residual"] == "0");

    RunConfig floating = config(Command::roundtrip, closed_form("0.5", "1"), 8);
    floating.tolerance = 1e-9;
    run_json(floating, 0);

    auto measure = run_json(config(Command::roundtrip, gaussian("1"), 8), 0);
    CHECK(measure["mode"] == "measure");
}

TEST_CASE("measure descriptors") {
    auto spec = measure_from_json(Json::parse(R"({"kind":"explicit","moments":["1","1/2","1/3"]})"));
    CHECK(spec.name() == "explicit");
    CHECK(spec.all_exact());
    CHECK(measure_to_json(spec)["moments"][2] == "1/3");
    auto numeric = measure_from_json(Json::parse(R"({"kind":"gaussian","sigma":0.5})"));
    CHECK_FALSE(numeric.all_exact());
    auto integer = measure_from_json(Json::parse(R"({"kind":"uniform-disc","radius":2})"));
    CHECK(integer.all_exact());
    CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"kind":"square"})")), InvalidParameter);
    CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"kind":"gaussian"})")), InvalidParameter);
    CHECK_THROWS_AS(measure_from_json(Json::parse(R"([1,2])")), InvalidParameter);
    CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"kind":"from-closed-form","q":"0","c":"1"})")),
                    InvalidParameter);
}

TEST_CASE("reports are written to files") {
    auto outcome = cli::dispatch(config(Command::moments, disc("1"), 2));
    const auto path = std::filesystem::temp_directory_path() / "orthofield_cli_test.json";
    CHECK(cli::emit_report(outcome, path.string()) == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == outcome.artifact);
    std::filesystem::remove(path);
    CHECK(cli::emit_report(outcome, "/nonexistent-dir/report.json") == cli::kExitIoError);
}
