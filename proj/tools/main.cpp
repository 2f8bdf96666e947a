// orthofield: orthonormal polynomials of rotation-invariant measures,
// their recurrence coefficients and ladder-operator representations.

#include "orthofield/cli.hpp"
#include "orthofield/errors.hpp"
#include "orthofield/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace orthofield;

namespace {

struct Flags {
    std::string command;
    std::string measure;
    std::string sigma = "1";
    std::string radius = "1";
    std::string q;
    std::string c = "1";
    int degree = 8;
    int cutoff = 8;
    std::string arith = "auto";
    double tolerance = 1e-10;
    std::string format = "json";
    std::string out;
    std::string measure_file;
};

MeasureSpec measure_from_flags(const Flags& flags) {
    if (!flags.measure_file.empty()) {
        std::ifstream in(flags.measure_file);
        if (!in) throw InvalidParameter("cannot read measure file '" + flags.measure_file + "'");
        Json descriptor;
        try {
            descriptor = Json::parse(in);
        } catch (const Json::exception& e) {
            throw InvalidParameter(std::string("malformed measure file: ") + e.what());
        }
        return measure_from_json(descriptor);
    }
    std::string kind = flags.measure;
    if (kind.empty()) kind = flags.q.empty() ? "gaussian" : "from-closed-form";
    Json descriptor = {{"kind", kind}};
    if (kind == "gaussian") descriptor["sigma"] = flags.sigma;
    if (kind == "uniform-disc") descriptor["radius"] = flags.radius;
    if (kind == "from-closed-form") {
        if (flags.q.empty()) throw InvalidParameter("from-closed-form needs --q");
        descriptor["q"] = flags.q;
        descriptor["c"] = flags.c;
    }
    if (kind == "explicit") throw InvalidParameter("explicit measures are read with --measure-file");
    return measure_from_json(descriptor);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthonormal bivariate polynomials, recurrence coefficients and ladder "
                 "operators of rotation-invariant measures"};
    Flags flags;
    app.add_option("command", flags.command,
                   "moments | alphas | verify | factorize | ladder | roundtrip")
        ->required();
    app.add_option("--measure", flags.measure,
                   "gaussian | uniform-disc | unit-circle | from-closed-form");
    app.add_option("--sigma", flags.sigma, "Gaussian width (\"p/q\", \"sqrt(p/q)\" or decimal)");
    app.add_option("--radius", flags.radius, "disc radius");
    app.add_option("--q", flags.q, "deformation parameter q > 0 of the closed form");
    app.add_option("--c", flags.c, "scale c > 0 of the closed form");
    app.add_option("-N", flags.degree, "maximal total degree N");
    app.add_option("-M", flags.cutoff, "ladder cutoff M");
    app.add_option("--arith", flags.arith, "auto | exact | float");
    app.add_option("--tol", flags.tolerance, "relative tolerance for floating identities");
    app.add_option("--format", flags.format, "json | csv");
    app.add_option("--out", flags.out, "output path (default stdout)");
    app.add_option("--measure-file", flags.measure_file, "JSON measure descriptor");
    app.footer(
        "Exit codes: 0 pass, 1 verification failure, 2 input error, 3 IO error.\n"
        "Numbers written as \"p/q\" select exact arithmetic under --arith auto.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitInputError;
    }

    cli::RunConfig config;
    cli::RunOutcome outcome;
    try {
        auto command = cli::parse_command(flags.command);
        if (!command) throw InvalidParameter("unknown command '" + flags.command + "'");
        config.command = *command;
        config.measure = measure_from_flags(flags);
        config.degree = flags.degree;
        config.cutoff = flags.cutoff;
        config.tolerance = flags.tolerance;
        config.output_path = flags.out;
        if (flags.arith == "auto") {
            config.arithmetic = cli::ArithmeticChoice::automatic;
        } else if (flags.arith == "exact") {
            config.arithmetic = cli::ArithmeticChoice::exact;
        } else if (flags.arith == "float") {
            config.arithmetic = cli::ArithmeticChoice::floating;
        } else {
            throw InvalidParameter("--arith must be auto, exact or float");
        }
        if (flags.format == "json") {
            config.format = cli::OutputFormat::json;
        } else if (flags.format == "csv") {
            config.format = cli::OutputFormat::csv;
        } else {
            throw InvalidParameter("--format must be json or csv");
        }
        outcome = cli::dispatch(config);
    } catch (const Error& e) {
        outcome = {cli::kExitInputError,
                   dump(Json{{"error", e.kind()}, {"message", e.what()}})};
    }
    if (outcome.exit_code != cli::kExitPass) {
        std::cerr << "orthofield: exit " << outcome.exit_code << "\n";
    }
    return cli::emit_report(outcome, flags.out);
}
