#pragma once

#include "orthofield/measures.hpp"

#include <optional>
#include <string>

namespace orthofield::cli {

enum class Command { moments, alphas, verify, factorize, ladder, roundtrip };
enum class ArithmeticChoice { automatic, exact, floating };
enum class OutputFormat { json, csv };

// Exit-code contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
    Command command = Command::verify;
    MeasureSpec measure;
    int degree = 8;   // N
    int cutoff = 8;   // M
    ArithmeticChoice arithmetic = ArithmeticChoice::automatic;
    double tolerance = 1e-10;
    OutputFormat format = OutputFormat::json;
    std::string output_path;  // empty: stdout
};

struct RunOutcome {
    int exit_code = kExitPass;
    std::string artifact;  // report body, or a diagnostic record on input errors
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command command);

// Throws InvalidParameter when N, M < 1 or tolerance <= 0.
void validate(const RunConfig& config);

// Runs the command; never throws. Input errors yield exit 2 with a JSON
// diagnostic record, failed verifications exit 1.
RunOutcome dispatch(const RunConfig& config);

// Writes the artifact to `path` (stdout when empty). Returns kExitIoError on
// failure, otherwise `outcome.exit_code`.
int emit_report(const RunOutcome& outcome, const std::string& path);

}  // namespace orthofield::cli
