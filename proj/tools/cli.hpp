#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cayley/budget.hpp"

namespace cayley::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kBudget = 3,
};

enum class Output { json, csv, text };

struct RunConfig {
    std::string command;
    int n = 0;
    std::string field;
    std::string rank = "all";
    std::string method = "both";
    std::string check = "all";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::uint64_t samples = 200;
    Output output = Output::json;
    std::string threads = "auto";
    std::optional<std::string> matrix_a;
    std::optional<std::string> matrix_b;
};

/// Environment variable overriding the default enumeration budget.
inline constexpr const char* kBudgetEnv = "CAYLEY_BUDGET";

/// Parses argv (without the program name) and runs one command. Everything
/// printed goes to `out`/`err` after the work finishes. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
