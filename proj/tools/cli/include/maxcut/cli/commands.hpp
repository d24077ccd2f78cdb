#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "maxcut/baselines.hpp"
#include "maxcut/cli/report.hpp"
#include "maxcut/exact.hpp"
#include "maxcut/stabilizer.hpp"

namespace maxcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitOracleLimit = 4;

enum class InstanceFormat { Tsplib, Mcut };
enum class Algorithm { Stabilizer, Ec, Dec, Sg, Sg3, Exact };

std::string toString(Algorithm a);

struct Instance {
    std::string name; // file stem
    WeightMatrix weights;
};

/// Reads and parses an instance; throws IoError / ParseError / InvalidArgument.
Instance loadInstance(const std::filesystem::path &path, InstanceFormat format);

struct SolveOptions {
    StabilizerPolicy stabilizer;
    DecPolicy dec;
    std::optional<double> epsilon;
    std::size_t oracleLimit = kDefaultOracleLimit;
    int repeat = 1;
};

std::string policyString(Algorithm a, const SolveOptions &opts);

struct SolveOutcome {
    RunReport report;
    CutAssignment assignment;
    std::optional<ContractionTrace> trace; // contraction algorithms only
};

/// Runs one algorithm; time_ms is the minimum over opts.repeat solve calls.
SolveOutcome runAlgorithm(const Instance &inst, Algorithm a, const SolveOptions &opts);

/// Entry point for the `maxcut` binary. `args` excludes the program name.
int runCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace maxcut::cli
