#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "maxcut/weight.hpp"

namespace maxcut::cli {

enum class OutputFormat { Csv, Markdown, Json };

/// One row of output: a single (instance, algorithm) run.
struct RunReport {
    std::string instance;
    std::size_t n = 0;
    std::string algorithm;
    Weight cutWeight;
    Weight totalWeight;
    std::optional<Weight> optimalWeight;
    double timeMs = 0.0;
    std::string policy;

    /// cutWeight / totalWeight; 0 when the total is 0.
    double ratio() const;
};

inline constexpr const char *kCsvHeader =
    "instance,n,algorithm,cut_weight,total_weight,ratio,optimal_weight,time_ms,policy";

// Fixed three-decimal renderings shared by every output format.
std::string formatRatio(const RunReport &r);
std::string formatTime(double ms);

void writeReports(std::ostream &os, std::span<const RunReport> rows, OutputFormat format);

} // namespace maxcut::cli
