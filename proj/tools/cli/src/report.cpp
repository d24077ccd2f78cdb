#include "maxcut/cli/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace maxcut::cli {

namespace {

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string optionalWeight(const std::optional<Weight> &w) { return w ? w->toString() : std::string(); }

nlohmann::json weightJson(const Weight &w) {
    if (w.isInteger()) {
        return w.asInteger();
    }
    return w.toDouble();
}

// Numbers in JSON carry the same rounded value the text formats print.
nlohmann::json fixedJson(const std::string &text) { return std::stod(text); }

void writeCsv(std::ostream &os, std::span<const RunReport> rows) {
    os << kCsvHeader << '\n';
    for (const auto &r : rows) {
        os << r.instance << ',' << r.n << ',' << r.algorithm << ',' << r.cutWeight.toString() << ','
           << r.totalWeight.toString() << ',' << formatRatio(r) << ',' << optionalWeight(r.optimalWeight) << ','
           << formatTime(r.timeMs) << ',' << r.policy << '\n';
    }
}

void writeMarkdown(std::ostream &os, std::span<const RunReport> rows) {
    os << "| instance | n | algorithm | cut_weight | total_weight | ratio | optimal_weight | time_ms | policy |\n";
    os << "|---|---:|---|---:|---:|---:|---:|---:|---|\n";
    for (const auto &r : rows) {
        os << "| " << r.instance << " | " << r.n << " | " << r.algorithm << " | " << r.cutWeight.toString() << " | "
           << r.totalWeight.toString() << " | " << formatRatio(r) << " | " << optionalWeight(r.optimalWeight)
           << " | " << formatTime(r.timeMs) << " | " << r.policy << " |\n";
    }
}

void writeJson(std::ostream &os, std::span<const RunReport> rows) {
    auto out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"instance", r.instance},
            {"n", r.n},
            {"algorithm", r.algorithm},
            {"cut_weight", weightJson(r.cutWeight)},
            {"total_weight", weightJson(r.totalWeight)},
            {"ratio", fixedJson(formatRatio(r))},
            {"optimal_weight", r.optimalWeight ? weightJson(*r.optimalWeight) : nlohmann::json(nullptr)},
            {"time_ms", fixedJson(formatTime(r.timeMs))},
            {"policy", r.policy},
        });
    }
    os << out.dump(2) << '\n';
}

} // namespace

double RunReport::ratio() const {
    const double total = totalWeight.toDouble();
    return total == 0.0 ? 0.0 : cutWeight.toDouble() / total;
}

std::string formatRatio(const RunReport &r) { return fixed3(r.ratio()); }

std::string formatTime(double ms) { return fixed3(ms); }

void writeReports(std::ostream &os, std::span<const RunReport> rows, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        writeCsv(os, rows);
        break;
    case OutputFormat::Markdown:
        writeMarkdown(os, rows);
        break;
    case OutputFormat::Json:
        writeJson(os, rows);
        break;
    }
}

} // namespace maxcut::cli
