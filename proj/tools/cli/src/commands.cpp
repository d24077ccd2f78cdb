#include "maxcut/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "maxcut/io.hpp"
#include "maxcut/mcut.hpp"
#include "maxcut/tsplib.hpp"

namespace maxcut::cli {

namespace {

const std::map<std::string, InstanceFormat> kFormats{{"tsplib", InstanceFormat::Tsplib},
                                                     {"mcut", InstanceFormat::Mcut}};
const std::map<std::string, Algorithm> kAlgorithms{
    {"stabilizer", Algorithm::Stabilizer}, {"ec", Algorithm::Ec},   {"dec", Algorithm::Dec},
    {"sg", Algorithm::Sg},                 {"sg3", Algorithm::Sg3}, {"exact", Algorithm::Exact}};
const std::map<std::string, TieBreak> kTieBreaks{{"lex", TieBreak::Lex}, {"revlex", TieBreak::RevLex}};
const std::map<std::string, SurvivorRule> kSurvivors{{"small", SurvivorRule::KeepSmaller},
                                                     {"large", SurvivorRule::KeepLarger}};
const std::map<std::string, StabilizerEngine> kEngines{{"naive", StabilizerEngine::Naive},
                                                       {"sorted", StabilizerEngine::Sorted}};
const std::map<std::string, DecDirection> kDirections{{"max-total", DecDirection::MaxTotal},
                                                      {"keep-smaller", DecDirection::KeepSmaller},
                                                      {"keep-larger", DecDirection::KeepLarger}};
const std::map<std::string, OutputFormat> kOutputs{
    {"csv", OutputFormat::Csv}, {"md", OutputFormat::Markdown}, {"json", OutputFormat::Json}};

/// Maps a named choice onto its enum; the error lists the accepted names.
template <typename E>
CLI::Validator choice(const std::map<std::string, E> &m) {
    std::string names;
    for (const auto &entry : m) {
        names += (names.empty() ? "" : "|") + entry.first;
    }
    return CLI::Validator(
        [m, names](std::string &s) -> std::string {
            const auto it = m.find(s);
            if (it == m.end()) {
                return "'" + s + "' is not one of " + names;
            }
            s = std::to_string(static_cast<int>(it->second));
            return {};
        },
        names);
}

/// Flags shared by every subcommand that runs a solver.
struct SolverFlags {
    SolveOptions opts;
    double epsilon = -1.0;

    void add(CLI::App *app) {
        app->add_option("--tie-break", opts.stabilizer.tieBreak, "stabilizer tie-break among equal |w|")
            ->transform(choice(kTieBreaks));
        app->add_option("--survivor", opts.stabilizer.survivorRule, "which endpoint survives a contraction")
            ->transform(choice(kSurvivors));
        app->add_option("--engine", opts.stabilizer.engine, "stabilizer edge-selection engine")
            ->transform(choice(kEngines));
        app->add_option("--dec-direction", opts.dec.direction, "DEC contraction direction")
            ->transform(choice(kDirections));
        app->add_option("--epsilon", epsilon, "zero threshold for real-valued weights")
            ->check(CLI::NonNegativeNumber);
        app->add_option("--repeat", opts.repeat, "report the minimum time over k runs")->check(CLI::PositiveNumber);
        app->add_option("--oracle-limit", opts.oracleLimit, "largest n the exact oracle accepts")
            ->check(CLI::Range(1, 63));
    }

    SolveOptions resolved() const {
        SolveOptions o = opts;
        if (epsilon >= 0.0) {
            o.epsilon = epsilon;
            o.stabilizer.epsilon = epsilon;
        }
        return o;
    }
};

std::string formatEpsilon(double eps) {
    std::ostringstream os;
    os << eps;
    return os.str();
}

/// Opens `--out-file` if given, otherwise writes to `fallback`.
class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw IoError("cannot open output file '" + path + "'");
            }
            os_ = &file_;
        }
    }
    std::ostream &stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream *os_;
};

/// Parses an expected weight: integers exactly, anything else as a double.
std::optional<Weight> parseWeight(const std::string &text) {
    std::int64_t iv = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (auto [p, ec] = std::from_chars(first, last, iv); ec == std::errc() && p == last) {
        return Weight(iv);
    }
    try {
        std::size_t used = 0;
        const double dv = std::stod(text, &used);
        if (used == text.size() && std::isfinite(dv)) {
            return Weight(dv);
        }
    } catch (const std::exception &) {
    }
    return std::nullopt;
}

std::map<std::string, Weight> readOptima(const std::string &path) {
    std::map<std::string, Weight> out;
    std::istringstream in(readTextFile(path));
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string name, value;
        if (!(fields >> name)) {
            continue;
        }
        std::optional<Weight> w;
        if (fields >> value) {
            w = parseWeight(value);
        }
        if (!w) {
            throw ParseError("expected '<instance> <weight>' in optima file", lineNo);
        }
        out.insert_or_assign(name, *w);
    }
    return out;
}

/// Runs `body`, mapping library exceptions onto the exit-code contract.
int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const SizeLimitError &e) {
        err << "error: " << e.what() << '\n';
        return kExitOracleLimit;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

int cmdSolve(const std::string &input, InstanceFormat format, Algorithm algorithm, const SolveOptions &opts,
             bool trace, OutputFormat output, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const Instance inst = loadInstance(input, format);
        const SolveOutcome r = runAlgorithm(inst, algorithm, opts);
        writeReports(out, std::span(&r.report, 1), output);
        if (trace) {
            if (r.trace) {
                out << '\n';
                writeTrace(out, *r.trace);
            } else {
                err << "note: " << toString(algorithm) << " has no contraction trace\n";
            }
        }
        return kExitOk;
    });
}

int cmdVerify(const std::string &input, InstanceFormat format, Algorithm algorithm, const SolveOptions &opts,
              const std::string &expectText, std::ostream &out, std::ostream &err) {
    const auto expected = parseWeight(expectText);
    if (!expected) {
        err << "error: --expect: '" << expectText << "' is not a number\n";
        return kExitUsage;
    }
    return guarded(err, [&] {
        const Instance inst = loadInstance(input, format);
        const SolveOutcome r = runAlgorithm(inst, algorithm, opts);
        const Weight &got = r.report.cutWeight;
        bool match = false;
        if (got.isInteger()) {
            match = expected->isInteger() && got == *expected;
        } else {
            const double eps = opts.epsilon.value_or(inst.weights.epsilon());
            match = std::fabs(got.toDouble() - expected->toDouble()) <= eps;
        }
        out << "computed: " << got.toString() << '\n';
        out << "expected: " << expected->toString() << '\n';
        out << (match ? "match" : "mismatch") << '\n';
        return match ? kExitOk : kExitMismatch;
    });
}

struct BenchArgs {
    std::string dir;
    std::vector<Algorithm> algorithms;
    std::string outFile;
    std::string optimaFile;
    unsigned jobs = 1;
    OutputFormat output = OutputFormat::Csv;
};

int cmdBench(const BenchArgs &args, const SolveOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&]() -> int {
        namespace fs = std::filesystem;
        std::error_code ec;
        if (!fs::is_directory(args.dir, ec)) {
            err << "error: '" << args.dir << "' is not a directory\n";
            return kExitInput;
        }
        std::vector<std::pair<fs::path, InstanceFormat>> files;
        for (const auto &entry : fs::directory_iterator(args.dir)) {
            if (!entry.is_regular_file()) {
                continue;
            }
            const auto ext = entry.path().extension().string();
            if (ext == ".tsp") {
                files.emplace_back(entry.path(), InstanceFormat::Tsplib);
            } else if (ext == ".mcut") {
                files.emplace_back(entry.path(), InstanceFormat::Mcut);
            }
        }
        if (files.empty()) {
            err << "error: no instances found in '" << args.dir << "'\n";
            return kExitInput;
        }
        std::sort(files.begin(), files.end(), [](const auto &a, const auto &b) {
            return std::pair(a.first.stem().string(), a.first.filename().string()) <
                   std::pair(b.first.stem().string(), b.first.filename().string());
        });

        const auto optima = args.optimaFile.empty() ? std::map<std::string, Weight>{} : readOptima(args.optimaFile);

        bool failed = false;
        std::vector<Instance> instances;
        for (const auto &[path, format] : files) {
            try {
                instances.push_back(loadInstance(path, format));
            } catch (const Error &e) {
                err << "error: " << path.string() << ": " << e.what() << '\n';
                failed = true;
            }
        }

        struct Task {
            const Instance *inst;
            Algorithm algorithm;
        };
        std::vector<Task> tasks;
        for (const auto &inst : instances) {
            for (Algorithm a : args.algorithms) {
                if (a == Algorithm::Exact && inst.weights.size() > opts.oracleLimit) {
                    err << "warning: skipping exact on " << inst.name << " (n = " << inst.weights.size()
                        << " exceeds oracle limit " << opts.oracleLimit << ")\n";
                    continue;
                }
                tasks.push_back({&inst, a});
            }
        }

        // Rows are buffered by task index so output order is independent of completion order.
        std::vector<std::optional<RunReport>> rows(tasks.size());
        std::vector<std::string> errors(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < tasks.size(); k = next++) {
                try {
                    rows[k] = runAlgorithm(*tasks[k].inst, tasks[k].algorithm, opts).report;
                } catch (const Error &e) {
                    errors[k] = e.what();
                }
            }
        };
        const unsigned threads = std::max(1U, std::min<unsigned>(args.jobs, static_cast<unsigned>(tasks.size())));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto &t : pool) {
            t.join();
        }

        std::vector<RunReport> report;
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            if (!rows[k]) {
                err << "error: " << tasks[k].inst->name << " / " << toString(tasks[k].algorithm) << ": " << errors[k]
                    << '\n';
                failed = true;
                continue;
            }
            if (!rows[k]->optimalWeight) {
                if (auto it = optima.find(rows[k]->instance); it != optima.end()) {
                    rows[k]->optimalWeight = it->second;
                }
            }
            report.push_back(*rows[k]);
        }
        Sink sink(args.outFile, out);
        writeReports(sink.stream(), report, args.output);
        return failed ? kExitInput : kExitOk;
    });
}

} // namespace

std::string toString(Algorithm a) {
    for (const auto &[name, value] : kAlgorithms) {
        if (value == a) {
            return name;
        }
    }
    return "unknown";
}

Instance loadInstance(const std::filesystem::path &path, InstanceFormat format) {
    const std::string text = readTextFile(path);
    Instance inst{path.stem().string(),
                  format == InstanceFormat::Tsplib ? toWeightMatrix(parseTsplib(text)) : parseMcut(text)};
    return inst;
}

std::string policyString(Algorithm a, const SolveOptions &opts) {
    std::string p;
    switch (a) {
    case Algorithm::Stabilizer:
        p = "tie-break=" + toString(opts.stabilizer.tieBreak) + ";survivor=" + toString(opts.stabilizer.survivorRule) +
            ";engine=" + toString(opts.stabilizer.engine);
        break;
    case Algorithm::Ec:
        p = "contract=min-weight";
        break;
    case Algorithm::Dec:
        p = "direction=" + toString(opts.dec.direction);
        break;
    case Algorithm::Sg:
        p = "order=natural";
        break;
    case Algorithm::Sg3:
        p = "order=adaptive";
        break;
    case Algorithm::Exact:
        p = "limit=" + std::to_string(opts.oracleLimit);
        break;
    }
    if (opts.epsilon) {
        p += ";epsilon=" + formatEpsilon(*opts.epsilon);
    }
    return p;
}

SolveOutcome runAlgorithm(const Instance &inst, Algorithm a, const SolveOptions &opts) {
    const WeightMatrix w = opts.epsilon ? inst.weights.withEpsilon(*opts.epsilon) : inst.weights;

    SolveOutcome result;
    std::optional<Weight> optimal;
    auto solveOnce = [&] {
        switch (a) {
        case Algorithm::Stabilizer: {
            auto r = stabilizerSolve(w, opts.stabilizer);
            result.assignment = std::move(r.assignment);
            result.trace = std::move(r.trace);
            break;
        }
        case Algorithm::Ec: {
            auto r = ecSolve(w);
            result.assignment = std::move(r.assignment);
            result.trace = std::move(r.trace);
            break;
        }
        case Algorithm::Dec: {
            auto r = decSolve(w, opts.dec);
            result.assignment = std::move(r.assignment);
            result.trace = std::move(r.trace);
            break;
        }
        case Algorithm::Sg:
            result.assignment = sgSolve(w);
            break;
        case Algorithm::Sg3:
            result.assignment = sg3Solve(w);
            break;
        case Algorithm::Exact: {
            auto r = bruteForce(w, opts.oracleLimit);
            optimal = r.optimalWeight;
            result.assignment = std::move(r.witness);
            break;
        }
        }
    };

    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < std::max(1, opts.repeat); ++k) {
        const auto start = std::chrono::steady_clock::now();
        solveOnce();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }

    RunReport &r = result.report;
    r.instance = inst.name;
    r.n = w.size();
    r.algorithm = toString(a);
    r.cutWeight = result.assignment.cutWeight;
    r.totalWeight = totalWeight(w);
    r.optimalWeight = optimal;
    r.timeMs = best;
    r.policy = policyString(a, opts);
    return result;
}

int runCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Max-Cut heuristics: stabilizer, EC, DEC, SG, SG3 and an exact oracle", "maxcut"};
    app.require_subcommand(1);

    std::string input, expect;
    InstanceFormat format = InstanceFormat::Tsplib;
    Algorithm algorithm = Algorithm::Stabilizer;
    OutputFormat output = OutputFormat::Csv;
    bool trace = false;
    SolverFlags solveFlags, verifyFlags, benchFlags;

    auto addInstanceFlags = [&](CLI::App *sub) {
        sub->add_option("--input", input, "instance file")->required();
        sub->add_option("--format", format, "instance format")->required()->transform(choice(kFormats));
        sub->add_option("--algorithm", algorithm, "solver to run")
            ->required()
            ->transform(choice(kAlgorithms));
    };

    auto *solve = app.add_subcommand("solve", "solve one instance and print a report row");
    addInstanceFlags(solve);
    solveFlags.add(solve);
    solve->add_flag("--trace", trace, "also print the contraction trace");
    solve->add_option("--output", output, "report format")->transform(choice(kOutputs));

    auto *verify = app.add_subcommand("verify", "check a computed cut weight against an expected value");
    addInstanceFlags(verify);
    verifyFlags.add(verify);
    verify->add_option("--expect", expect, "expected cut weight")->required();

    BenchArgs bench;
    auto *benchCmd = app.add_subcommand("bench", "run algorithms over every instance in a directory");
    benchCmd->add_option("--dir", bench.dir, "directory of .tsp / .mcut files")->required();
    benchCmd->add_option("--algorithms", bench.algorithms, "comma-separated algorithm list")
        ->required()
        ->delimiter(',')
        ->transform(choice(kAlgorithms));
    benchCmd->add_option("--output", bench.output, "report format")->transform(choice(kOutputs));
    benchCmd->add_option("--out-file", bench.outFile, "write the table here instead of stdout");
    benchCmd->add_option("--optima", bench.optimaFile, "file of '<instance> <optimal weight>' lines");
    benchCmd->add_option("--jobs", bench.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    benchFlags.add(benchCmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed()) {
        return cmdSolve(input, format, algorithm, solveFlags.resolved(), trace, output, out, err);
    }
    if (verify->parsed()) {
        return cmdVerify(input, format, algorithm, verifyFlags.resolved(), expect, out, err);
    }
    return cmdBench(bench, benchFlags.resolved(), out, err);
}

} // namespace maxcut::cli
