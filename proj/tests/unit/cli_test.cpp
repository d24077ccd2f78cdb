#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "maxcut/cli/commands.hpp"

namespace fs = std::filesystem;
using maxcut::cli::runCli;

namespace {

const fs::path kData = fs::path(MAXCUT_DATA_DIR) / "tsplib";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Drops the time_ms column so runs can be compared byte for byte.
std::string withoutTime(const std::string &csv) {
    std::string out;
    for (const auto &line : lines(csv)) {
        auto cols = split(line, ',');
        cols.erase(cols.begin() + 7);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out += (k ? "," : "") + cols[k];
        }
        out += '\n';
    }
    return out;
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("maxcut_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path write(const std::string &name, const std::string &text) const {
        std::ofstream(path_ / name) << text;
        return path_ / name;
    }
    const fs::path &path() const { return path_; }

private:
    fs::path path_;
};

const char *kTriangle = "3 3\n1 2 1\n1 3 2\n2 3 3\n";

} // namespace

TEST(Cli, SolveGr17ReportsPublishedRow) {
    const auto r = run({"solve", "--input", (kData / "gr17.tsp").string(), "--format", "tsplib", "--algorithm",
                        "stabilizer"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[0], maxcut::cli::kCsvHeader);
    const auto cols = split(rows[1], ',');
    ASSERT_EQ(cols.size(), 9U);
    EXPECT_EQ(cols[0], "gr17");
    EXPECT_EQ(cols[1], "17");
    EXPECT_EQ(cols[2], "stabilizer");
    EXPECT_EQ(cols[3], "24986");
    EXPECT_EQ(cols[4], "37346");
    EXPECT_EQ(cols[5], "0.669");
    EXPECT_EQ(cols[6], "");
    EXPECT_EQ(cols[8], "tie-break=lex;survivor=small;engine=sorted");
}

TEST(Cli, SolveExactTriangle) {
    TempDir dir;
    const auto tri = dir.write("triangle.mcut", kTriangle);
    const auto r = run({"solve", "--input", tri.string(), "--format", "mcut", "--algorithm", "exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto cols = split(lines(r.out).at(1), ',');
    EXPECT_EQ(cols[0], "triangle");
    EXPECT_EQ(cols[3], "5");
    EXPECT_EQ(cols[6], "5");
}

TEST(Cli, BadFlagsExitTwo) {
    TempDir dir;
    const auto tri = dir.write("triangle.mcut", kTriangle);
    EXPECT_EQ(run({"solve", "--input", tri.string(), "--format", "mcut", "--algorithm", "nosuch"}).code, 2);
    EXPECT_EQ(run({"solve", "--input", tri.string(), "--format", "xml", "--algorithm", "ec"}).code, 2);
    EXPECT_EQ(run({"solve", "--format", "mcut", "--algorithm", "ec"}).code, 2);
    EXPECT_EQ(run({"solve", "--input", tri.string(), "--format", "mcut", "--algorithm", "ec", "--repeat", "0"}).code,
              2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--input", tri.string(), "--format", "mcut", "--algorithm", "ec", "--expect", "five"})
                  .code,
              2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ParseAndIoErrorsExitThree) {
    TempDir dir;
    const auto bad = dir.write("bad.mcut", "3 2\n1 2 1\n");
    const auto r = run({"solve", "--input", bad.string(), "--format", "mcut", "--algorithm", "ec"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"solve", "--input", (dir.path() / "missing.tsp").string(), "--format", "tsplib", "--algorithm",
                   "stabilizer"})
                  .code,
              3);
}

TEST(Cli, OracleLimitExitsFour) {
    const auto r =
        run({"solve", "--input", (kData / "gr120.tsp").string(), "--format", "tsplib", "--algorithm", "exact"});
    EXPECT_EQ(r.code, 4);
}

TEST(Cli, VerifyExitCodes) {
    TempDir dir;
    const auto tri = dir.write("triangle.mcut", kTriangle);
    const auto gr17 = (kData / "gr17.tsp").string();
    const auto miss =
        run({"verify", "--input", gr17, "--format", "tsplib", "--algorithm", "stabilizer", "--expect", "0"});
    EXPECT_EQ(miss.code, 1);
    EXPECT_NE(miss.out.find("24986"), std::string::npos);
    EXPECT_EQ(run({"verify", "--input", gr17, "--format", "tsplib", "--algorithm", "stabilizer", "--expect", "24986"})
                  .code,
              0);
    EXPECT_EQ(run({"verify", "--input", tri.string(), "--format", "mcut", "--algorithm", "exact", "--expect", "5"})
                  .code,
              0);
}

TEST(Cli, VerifyRealModeUsesTolerance) {
    TempDir dir;
    const auto f = dir.write("real.mcut", "2 1\n1 2 0.5\n");
    EXPECT_EQ(run({"verify", "--input", f.string(), "--format", "mcut", "--algorithm", "exact", "--expect", "0.5"})
                  .code,
              0);
    EXPECT_EQ(run({"verify", "--input", f.string(), "--format", "mcut", "--algorithm", "exact", "--expect", "0.6"})
                  .code,
              1);
}

TEST(Cli, TraceFollowsReport) {
    TempDir dir;
    const auto tri = dir.write("triangle.mcut", kTriangle);
    const auto r =
        run({"solve", "--input", tri.string(), "--format", "mcut", "--algorithm", "ec", "--trace"});
    ASSERT_EQ(r.code, 0);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 5U);
    EXPECT_EQ(out[2], "");
    EXPECT_EQ(out[3], "step i j weight_at_pick sign removed survivor");
    EXPECT_EQ(out[4], "1 1 2 1 +1 2 1");
}

TEST(Cli, OutputFormatsAgree) {
    const auto base = std::vector<std::string>{"solve", "--input", (kData / "berlin52.tsp").string(), "--format",
                                               "tsplib", "--algorithm", "sg3", "--output"};
    auto with = [&](const std::string &fmt) {
        auto args = base;
        args.push_back(fmt);
        const auto r = run(args);
        EXPECT_EQ(r.code, 0);
        return r.out;
    };
    const auto csv = split(lines(with("csv")).at(1), ',');
    const auto json = nlohmann::json::parse(with("json"));
    ASSERT_EQ(json.size(), 1U);
    const auto &row = json[0];
    EXPECT_EQ(std::to_string(row["n"].get<long long>()), csv[1]);
    EXPECT_EQ(std::to_string(row["cut_weight"].get<long long>()), csv[3]);
    EXPECT_EQ(std::to_string(row["total_weight"].get<long long>()), csv[4]);
    EXPECT_DOUBLE_EQ(row["ratio"].get<double>(), std::stod(csv[5]));
    EXPECT_TRUE(row["optimal_weight"].is_null());
    EXPECT_EQ(row["policy"].get<std::string>(), csv[8]);

    const auto md = split(lines(with("md")).at(2), '|');
    ASSERT_GE(md.size(), 10U);
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
    };
    for (std::size_t k : {0U, 1U, 2U, 3U, 4U, 5U, 8U}) {
        EXPECT_EQ(trim(md[k + 1]), csv[k]) << "column " << k;
    }
}

TEST(Cli, RatioRecomputesFromWeights) {
    const auto r = run({"bench", "--dir", kData.string(), "--algorithms", "stabilizer,sg,ec"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto cols = split(rows[k], ',');
        const double ratio = std::stod(cols[3]) / std::stod(cols[4]);
        EXPECT_NEAR(std::stod(cols[5]), ratio, 0.0005 + 1e-12);
    }
}

TEST(Cli, BenchIsDeterministicAndOrdered) {
    const std::vector<std::string> args{"bench", "--dir", kData.string(), "--algorithms", "stabilizer,sg3"};
    const auto a = run(args);
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const auto b = run(parallel);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(withoutTime(a.out), withoutTime(b.out));
    EXPECT_EQ(withoutTime(a.out), withoutTime(run(args).out));

    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 7U);
    const std::vector<std::pair<std::string, std::string>> expected{
        {"berlin52", "stabilizer"}, {"berlin52", "sg3"}, {"gr120", "stabilizer"},
        {"gr120", "sg3"},           {"gr17", "stabilizer"}, {"gr17", "sg3"}};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto cols = split(rows[k + 1], ',');
        EXPECT_EQ(cols[0], expected[k].first);
        EXPECT_EQ(cols[2], expected[k].second);
    }
}

TEST(Cli, BenchEmptyDirectory) {
    TempDir dir;
    const auto r = run({"bench", "--dir", dir.path().string(), "--algorithms", "stabilizer"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("no instances found"), std::string::npos);
}

TEST(Cli, BenchReportsBrokenFilesAndKeepsGoodRows) {
    TempDir dir;
    dir.write("triangle.mcut", kTriangle);
    dir.write("broken.mcut", "3 1\n1 2 x\n");
    const auto r = run({"bench", "--dir", dir.path().string(), "--algorithms", "exact"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("broken.mcut"), std::string::npos);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(split(rows[1], ',')[0], "triangle");
}

TEST(Cli, BenchOptimaAndOutFile) {
    TempDir dir;
    dir.write("triangle.mcut", kTriangle);
    const auto optima = dir.write("optima.txt", "# name weight\ntriangle 5\n");
    const auto outFile = dir.path() / "report.csv";
    const auto r = run({"bench", "--dir", dir.path().string(), "--algorithms", "stabilizer,exact", "--optima",
                        optima.string(), "--out-file", outFile.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(outFile);
    std::stringstream text;
    text << in.rdbuf();
    const auto rows = lines(text.str());
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(split(rows[1], ',')[6], "5");
    EXPECT_EQ(split(rows[2], ',')[6], "5");
}

TEST(Cli, BenchSkipsExactAboveLimit) {
    const auto r = run({"bench", "--dir", kData.string(), "--algorithms", "exact"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("skipping exact on gr120"), std::string::npos);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(split(rows[1], ',')[0], "gr17");
    EXPECT_EQ(split(rows[1], ',')[3], "24986");
}
