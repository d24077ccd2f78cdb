#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maxcut/io.hpp"
#include "maxcut/tsplib.hpp"

using namespace maxcut;

namespace {

std::string dataFile(const std::string &name) { return readTextFile(std::string(MAXCUT_DATA_DIR "/tsplib/") + name); }

std::string header(const std::string &type, std::size_t n, const std::string &format = "") {
    std::string s = "NAME: t\nTYPE: TSP\nDIMENSION: " + std::to_string(n) + "\nEDGE_WEIGHT_TYPE: " + type + "\n";
    if (!format.empty()) {
        s += "EDGE_WEIGHT_FORMAT: " + format + "\n";
    }
    return s;
}

/// Serializes the upper/lower/full listing of a symmetric matrix in a given format.
std::string explicitFile(const std::vector<std::vector<std::int64_t>> &m, EdgeWeightFormat f) {
    const std::size_t n = m.size();
    std::ostringstream os;
    os << header("EXPLICIT", n, toString(f)) << "EDGE_WEIGHT_SECTION\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool emit = false;
            switch (f) {
            case EdgeWeightFormat::FullMatrix:
                emit = true;
                break;
            case EdgeWeightFormat::UpperRow:
                emit = j > i;
                break;
            case EdgeWeightFormat::LowerRow:
                emit = j < i;
                break;
            case EdgeWeightFormat::UpperDiagRow:
                emit = j >= i;
                break;
            case EdgeWeightFormat::LowerDiagRow:
                emit = j <= i;
                break;
            }
            if (emit) {
                os << ' ' << m[i][j];
            }
        }
        os << '\n';
    }
    os << "EOF\n";
    return os.str();
}

} // namespace

TEST(ParseTsplib, Gr17Header) {
    const auto inst = parseTsplib(dataFile("gr17.tsp"));
    EXPECT_EQ(inst.name, "gr17");
    EXPECT_EQ(inst.dimension, 17u);
    EXPECT_EQ(inst.weightType, EdgeWeightType::Explicit);
    ASSERT_TRUE(inst.weightFormat.has_value());
    EXPECT_EQ(*inst.weightFormat, EdgeWeightFormat::LowerDiagRow);
    EXPECT_EQ(inst.explicitWeights.size(), 17u * 18u / 2u);
}

TEST(ParseTsplib, Berlin52Header) {
    const auto inst = parseTsplib(dataFile("berlin52.tsp"));
    EXPECT_EQ(inst.name, "berlin52");
    EXPECT_EQ(inst.dimension, 52u);
    EXPECT_EQ(inst.weightType, EdgeWeightType::Euc2D);
    EXPECT_EQ(inst.coords.size(), 52u);
    EXPECT_DOUBLE_EQ(inst.coords[0].first, 565.0);
}

TEST(ToWeightMatrix, PublishedTotals) {
    EXPECT_EQ(totalWeight(toWeightMatrix(parseTsplib(dataFile("gr17.tsp")))), Weight(37346));
    EXPECT_EQ(totalWeight(toWeightMatrix(parseTsplib(dataFile("berlin52.tsp")))), Weight(762783));
}

TEST(ParseTsplib, GeoIsUnsupported) {
    const std::string text = header("GEO", 2) + "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n";
    EXPECT_THROW(parseTsplib(text), UnsupportedFormat);
}

TEST(ParseTsplib, UnsupportedExplicitFormat) {
    const std::string text = header("EXPLICIT", 2, "UPPER_COL") + "EDGE_WEIGHT_SECTION\n1\nEOF\n";
    EXPECT_THROW(parseTsplib(text), UnsupportedFormat);
}

TEST(ParseTsplib, TruncatedSection) {
    const std::string text = header("EXPLICIT", 4, "UPPER_ROW") + "EDGE_WEIGHT_SECTION\n1 2 3\n4 5\nEOF\n";
    try {
        parseTsplib(text);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
    }
    const std::string noEof = header("EUC_2D", 3) + "NODE_COORD_SECTION\n1 0 0\n2 1 1\n";
    EXPECT_THROW(parseTsplib(noEof), ParseError);
}

TEST(ParseTsplib, NonNumericToken) {
    const std::string text = header("EXPLICIT", 3, "UPPER_ROW") + "EDGE_WEIGHT_SECTION\n1 2 3x\nEOF\n";
    try {
        parseTsplib(text);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 7u);
        EXPECT_NE(std::string(e.what()).find("non-numeric"), std::string::npos);
    }
    const std::string frac = header("EXPLICIT", 3, "UPPER_ROW") + "EDGE_WEIGHT_SECTION\n1 2.5 3\nEOF\n";
    EXPECT_THROW(parseTsplib(frac), ParseError);
}

TEST(ParseTsplib, TooMuchData) {
    const std::string text = header("EXPLICIT", 3, "UPPER_ROW") + "EDGE_WEIGHT_SECTION\n1 2 3\n4\nEOF\n";
    EXPECT_THROW(parseTsplib(text), ParseError);
}

TEST(ParseTsplib, MissingKeywords) {
    EXPECT_THROW(parseTsplib("DIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 0 1\n"),
                 ParseError);
    EXPECT_THROW(parseTsplib("NAME: a\nEDGE_WEIGHT_TYPE: EUC_2D\n"), ParseError);
    EXPECT_THROW(parseTsplib(header("EUC_2D", 2)), ParseError);
}

TEST(ParseTsplib, DisplayDataAndUnknownKeywordsIgnored) {
    const std::string text = header("EXPLICIT", 3, "UPPER_ROW") +
                             "DISPLAY_DATA_TYPE: TWOD_DISPLAY\nCOMMENT: whatever : with colon\n"
                             "EDGE_WEIGHT_SECTION\n 4 5\n 6\nDISPLAY_DATA_SECTION\n1 0 0\n2 3 3\n3 9 9\nEOF\n";
    const auto m = toWeightMatrix(parseTsplib(text));
    EXPECT_EQ(m.at(0, 1), Weight(4));
    EXPECT_EQ(m.at(0, 2), Weight(5));
    EXPECT_EQ(m.at(1, 2), Weight(6));
}

TEST(ToWeightMatrix, PythagoreanPair) {
    const std::string text = header("EUC_2D", 2) + "NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n";
    const auto m = toWeightMatrix(parseTsplib(text));
    EXPECT_EQ(m.mode(), ArithmeticMode::IntegerExact);
    EXPECT_EQ(m.at(0, 1), Weight(5));
}

TEST(ToWeightMatrix, NintRoundsHalfUp) {
    EXPECT_EQ(tsplibNint(2.5), 3);
    EXPECT_EQ(tsplibNint(2.4999), 2);
    EXPECT_EQ(tsplibNint(0.0), 0);
    const std::string text = header("EUC_2D", 2) + "NODE_COORD_SECTION\n1 0 0\n2 0.5 0\nEOF\n";
    EXPECT_EQ(toWeightMatrix(parseTsplib(text)).at(0, 1), Weight(1));
}

TEST(ToWeightMatrix, AsymmetricFullMatrixRejected) {
    const std::string text = header("EXPLICIT", 2, "FULL_MATRIX") + "EDGE_WEIGHT_SECTION\n0 1\n2 0\nEOF\n";
    EXPECT_THROW(toWeightMatrix(parseTsplib(text)), ParseError);
}

TEST(ToWeightMatrix, InconsistentLength) {
    TsplibInstance inst;
    inst.dimension = 3;
    inst.weightFormat = EdgeWeightFormat::UpperRow;
    inst.explicitWeights = {1, 2};
    EXPECT_THROW(toWeightMatrix(inst), ParseError);
    TsplibInstance euc;
    euc.dimension = 3;
    euc.weightType = EdgeWeightType::Euc2D;
    euc.coords = {{0, 0}};
    EXPECT_THROW(toWeightMatrix(euc), ParseError);
}

TEST(ToWeightMatrix, AllFiveFormatsRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(0, 999);
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m[i][j] = m[j][i] = dist(rng);
            }
        }
        for (auto f : {EdgeWeightFormat::FullMatrix, EdgeWeightFormat::UpperRow, EdgeWeightFormat::LowerRow,
                       EdgeWeightFormat::UpperDiagRow, EdgeWeightFormat::LowerDiagRow}) {
            const auto w = toWeightMatrix(parseTsplib(explicitFile(m, f)));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    ASSERT_EQ(w.at(i, j), Weight(m[i][j])) << toString(f) << " n=" << n;
                }
            }
        }
    }
}

TEST(ToWeightMatrix, EuclideanPermutationEquivariance) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    const std::size_t n = 12;
    std::vector<std::pair<double, double>> pts(n);
    for (auto &p : pts) {
        p = {coord(rng), coord(rng)};
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    TsplibInstance a, b;
    a.dimension = b.dimension = n;
    a.weightType = b.weightType = EdgeWeightType::Euc2D;
    a.coords = pts;
    b.coords.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        b.coords[k] = pts[perm[k]];
    }
    const auto wa = toWeightMatrix(a);
    const auto wb = toWeightMatrix(b);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(wb.at(i, j), wa.at(perm[i], perm[j]));
        }
    }
}
