#include "maxcut/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "maxcut/error.hpp"

namespace maxcut {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

bool looksLikeKeyword(std::string_view token) {
    return !token.empty() && std::isalpha(static_cast<unsigned char>(token.front()));
}

struct Token {
    std::string_view text;
    std::size_t line;
};

/// Splits text into lines and hands out whitespace-separated tokens on demand.
class Cursor {
public:
    explicit Cursor(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                lines_.push_back(text.substr(start));
                break;
            }
            lines_.push_back(text.substr(start, end - start));
            start = end + 1;
        }
    }

    bool atEnd() const { return line_ >= lines_.size(); }
    std::size_t lineNumber() const { return line_ + 1; }

    /// Next whole line, or the unread rest of a partially consumed one.
    std::string_view takeLine() {
        std::string_view l = lines_[line_].substr(col_);
        ++line_;
        col_ = 0;
        return l;
    }

    /// Next non-blank line without consuming it.
    bool peekLine(std::string_view &out) {
        while (!atEnd()) {
            std::string_view l = trim(lines_[line_].substr(col_));
            if (!l.empty()) {
                out = l;
                return true;
            }
            ++line_;
            col_ = 0;
        }
        return false;
    }

    bool nextToken(Token &tok) {
        while (line_ < lines_.size()) {
            std::string_view l = lines_[line_];
            while (col_ < l.size() && std::isspace(static_cast<unsigned char>(l[col_]))) {
                ++col_;
            }
            if (col_ < l.size()) {
                const std::size_t begin = col_;
                while (col_ < l.size() && !std::isspace(static_cast<unsigned char>(l[col_]))) {
                    ++col_;
                }
                tok = {l.substr(begin, col_ - begin), line_ + 1};
                return true;
            }
            ++line_;
            col_ = 0;
        }
        return false;
    }

    /// Backs up so the current line is read again as a whole (used when a
    /// section runs into the next keyword).
    void rewindTo(std::size_t lineNo) {
        line_ = lineNo - 1;
        col_ = 0;
    }

    /// Moves past the rest of the current line if only whitespace remains.
    void finishLine(const char *section) {
        if (line_ >= lines_.size()) {
            return;
        }
        if (!trim(lines_[line_].substr(col_)).empty()) {
            if (col_ == 0) {
                return;
            }
            throw ParseError(std::string("unexpected trailing data in ") + section, line_ + 1);
        }
        ++line_;
        col_ = 0;
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t line_ = 0;
    std::size_t col_ = 0;
};

template <typename T>
T parseNumber(const Token &tok, const char *section) {
    T value{};
    const char *first = tok.text.data();
    const char *last = first + tok.text.size();
    if (!tok.text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        if constexpr (std::is_integral_v<T>) {
            double probe{};
            auto [p2, e2] = std::from_chars(first, last, probe);
            if (e2 == std::errc() && p2 == last) {
                throw ParseError(std::string("non-integer value '") + std::string(tok.text) + "' in " + section,
                                 tok.line);
            }
        }
        throw ParseError(std::string("non-numeric token '") + std::string(tok.text) + "' in " + section, tok.line);
    }
    return value;
}

/// Reads exactly `count` numbers of a data section.
template <typename T>
std::vector<T> readValues(Cursor &cur, std::size_t count, const char *section) {
    std::vector<T> values;
    values.reserve(count);
    Token tok;
    while (values.size() < count) {
        if (!cur.nextToken(tok)) {
            throw ParseError(std::string(section) + " is truncated: expected " + std::to_string(count) +
                             " values, found " + std::to_string(values.size()));
        }
        if (looksLikeKeyword(tok.text)) {
            throw ParseError(std::string(section) + " is truncated: expected " + std::to_string(count) +
                                 " values, found " + std::to_string(values.size()),
                             tok.line);
        }
        values.push_back(parseNumber<T>(tok, section));
    }
    cur.finishLine(section);
    return values;
}

std::vector<std::pair<double, double>> readCoords(Cursor &cur, std::size_t n, const char *section) {
    std::vector<std::pair<double, double>> coords(n);
    std::vector<bool> seen(n, false);
    Token tok;
    for (std::size_t k = 0; k < n; ++k) {
        double triple[3];
        std::size_t idLine = 0;
        for (int c = 0; c < 3; ++c) {
            if (!cur.nextToken(tok) || looksLikeKeyword(tok.text)) {
                throw ParseError(std::string(section) + " is truncated: expected " + std::to_string(n) +
                                     " nodes, found " + std::to_string(k),
                                 cur.atEnd() ? 0 : tok.line);
            }
            if (c == 0) {
                idLine = tok.line;
                const auto id = parseNumber<std::int64_t>(tok, section);
                if (id < 1 || static_cast<std::size_t>(id) > n) {
                    throw ParseError("node id " + std::to_string(id) + " out of range", tok.line);
                }
                triple[0] = static_cast<double>(id);
            } else {
                triple[c] = parseNumber<double>(tok, section);
            }
        }
        const auto idx = static_cast<std::size_t>(triple[0]) - 1;
        if (seen[idx]) {
            throw ParseError("duplicate node id " + std::to_string(idx + 1), idLine);
        }
        seen[idx] = true;
        coords[idx] = {triple[1], triple[2]};
    }
    cur.finishLine(section);
    return coords;
}

EdgeWeightFormat parseFormat(const std::string &v, std::size_t line) {
    static const std::map<std::string, EdgeWeightFormat> formats{
        {"FULL_MATRIX", EdgeWeightFormat::FullMatrix},       {"UPPER_ROW", EdgeWeightFormat::UpperRow},
        {"LOWER_ROW", EdgeWeightFormat::LowerRow},           {"UPPER_DIAG_ROW", EdgeWeightFormat::UpperDiagRow},
        {"LOWER_DIAG_ROW", EdgeWeightFormat::LowerDiagRow},
    };
    auto it = formats.find(v);
    if (it == formats.end()) {
        throw UnsupportedFormat("unsupported EDGE_WEIGHT_FORMAT '" + v + "'", line);
    }
    return it->second;
}

} // namespace

std::string toString(EdgeWeightType t) { return t == EdgeWeightType::Explicit ? "EXPLICIT" : "EUC_2D"; }

std::string toString(EdgeWeightFormat f) {
    switch (f) {
    case EdgeWeightFormat::FullMatrix:
        return "FULL_MATRIX";
    case EdgeWeightFormat::UpperRow:
        return "UPPER_ROW";
    case EdgeWeightFormat::LowerRow:
        return "LOWER_ROW";
    case EdgeWeightFormat::UpperDiagRow:
        return "UPPER_DIAG_ROW";
    case EdgeWeightFormat::LowerDiagRow:
        return "LOWER_DIAG_ROW";
    }
    return "?";
}

std::size_t explicitWeightCount(EdgeWeightFormat f, std::size_t n) {
    switch (f) {
    case EdgeWeightFormat::FullMatrix:
        return n * n;
    case EdgeWeightFormat::UpperRow:
    case EdgeWeightFormat::LowerRow:
        return n * (n - 1) / 2;
    case EdgeWeightFormat::UpperDiagRow:
    case EdgeWeightFormat::LowerDiagRow:
        return n * (n + 1) / 2;
    }
    return 0;
}

TsplibInstance parseTsplib(std::string_view text) {
    TsplibInstance inst;
    bool haveName = false;
    bool haveType = false;
    bool haveWeights = false;
    bool haveCoords = false;
    std::size_t formatLine = 0;
    std::string formatValue;
    Cursor cur(text);

    auto requireDimension = [&](const char *section, std::size_t line) {
        if (inst.dimension == 0) {
            throw ParseError(std::string(section) + " appears before DIMENSION", line);
        }
    };

    std::string_view line;
    while (cur.peekLine(line)) {
        const std::size_t lineNo = cur.lineNumber();
        if (!looksLikeKeyword(line)) {
            throw ParseError("unexpected data outside a section", lineNo);
        }
        const std::size_t colon = line.find(':');
        std::string key;
        std::string_view value;
        if (colon != std::string_view::npos) {
            key = upper(trim(line.substr(0, colon)));
            value = trim(line.substr(colon + 1));
        } else {
            const std::size_t sp = line.find_first_of(" \t");
            key = upper(trim(line.substr(0, sp)));
            value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
        }

        if (key == "EOF") {
            break;
        }
        if (key.size() > 8 && key.ends_with("_SECTION")) {
            cur.takeLine();
            if (!value.empty()) {
                // Data starting on the keyword line itself.
                cur.rewindTo(lineNo);
                Token skip;
                cur.nextToken(skip);
            }
            if (key == "EDGE_WEIGHT_SECTION") {
                requireDimension("EDGE_WEIGHT_SECTION", lineNo);
                if (inst.weightType != EdgeWeightType::Explicit || !haveType) {
                    throw ParseError("EDGE_WEIGHT_SECTION requires EDGE_WEIGHT_TYPE: EXPLICIT", lineNo);
                }
                if (formatValue.empty()) {
                    throw ParseError("EDGE_WEIGHT_SECTION requires EDGE_WEIGHT_FORMAT", lineNo);
                }
                inst.weightFormat = parseFormat(formatValue, formatLine);
                inst.explicitWeights = readValues<std::int64_t>(
                    cur, explicitWeightCount(*inst.weightFormat, inst.dimension), "EDGE_WEIGHT_SECTION");
                haveWeights = true;
            } else if (key == "NODE_COORD_SECTION") {
                requireDimension("NODE_COORD_SECTION", lineNo);
                auto coords = readCoords(cur, inst.dimension, "NODE_COORD_SECTION");
                if (inst.weightType == EdgeWeightType::Euc2D) {
                    inst.coords = std::move(coords);
                }
                haveCoords = true;
            } else if (key == "DISPLAY_DATA_SECTION") {
                requireDimension("DISPLAY_DATA_SECTION", lineNo);
                readCoords(cur, inst.dimension, "DISPLAY_DATA_SECTION");
            } else {
                // Unknown section: skip its numeric lines.
                std::string_view next;
                while (cur.peekLine(next) && !looksLikeKeyword(next)) {
                    cur.takeLine();
                }
            }
            continue;
        }

        cur.takeLine();
        const std::string v(value);
        if (key == "NAME") {
            inst.name = v;
            haveName = true;
        } else if (key == "DIMENSION") {
            Token tok{value, lineNo};
            const auto d = parseNumber<std::int64_t>(tok, "DIMENSION");
            if (d < 1) {
                throw ParseError("DIMENSION must be positive", lineNo);
            }
            inst.dimension = static_cast<std::size_t>(d);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            const std::string t = upper(value);
            if (t == "EXPLICIT") {
                inst.weightType = EdgeWeightType::Explicit;
            } else if (t == "EUC_2D") {
                inst.weightType = EdgeWeightType::Euc2D;
            } else {
                throw UnsupportedFormat("unsupported EDGE_WEIGHT_TYPE '" + v + "'", lineNo);
            }
            haveType = true;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            formatValue = upper(value);
            formatLine = lineNo;
        }
    }

    if (!haveName) {
        throw ParseError("missing NAME");
    }
    if (inst.dimension == 0) {
        throw ParseError("missing DIMENSION");
    }
    if (!haveType) {
        throw ParseError("missing EDGE_WEIGHT_TYPE");
    }
    if (inst.weightType == EdgeWeightType::Explicit && !haveWeights) {
        throw ParseError("missing EDGE_WEIGHT_SECTION");
    }
    if (inst.weightType == EdgeWeightType::Euc2D && !haveCoords) {
        throw ParseError("missing NODE_COORD_SECTION");
    }
    return inst;
}

std::int64_t tsplibNint(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

WeightMatrix toWeightMatrix(const TsplibInstance &inst) {
    const std::size_t n = inst.dimension;
    if (n == 0) {
        throw ParseError("instance has no nodes");
    }
    std::vector<std::int64_t> cells(n * n, 0);
    auto set = [&](std::size_t i, std::size_t j, std::int64_t v) {
        if (i != j) {
            cells[i * n + j] = v;
            cells[j * n + i] = v;
        }
    };

    if (inst.weightType == EdgeWeightType::Euc2D) {
        if (inst.coords.size() != n) {
            throw ParseError("EUC_2D instance has " + std::to_string(inst.coords.size()) + " coordinates, expected " +
                             std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = inst.coords[i].first - inst.coords[j].first;
                const double dy = inst.coords[i].second - inst.coords[j].second;
                set(i, j, tsplibNint(std::sqrt(dx * dx + dy * dy)));
            }
        }
        return WeightMatrix::fromDense(n, std::move(cells));
    }

    if (!inst.weightFormat) {
        throw ParseError("EXPLICIT instance without EDGE_WEIGHT_FORMAT");
    }
    const auto &w = inst.explicitWeights;
    if (w.size() != explicitWeightCount(*inst.weightFormat, n)) {
        throw ParseError("EXPLICIT instance has " + std::to_string(w.size()) + " weights, expected " +
                         std::to_string(explicitWeightCount(*inst.weightFormat, n)));
    }
    std::size_t k = 0;
    switch (*inst.weightFormat) {
    case EdgeWeightFormat::FullMatrix:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::int64_t v = w[i * n + j];
                if (i < j && v != w[j * n + i]) {
                    throw ParseError("FULL_MATRIX is not symmetric at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
                }
                set(i, j, v);
            }
        }
        break;
    case EdgeWeightFormat::UpperRow:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                set(i, j, w[k++]);
            }
        }
        break;
    case EdgeWeightFormat::LowerRow:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                set(i, j, w[k++]);
            }
        }
        break;
    case EdgeWeightFormat::UpperDiagRow:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                set(i, j, w[k++]);
            }
        }
        break;
    case EdgeWeightFormat::LowerDiagRow:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                set(i, j, w[k++]);
            }
        }
        break;
    }
    return WeightMatrix::fromDense(n, std::move(cells));
}

} // namespace maxcut
