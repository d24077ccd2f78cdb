#include "maxcut/mcut.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maxcut/error.hpp"

namespace maxcut {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::int64_t parseIndex(std::string_view tok, std::size_t line, const char *what) {
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(tok) + "'", line);
    }
    return v;
}

Weight parseWeight(std::string_view tok, std::size_t line) {
    const char *first = tok.data();
    const char *last = first + tok.size();
    if (first != last && *first == '+') {
        ++first;
    }
    if (tok.find_first_of(".eE") == std::string_view::npos) {
        std::int64_t v{};
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc() && ptr == last) {
            return Weight(v);
        }
        throw ParseError("invalid integer weight '" + std::string(tok) + "'", line);
    }
    double v{};
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError("invalid real weight '" + std::string(tok) + "'", line);
    }
    return Weight(v);
}

} // namespace

WeightMatrix parseMcut(std::string_view text) {
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    bool haveHeader = false;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<EdgeEntry> entries;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineNo;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }

        if (!haveHeader) {
            if (tokens.size() != 2) {
                throw ParseError("header must be 'n m'", lineNo);
            }
            n = parseIndex(tokens[0], lineNo, "vertex count");
            m = parseIndex(tokens[1], lineNo, "edge count");
            if (n < 1) {
                throw ParseError("vertex count must be at least 1", lineNo);
            }
            if (m < 0 || m > n * (n - 1) / 2) {
                throw ParseError("edge count " + std::to_string(m) + " impossible for n = " + std::to_string(n),
                                 lineNo);
            }
            haveHeader = true;
            continue;
        }

        if (tokens.size() != 3) {
            throw ParseError("edge line must be 'i j w'", lineNo);
        }
        if (static_cast<std::int64_t>(entries.size()) == m) {
            throw ParseError("more edge lines than the declared " + std::to_string(m), lineNo);
        }
        const auto i = parseIndex(tokens[0], lineNo, "vertex");
        const auto j = parseIndex(tokens[1], lineNo, "vertex");
        if (i < 1 || j < 1 || i > n || j > n) {
            throw ParseError("vertex index out of range 1.." + std::to_string(n), lineNo);
        }
        if (i >= j) {
            throw ParseError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") requires i < j", lineNo);
        }
        if (!seen.emplace(i, j).second) {
            throw ParseError("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")", lineNo);
        }
        entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), parseWeight(tokens[2], lineNo)});
    }

    if (!haveHeader) {
        throw ParseError("missing 'n m' header");
    }
    if (static_cast<std::int64_t>(entries.size()) != m) {
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(entries.size()),
                         lineNo);
    }
    return WeightMatrix::build(static_cast<std::size_t>(n), entries);
}

} // namespace maxcut
