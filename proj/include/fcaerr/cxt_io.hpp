#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fcaerr/context.hpp"
#include "fcaerr/errors.hpp"

namespace fcaerr {

// Burmeister .cxt:
//   line 1: "B"
//   line 2: blank (or a context name, ignored)
//   line 3: |G|
//   line 4: |M|
//   line 5: blank
//   |G| object names, |M| attribute names,
//   |G| rows of exactly |M| characters out of {'.', 'X'}.
// Written with LF endings; the parser tolerates trailing CR.

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.emplace_back(text.substr(pos));
            break;
        }
        std::string line(text.substr(pos, nl - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        pos = nl + 1;
    }
    return lines;
}

inline std::size_t parse_count(const std::string& line, std::size_t lineno, const char* what) {
    std::size_t value = 0;
    if (line.empty()) throw ParseError("cxt line " + std::to_string(lineno) + ": missing " + what);
    for (char c : line) {
        if (c < '0' || c > '9')
            throw ParseError("cxt line " + std::to_string(lineno) + ": bad " + what + " '" + line + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

}  // namespace detail

inline FormalContext parse_cxt(std::string_view text) {
    std::vector<std::string> lines = detail::split_lines(text);
    if (lines.empty() || lines[0] != "B")
        throw ParseError("cxt line 1: expected header 'B'");
    if (lines.size() < 5) throw ParseError("cxt: truncated header");
    std::size_t ng = detail::parse_count(lines[2], 3, "object count");
    std::size_t nm = detail::parse_count(lines[3], 4, "attribute count");
    if (!lines[4].empty()) throw ParseError("cxt line 5: expected blank separator");
    std::size_t need = 5 + ng + nm + ng;
    if (lines.size() < need)
        throw ParseError("cxt: expected " + std::to_string(need) + " lines, got " +
                         std::to_string(lines.size()));
    std::vector<std::string> objects(lines.begin() + 5, lines.begin() + 5 + ng);
    std::vector<std::string> attributes(lines.begin() + 5 + ng, lines.begin() + 5 + ng + nm);
    std::vector<Bitset> rows;
    rows.reserve(ng);
    for (std::size_t g = 0; g < ng; ++g) {
        const std::string& line = lines[5 + ng + nm + g];
        std::size_t lineno = 5 + ng + nm + g + 1;
        if (line.size() != nm)
            throw ParseError("cxt line " + std::to_string(lineno) + ": row has " +
                             std::to_string(line.size()) + " cells, expected " + std::to_string(nm));
        Bitset r(nm);
        for (std::size_t m = 0; m < nm; ++m) {
            if (line[m] == 'X')
                r.set(m);
            else if (line[m] != '.')
                throw ParseError("cxt line " + std::to_string(lineno) + ": illegal cell '" +
                                 std::string(1, line[m]) + "' (want '.' or 'X')");
        }
        rows.push_back(std::move(r));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline std::string write_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count());
    out += '\n';
    out += std::to_string(ctx.attribute_count());
    out += "\n\n";
    for (const std::string& g : ctx.objects()) {
        out += g;
        out += '\n';
    }
    for (const std::string& m : ctx.attributes()) {
        out += m;
        out += '\n';
    }
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            out += ctx.incident(g, m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

inline FormalContext read_cxt_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cxt(buf.str());
}

inline void write_cxt_file(const FormalContext& ctx, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << write_cxt(ctx);
}

}  // namespace fcaerr
