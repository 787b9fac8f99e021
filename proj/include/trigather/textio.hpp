#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "trigather/config.hpp"

namespace trigather {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

/// Configuration text format:
///   trigrid 1
///   # comment
///   col hrow count [chirality]
/// with chirality S (default) or M. Duplicate points simply add robots.
inline Configuration parse_config(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::vector<Placement> placements;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!header_seen) {
            std::string magic;
            int version = 0;
            if (!(fields >> magic >> version) || magic != "trigrid" || version != 1) {
                throw ParseError(lineno, "expected header 'trigrid 1'");
            }
            std::string rest;
            if (fields >> rest) throw ParseError(lineno, "trailing tokens after header");
            header_seen = true;
            continue;
        }
        Placement pl;
        if (!(fields >> pl.at.col >> pl.at.hrow)) {
            std::string tok;
            std::istringstream probe(line);
            if (!(probe >> tok)) continue;  // blank line
            throw ParseError(lineno, "expected 'col hrow count [chirality]'");
        }
        if (!(fields >> pl.count)) throw ParseError(lineno, "missing robot count");
        std::string tok;
        if (fields >> tok) {
            if (tok == "S") {
                pl.chirality = Chirality::Standard;
            } else if (tok == "M") {
                pl.chirality = Chirality::Mirrored;
            } else {
                throw ParseError(lineno, "unknown chirality token '" + tok + "'");
            }
            if (fields >> tok) throw ParseError(lineno, "trailing tokens");
        }
        if (!is_valid(pl.at)) {
            throw ParseError(lineno, "invalid grid point " + to_string(pl.at) +
                                         ": col and hrow must have equal parity");
        }
        if (pl.count < 1) throw ParseError(lineno, "robot count must be >= 1");
        placements.push_back(pl);
    }
    if (!header_seen) throw ParseError(lineno, "expected header 'trigrid 1'");
    if (placements.empty()) throw ParseError(lineno, "configuration defines no robots");
    return Configuration::from_placements(placements);
}

/// Inverse of parse_config: consecutive robots sharing a vertex and chirality
/// collapse into one line, so parse(render(c)) == c.
inline std::string render_config(const Configuration& c) {
    std::ostringstream out;
    out << "trigrid 1\n";
    const auto& pos = c.positions();
    const auto& chi = c.chiralities();
    std::size_t i = 0;
    while (i < pos.size()) {
        std::size_t j = i;
        while (j + 1 < pos.size() && pos[j + 1] == pos[i] && chi[j + 1] == chi[i]) ++j;
        out << pos[i].col << ' ' << pos[i].hrow << ' ' << (j - i + 1);
        if (chi[i] == Chirality::Mirrored) out << " M";
        out << '\n';
        i = j + 1;
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Whole-file atomic write: temp file in the same directory, then rename.
inline void atomic_write_file(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

inline Configuration load_config_file(const std::string& path) {
    return parse_config(read_file(path));
}

}  // namespace trigather
