#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcpda/pda.hpp"

namespace arcpda {

class PdaParseError : public std::runtime_error {
public:
    PdaParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Text format, bit-exact on output: a header line
//   PDA K=<K> F=<F> Z=<Z> S=<S>
// then F rows of K single-space-separated tokens, each "*" or a decimal
// integer in [0, S-1], every row newline-terminated.
inline std::string write_pda(const PdaArray& p) {
    std::string out = "PDA K=" + std::to_string(p.K()) + " F=" + std::to_string(p.F()) +
                      " Z=" + std::to_string(p.Z()) + " S=" + std::to_string(p.S()) + "\n";
    for (std::int64_t r = 0; r < p.F(); ++r) {
        for (std::int64_t c = 0; c < p.K(); ++c) {
            if (c) out += ' ';
            const std::int32_t v = p.at(r, c);
            out += v == kStar ? "*" : std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

inline void write_pda_file(const std::string& path, const PdaArray& p) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << write_pda(p);
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline PdaArray read_pda(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw PdaParseError(1, 1, "empty input");

    std::int64_t k = -1, f = -1, z = -1, s = -1;
    {
        std::istringstream hdr(line);
        std::string tag;
        hdr >> tag;
        if (tag != "PDA") throw PdaParseError(1, 1, "expected header starting with 'PDA'");
        std::string field;
        while (hdr >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) throw PdaParseError(1, 1, "bad header field '" + field + "'");
            std::int64_t value;
            try {
                value = std::stoll(field.substr(eq + 1));
            } catch (const std::exception&) {
                throw PdaParseError(1, 1, "bad integer in header field '" + field + "'");
            }
            const std::string name = field.substr(0, eq);
            if (name == "K") k = value;
            else if (name == "F") f = value;
            else if (name == "Z") z = value;
            else if (name == "S") s = value;
            else throw PdaParseError(1, 1, "unknown header field '" + name + "'");
        }
        if (k < 1 || f < 1 || z < 0 || s < 0)
            throw PdaParseError(1, 1, "header must define K, F, Z and S");
    }

    std::vector<std::int32_t> cells;
    cells.reserve(static_cast<std::size_t>(f) * k);
    for (std::int64_t r = 0; r < f; ++r) {
        if (!std::getline(in, line))
            throw PdaParseError(static_cast<int>(r) + 2, 1, "expected " + std::to_string(f) +
                                                               " grid rows, got " + std::to_string(r));
        std::size_t pos = 0;
        for (std::int64_t c = 0; c < k; ++c) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            const std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
            if (start == pos)
                throw PdaParseError(static_cast<int>(r) + 2, static_cast<int>(start) + 1,
                                    "row has fewer than " + std::to_string(k) + " tokens");
            const std::string tok = line.substr(start, pos - start);
            if (tok == "*") {
                cells.push_back(kStar);
                continue;
            }
            std::int64_t v;
            try {
                std::size_t used;
                v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw PdaParseError(static_cast<int>(r) + 2, static_cast<int>(start) + 1,
                                    "bad token '" + tok + "'");
            }
            if (v < 0 || v >= s)
                throw PdaParseError(static_cast<int>(r) + 2, static_cast<int>(start) + 1,
                                    "integer " + tok + " outside [0, S-1]");
            cells.push_back(static_cast<std::int32_t>(v));
        }
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos != line.size())
            throw PdaParseError(static_cast<int>(r) + 2, static_cast<int>(pos) + 1,
                                "row has more than " + std::to_string(k) + " tokens");
    }
    while (std::getline(in, line)) {
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r')
                throw PdaParseError(static_cast<int>(f) + 2, 1, "trailing content after the grid");
    }
    return PdaArray::from_cells(f, k, z, s, std::move(cells));
}

inline PdaArray read_pda_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return read_pda(ss.str());
}

}  // namespace arcpda
