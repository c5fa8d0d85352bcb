#pragma once

// Plain-text exchange formats.
//
// Hypergraph file:
//   - optional leading comment lines starting with '#', preserved verbatim
//   - header line "r n m" (single spaces)
//   - m edge lines of r strictly increasing vertex ids, in ascending
//     lexicographic order across lines
//   - LF line endings, no trailing blanks, nothing after the last edge
//
// Certificate file:
//   - line 1: "path <l>" or "cycle <t>"
//   - line 2: the vertex sequence (l+1 ids for a path, t for a cycle)
//   - line 3: the defining edge ids (l for a path, t for a cycle)
//
// Readers reject malformed input with a ParseError naming the source and the
// 1-based line of the offense. Writers emit byte-stable output: reading a
// file and writing it back reproduces it exactly.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bergekit/berge.hpp"
#include "bergekit/hypergraph.hpp"

namespace bergekit {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A hypergraph plus the comment lines that precede its header. Comments are
/// carried so that a read-write round trip is byte-identical.
struct HypergraphFile {
    std::vector<std::string> comments;  // raw lines, each starting with '#'
    Hypergraph graph;
};

namespace detail {

// Splits on single spaces and rejects any other whitespace layout, so that
// "1  2", " 1 2" and "1 2 " all fail loudly.
inline std::vector<std::string> strict_tokens(const std::string& line, const std::string& source,
                                              int line_no) {
    if (!line.empty() && (line.front() == ' ' || line.back() == ' '))
        throw ParseError(source, line_no, "leading or trailing blank");
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == '\r') throw ParseError(source, line_no, "carriage return; expected LF line endings");
        if (c == '\t') throw ParseError(source, line_no, "tab character; fields are space-separated");
        if (c == ' ') {
            if (current.empty()) throw ParseError(source, line_no, "consecutive blanks");
            tokens.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

inline long long parse_integer(const std::string& token, const std::string& source, int line_no) {
    if (token.empty()) throw ParseError(source, line_no, "empty field");
    std::size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) throw ParseError(source, line_no, "'" + token + "' is not an integer");
    for (; i < token.size(); ++i)
        if (token[i] < '0' || token[i] > '9')
            throw ParseError(source, line_no, "'" + token + "' is not an integer");
    try {
        return std::stoll(token);
    } catch (const std::out_of_range&) {
        throw ParseError(source, line_no, "'" + token + "' is out of range");
    }
}

inline std::vector<int> parse_id_line(const std::string& line, std::size_t expected,
                                      const char* what, const std::string& source, int line_no) {
    std::vector<std::string> tokens = strict_tokens(line, source, line_no);
    if (tokens.size() != expected)
        throw ParseError(source, line_no,
                         "expected " + std::to_string(expected) + " " + what + ", found " +
                             std::to_string(tokens.size()));
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) {
        long long v = parse_integer(t, source, line_no);
        if (v < 0) throw ParseError(source, line_no, std::string(what) + " " + t + " is negative");
        if (v > 1000000000) throw ParseError(source, line_no, std::string(what) + " " + t + " is implausibly large");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

struct LineReader {
    std::istream& in;
    std::string source;
    int line_no = 0;

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        return true;
    }
};

}  // namespace detail

inline HypergraphFile read_hypergraph(std::istream& in, const std::string& source = "<input>") {
    detail::LineReader reader{in, source};
    std::string line;
    std::vector<std::string> comments;
    bool have_header = false;
    long long r = 0, n = 0, m = 0;
    while (reader.next(line)) {
        if (!line.empty() && line[0] == '#') {
            if (!line.empty() && line.back() == '\r')
                throw ParseError(source, reader.line_no, "carriage return; expected LF line endings");
            comments.push_back(line);
            continue;
        }
        std::vector<std::string> tokens = detail::strict_tokens(line, source, reader.line_no);
        if (tokens.size() != 3)
            throw ParseError(source, reader.line_no,
                             "header must be 'r n m', found " + std::to_string(tokens.size()) +
                                 " fields");
        r = detail::parse_integer(tokens[0], source, reader.line_no);
        n = detail::parse_integer(tokens[1], source, reader.line_no);
        m = detail::parse_integer(tokens[2], source, reader.line_no);
        if (r < 2) throw ParseError(source, reader.line_no, "uniformity must be at least 2");
        if (n < 0) throw ParseError(source, reader.line_no, "vertex count must be nonnegative");
        if (m < 0) throw ParseError(source, reader.line_no, "edge count must be nonnegative");
        if (n > 1000000 || r > 64 || m > 10000000)
            throw ParseError(source, reader.line_no, "header dimensions exceed supported size");
        have_header = true;
        break;
    }
    if (!have_header) throw ParseError(source, reader.line_no + 1, "missing header line 'r n m'");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError(source, reader.line_no + 1,
                             "unexpected end of input: expected " + std::to_string(m) +
                                 " edge lines, found " + std::to_string(i));
        std::vector<int> ids = detail::parse_id_line(line, static_cast<std::size_t>(r),
                                                     "vertex ids", source, reader.line_no);
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (ids[j] >= n)
                throw ParseError(source, reader.line_no,
                                 "vertex " + std::to_string(ids[j]) + " outside [0, " +
                                     std::to_string(n) + ")");
            if (j > 0 && ids[j] <= ids[j - 1])
                throw ParseError(source, reader.line_no,
                                 "vertex ids must be strictly increasing within an edge");
        }
        if (!edges.empty() && ids <= edges.back()) {
            if (ids == edges.back())
                throw ParseError(source, reader.line_no,
                                 "duplicate edge " + Hypergraph::format_edge(ids));
            throw ParseError(source, reader.line_no,
                             "edges must be in ascending lexicographic order");
        }
        edges.push_back(std::move(ids));
    }
    if (reader.next(line))
        throw ParseError(source, reader.line_no, "unexpected content after the last edge");
    return HypergraphFile{std::move(comments),
                          Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges))};
}

inline std::string serialize(const Hypergraph& h) {
    std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) +
                      " " + std::to_string(h.edge_count()) + "\n";
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

inline void write_hypergraph(std::ostream& out, const HypergraphFile& file) {
    for (const std::string& c : file.comments) out << c << '\n';
    out << serialize(file.graph);
}

inline HypergraphFile read_hypergraph_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_hypergraph(in, path);
}

inline void write_hypergraph_path(const std::string& path, const HypergraphFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hypergraph(out, file);
}

using Certificate = std::variant<BergePath, BergeCycle>;

inline Certificate read_certificate(std::istream& in, const std::string& source = "<certificate>") {
    detail::LineReader reader{in, source};
    std::string line;
    if (!reader.next(line)) throw ParseError(source, 1, "missing certificate header");
    std::vector<std::string> tokens = detail::strict_tokens(line, source, reader.line_no);
    if (tokens.size() != 2 || (tokens[0] != "path" && tokens[0] != "cycle"))
        throw ParseError(source, reader.line_no, "header must be 'path <l>' or 'cycle <t>'");
    long long len = detail::parse_integer(tokens[1], source, reader.line_no);
    bool is_cycle = tokens[0] == "cycle";
    if (len < 1 || len > 1000000)
        throw ParseError(source, reader.line_no, "certificate length out of range");
    if (is_cycle && len < 2)
        throw ParseError(source, reader.line_no, "a cycle has at least 2 edges");
    std::size_t vertex_count = static_cast<std::size_t>(is_cycle ? len : len + 1);
    if (!reader.next(line)) throw ParseError(source, reader.line_no + 1, "missing vertex line");
    std::vector<int> vertices =
        detail::parse_id_line(line, vertex_count, "vertex ids", source, reader.line_no);
    if (!reader.next(line)) throw ParseError(source, reader.line_no + 1, "missing edge line");
    std::vector<int> edge_ids = detail::parse_id_line(line, static_cast<std::size_t>(len),
                                                      "edge ids", source, reader.line_no);
    if (reader.next(line))
        throw ParseError(source, reader.line_no, "unexpected content after the edge line");
    if (is_cycle) return BergeCycle{std::move(vertices), std::move(edge_ids)};
    return BergePath{std::move(vertices), std::move(edge_ids)};
}

inline Certificate read_certificate_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_certificate(in, path);
}

inline std::string serialize(const Certificate& cert) {
    const bool is_cycle = std::holds_alternative<BergeCycle>(cert);
    const std::vector<int>& vertices =
        is_cycle ? std::get<BergeCycle>(cert).vertices : std::get<BergePath>(cert).vertices;
    const std::vector<int>& edge_ids =
        is_cycle ? std::get<BergeCycle>(cert).edge_indexes : std::get<BergePath>(cert).edge_indexes;
    std::string out = std::string(is_cycle ? "cycle" : "path") + " " +
                      std::to_string(edge_ids.size()) + "\n";
    auto append_ids = [&out](const std::vector<int>& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(ids[i]);
        }
        out += '\n';
    };
    append_ids(vertices);
    append_ids(edge_ids);
    return out;
}

inline void write_certificate(std::ostream& out, const Certificate& cert) { out << serialize(cert); }

inline void write_certificate_path(const std::string& path, const Certificate& cert) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_certificate(out, cert);
}

}  // namespace bergekit
