// Text file formats.
//
// Matroid file:                       Graph file:
//   matroid <rows> <cols>               graph
//   labels <t1> ... <t_cols>            <label> <u> <v>     (one line per edge)
//   <rows lines of 0/1, length cols>
//
// The labels line is optional on input (defaults to e1..e_cols) and always
// written on output, so parse(serialize(x)) is the identity.
//
// A split result file is `split mode=<pair|set> X=<labels>` followed by the
// original and the split matroid blocks.

#pragma once

#include <fstream>
#include <sstream>

#include "splitmat/graph.hpp"

namespace splitmat {

namespace io_detail {

struct Line {
    std::string text;
    std::size_t number;  // 1-based
};

inline std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string cur;
    std::size_t number = 1;
    for (const char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back({cur, number++});
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back({cur, number});
    }
    return lines;
}

inline std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& line) {
    std::vector<std::pair<std::string, std::size_t>> out;  // token, 1-based column
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start), start + 1);
    }
    return out;
}

inline std::size_t parse_count(const std::string& file, const Line& line, const std::string& token,
                               std::size_t column) {
    std::size_t value = 0;
    if (token.empty()) throw ParseError(file, line.number, column, "expected a number");
    for (const char c : token) {
        if (c < '0' || c > '9')
            throw ParseError(file, line.number, column, "expected a number, got '" + token + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

// Parses one matroid block starting at lines[at]; advances at past the block.
inline BinaryMatroid parse_matroid_block(const std::string& file, const std::vector<Line>& lines,
                                         std::size_t& at) {
    if (at >= lines.size()) throw ParseError(file, lines.empty() ? 1 : lines.back().number + 1, 1,
                                             "expected 'matroid <rows> <cols>' header");
    const Line& header = lines[at];
    const auto head = tokenize(header.text);
    if (head.size() != 3 || head[0].first != "matroid")
        throw ParseError(file, header.number, 1, "malformed header, expected 'matroid <rows> <cols>'");
    const std::size_t rows = parse_count(file, header, head[1].first, head[1].second);
    const std::size_t cols = parse_count(file, header, head[2].first, head[2].second);
    if (cols > kMaxColumns)
        throw ParseError(file, header.number, head[2].second, "at most 64 columns are supported");
    ++at;

    std::vector<std::string> labels;
    if (at < lines.size()) {
        const auto toks = tokenize(lines[at].text);
        if (!toks.empty() && toks[0].first == "labels") {
            if (toks.size() != cols + 1)
                throw ParseError(file, lines[at].number, 1,
                                 "labels line must carry exactly " + std::to_string(cols) + " labels");
            std::set<std::string> seen;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (!seen.insert(toks[i].first).second)
                    throw ParseError(file, lines[at].number, toks[i].second,
                                     "duplicate label '" + toks[i].first + "'");
                labels.push_back(toks[i].first);
            }
            ++at;
        }
    }
    if (labels.empty()) labels = default_labels(cols);

    GF2Matrix rep(0, cols);
    for (std::size_t r = 0; r < rows; ++r, ++at) {
        if (at >= lines.size())
            throw ParseError(file, lines.back().number + 1, 1,
                             "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
        const Line& line = lines[at];
        if (line.text.size() != cols)
            throw ParseError(file, line.number, std::min(line.text.size(), cols) + 1,
                             "length-mismatch: row has " + std::to_string(line.text.size()) +
                                 " characters, expected " + std::to_string(cols));
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            if (line.text[j] == '1')
                bits |= std::uint64_t{1} << j;
            else if (line.text[j] != '0')
                throw ParseError(file, line.number, j + 1,
                                 std::string("bad bit character '") + line.text[j] + "'");
        }
        rep.append_row(bits);
    }
    return BinaryMatroid(std::move(labels), std::move(rep));
}

}  // namespace io_detail

inline BinaryMatroid parse_matroid(const std::string& text, const std::string& filename = "<input>") {
    const auto lines = io_detail::split_lines(text);
    std::size_t at = 0;
    BinaryMatroid m = io_detail::parse_matroid_block(filename, lines, at);
    for (std::size_t i = at; i < lines.size(); ++i)
        if (!io_detail::tokenize(lines[i].text).empty())
            throw ParseError(filename, lines[i].number, 1, "unexpected trailing content");
    return m;
}

inline std::string write_matroid(const BinaryMatroid& m) {
    std::string out = "matroid " + std::to_string(m.rep().rows()) + " " + std::to_string(m.size()) + "\n";
    out += "labels";
    for (const auto& l : m.ground()) out += " " + l;
    out += "\n";
    for (std::size_t r = 0; r < m.rep().rows(); ++r) {
        for (std::size_t j = 0; j < m.size(); ++j) out += m.rep().get(r, j) ? '1' : '0';
        out += "\n";
    }
    return out;
}

inline MultiGraph parse_graph(const std::string& text, const std::string& filename = "<input>") {
    const auto lines = io_detail::split_lines(text);
    if (lines.empty() || io_detail::tokenize(lines[0].text) !=
                             std::vector<std::pair<std::string, std::size_t>>{{"graph", 1}})
        throw ParseError(filename, 1, 1, "malformed header, expected 'graph'");
    std::vector<GraphEdge> edges;
    std::set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = io_detail::tokenize(lines[i].text);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError(filename, lines[i].number, 1, "expected '<label> <u> <v>'");
        if (!seen.insert(toks[0].first).second)
            throw ParseError(filename, lines[i].number, toks[0].second,
                             "duplicate edge label '" + toks[0].first + "'");
        edges.push_back({toks[0].first, toks[1].first, toks[2].first});
    }
    return MultiGraph(std::move(edges));
}

inline std::string write_graph(const MultiGraph& g) {
    std::string out = "graph\n";
    for (const auto& e : g.edges()) out += e.label + " " + e.u + " " + e.v + "\n";
    return out;
}

inline std::string write_split_result(const SplitResult& r) {
    std::string out = "split mode=";
    out += to_string(r.mode);
    out += " X=";
    const auto labels = r.x_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    out += "\n";
    out += write_matroid(r.original);
    out += write_matroid(r.split);
    return out;
}

inline SplitResult parse_split_result(const std::string& text, const std::string& filename = "<input>") {
    const auto lines = io_detail::split_lines(text);
    if (lines.empty()) throw ParseError(filename, 1, 1, "empty split file");
    const auto toks = io_detail::tokenize(lines[0].text);
    if (toks.size() != 3 || toks[0].first != "split")
        throw ParseError(filename, 1, 1, "malformed header, expected 'split mode=<pair|set> X=<labels>'");
    SplitMode mode;
    if (toks[1].first == "mode=pair")
        mode = SplitMode::pair;
    else if (toks[1].first == "mode=set")
        mode = SplitMode::set;
    else
        throw ParseError(filename, 1, toks[1].second, "mode must be 'pair' or 'set'");
    if (toks[2].first.rfind("X=", 0) != 0)
        throw ParseError(filename, 1, toks[2].second, "expected X=<labels>");
    std::vector<std::string> x_labels;
    {
        const std::string list = toks[2].first.substr(2);
        std::string cur;
        for (const char c : list) {
            if (c == ',') {
                if (!cur.empty()) x_labels.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) x_labels.push_back(cur);
    }
    std::size_t at = 1;
    BinaryMatroid original = io_detail::parse_matroid_block(filename, lines, at);
    BinaryMatroid split = io_detail::parse_matroid_block(filename, lines, at);
    SplitResult out{std::move(original), std::move(split), 0, mode};
    out.x_mask = out.original.mask_of(x_labels);
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
}

inline BinaryMatroid read_matroid_file(const std::string& path) {
    return parse_matroid(read_file(path), path);
}

inline MultiGraph read_graph_file(const std::string& path) { return parse_graph(read_file(path), path); }

}  // namespace splitmat
