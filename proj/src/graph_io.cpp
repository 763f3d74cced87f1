#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw ParseError{line, col, msg};
}

// column of the first character of token `idx` (1-based), for error spans
int token_column(const std::string& s, int idx) {
    int col = 0, tok = 0;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        if (tok == idx) return static_cast<int>(i) + 1;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        ++tok;
        col = static_cast<int>(i);
    }
    return col + 1;
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoi(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, std::string>> label_entries;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "#") {
            std::string kind;
            if (ls >> kind && kind == "label") {
                std::string idx_tok, name;
                if (!(ls >> idx_tok >> name))
                    fail(lineno, token_column(line, 2), "expected '# label <i> <name>'");
                int idx;
                if (!parse_int(idx_tok, idx))
                    fail(lineno, token_column(line, 2), "bad vertex index '" + idx_tok + "'");
                label_entries.emplace_back(idx, name);
            }
            continue;  // other comments ignored
        }
        if (n < 0) {
            if (tok != "graph")
                fail(lineno, token_column(line, 0), "expected header 'graph <V>'");
            std::string count_tok;
            if (!(ls >> count_tok))
                fail(lineno, token_column(line, 1), "expected vertex count after 'graph'");
            if (!parse_int(count_tok, n) || n < 0)
                fail(lineno, token_column(line, 1), "bad vertex count '" + count_tok + "'");
            continue;
        }
        int u, v;
        std::string vtok;
        if (!parse_int(tok, u))
            fail(lineno, token_column(line, 0), "bad vertex '" + tok + "'");
        if (!(ls >> vtok))
            fail(lineno, token_column(line, 1), "expected second endpoint");
        if (!parse_int(vtok, v))
            fail(lineno, token_column(line, 1), "bad vertex '" + vtok + "'");
        std::string extra;
        if (ls >> extra)
            fail(lineno, token_column(line, 2), "unexpected token '" + extra + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(lineno, token_column(line, 0), "edge endpoint out of range");
        pairs.emplace_back(u, v);
    }
    if (n < 0) fail(lineno == 0 ? 1 : lineno, 1, "missing 'graph <V>' header");
    std::vector<std::string> labels;
    if (!label_entries.empty()) {
        labels.assign(n, "");
        for (auto& [idx, name] : label_entries) {
            if (idx < 0 || idx >= n) fail(lineno, 1, "label index out of range");
            labels[idx] = name;
        }
    }
    try {
        return Graph::from_pairs(n, pairs, std::move(labels));
    } catch (const std::invalid_argument& e) {
        fail(lineno, 1, e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "graph " << g.vertex_count() << "\n";
    if (g.has_labels()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty())
                out << "# label " << v << " " << g.label(v) << "\n";
    }
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_dot(const Graph& g, std::ostream& out) {
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels() && !g.label(v).empty())
            out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace skew
