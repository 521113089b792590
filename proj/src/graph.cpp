#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace elimtw {

Graph Graph::from_rows(int n, const std::vector<VertexSet>& rows) {
    Graph g;
    g.n_ = n;
    g.rows_ = rows;
    g.rows_.resize(n);
    VertexSet universe = VertexSet::first_n(n);
    for (int v = 0; v < n; ++v) {
        g.rows_[v] &= universe;
        g.rows_[v].remove(v);
    }
    // enforce symmetry
    for (int v = 0; v < n; ++v)
        for (int u : g.rows_[v]) g.rows_[u].add(v);
    g.lists_.resize(n);
    for (int v = 0; v < n; ++v) {
        g.lists_[v].assign(g.rows_[v].begin(), g.rows_[v].end());
        g.m_ += g.lists_[v].size();
    }
    g.m_ /= 2;
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexSet> rows(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        rows[u].add(v);
        rows[v].add(u);
    }
    return from_rows(n, rows);
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_number(std::string_view tok, int lineno, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

int parse_vertex(std::string_view tok, int n, int lineno) {
    long long v = parse_number(tok, lineno, "a vertex id");
    if (v < 1 || v > n)
        throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

// Walks lines, tolerating CRLF and blank lines, calling fn(lineno, tokens).
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        size_t end = (nl == std::string_view::npos) ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto toks = tokenize(line);
        if (!toks.empty()) fn(lineno, toks);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    bool have_header = false;
    int n = 0;
    long long declared_m = 0;
    std::vector<std::pair<int, int>> edges;

    const char* want_descriptor = (format == GraphFormat::pace_gr) ? "tw" : "edge";

    for_each_line(text, [&](int lineno, const std::vector<std::string_view>& toks) {
        if (toks[0] == "c") return;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4)
                throw ParseError(lineno, "problem line must have 4 fields");
            if (toks[1] != want_descriptor)
                throw ParseError(lineno, "expected 'p " + std::string(want_descriptor) +
                                             "' header, got 'p " + std::string(toks[1]) + "'");
            long long nn = parse_number(toks[2], lineno, "a vertex count");
            declared_m = parse_number(toks[3], lineno, "an edge count");
            if (nn < 0) throw ParseError(lineno, "negative vertex count");
            if (nn > kMaxVertices)
                throw ParseError(lineno, "graph has " + std::to_string(nn) + " vertices, limit is " +
                                             std::to_string(kMaxVertices));
            n = static_cast<int>(nn);
            have_header = true;
            return;
        }
        if (!have_header) throw ParseError(lineno, "edge before problem line");
        if (format == GraphFormat::pace_gr) {
            if (toks.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
            int u = parse_vertex(toks[0], n, lineno);
            int v = parse_vertex(toks[1], n, lineno);
            edges.emplace_back(u, v);
        } else {
            if (toks[0] != "e")
                throw ParseError(lineno, "unknown line type '" + std::string(toks[0]) + "'");
            if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'e u v'");
            int u = parse_vertex(toks[1], n, lineno);
            int v = parse_vertex(toks[2], n, lineno);
            edges.emplace_back(u, v);
        }
    });

    if (!have_header) throw ParseError(0, "missing problem line");
    (void)declared_m;  // header count is informational; the edge list wins
    return Graph::from_edges(n, edges);
}

GraphFormat detect_format(std::string_view text) {
    GraphFormat result = GraphFormat::pace_gr;
    bool found = false;
    for_each_line(text, [&](int lineno, const std::vector<std::string_view>& toks) {
        if (found || toks[0] == "c") return;
        if (toks[0] == "p" && toks.size() >= 2) {
            if (toks[1] == "tw")
                result = GraphFormat::pace_gr;
            else if (toks[1] == "edge" || toks[1] == "edges" || toks[1] == "col")
                result = GraphFormat::dimacs_col;
            else
                throw ParseError(lineno, "unrecognized problem descriptor '" + std::string(toks[1]) + "'");
            found = true;
            return;
        }
        throw ParseError(lineno, "cannot detect format: first line is neither comment nor problem line");
    });
    if (!found) throw ParseError(0, "cannot detect format: no problem line");
    return result;
}

std::string serialize_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbor_list(v))
            if (v < u) out << v + 1 << " " << u + 1 << "\n";
    return out.str();
}

Graph eliminate_all(const Graph& g, VertexSet s) {
    int n = g.vertex_count();
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    for (int v : s) {
        VertexSet nb = rows[v];
        for (int u : nb) {
            rows[u] |= nb;
            rows[u].remove(u);
            rows[u].remove(v);
        }
        rows[v] = VertexSet{};
    }
    return Graph::from_rows(n, rows);
}

bool is_permutation(const Graph& g, const EliminationOrder& pi) {
    if (static_cast<int>(pi.size()) != g.vertex_count()) return false;
    VertexSet seen;
    for (int v : pi) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.add(v);
    }
    return true;
}

int verify_order(const Graph& g, const EliminationOrder& pi) {
    if (!is_permutation(g, pi))
        throw std::invalid_argument("elimination order is not a permutation of the vertices");
    VertexSet prefix;
    int width = 0;
    for (int v : pi) {
        width = std::max(width, q_set(g, prefix, v).count());
        prefix.add(v);
    }
    return width;
}

}  // namespace elimtw
