#include "pdom/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <utility>

namespace pdom {

namespace {

std::string at_line(int line_no, const std::string& msg) {
    return "line " + std::to_string(line_no) + ": " + msg;
}

// Walks a document line by line, skipping blank and '#' comment lines.
struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    bool next(std::string_view& line, int& line_out) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            std::size_t first = raw.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || raw[first] == '#') continue;
            std::size_t last = raw.find_last_not_of(" \t\r");
            line = raw.substr(first, last - first + 1);
            line_out = line_no;
            return true;
        }
        return false;
    }
};

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError(at_line(line_no, std::string("expected an integer ") + what + ", got '" +
                                              std::string(tok) + "'"));
    return value;
}

double parse_double(std::string_view tok, int line_no, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError(at_line(line_no, std::string("expected a number ") + what + ", got '" +
                                              std::string(tok) + "'"));
    return value;
}

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    int line_no = 0;
    if (!reader.next(line, line_no)) throw InputError("graph document: missing 'n m' header");
    auto header = split_tokens(line);
    if (header.size() != 2)
        throw InputError(at_line(line_no, "header must be 'n m'"));
    int n = parse_int(header[0], line_no, "for n");
    int m = parse_int(header[1], line_no, "for m");
    if (n < 0 || m < 0) throw InputError(at_line(line_no, "n and m must be non-negative"));

    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m; ++e) {
        if (!reader.next(line, line_no))
            throw InputError("graph document: expected " + std::to_string(m) +
                             " edge lines, found " + std::to_string(e));
        auto toks = split_tokens(line);
        if (toks.size() != 2) throw InputError(at_line(line_no, "edge line must be 'u v'"));
        int u = parse_int(toks[0], line_no, "for u");
        int v = parse_int(toks[1], line_no, "for v");
        if (u < 1 || u > n || v < 1 || v > n)
            throw InputError(at_line(line_no, "endpoint out of range [1, " + std::to_string(n) + "]"));
        if (u == v)
            throw InputError(at_line(line_no, "self-loop " + std::to_string(u) + "-" + std::to_string(v)));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw InputError(at_line(line_no, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v)));
        g.add_edge(u - 1, v - 1);
    }
    if (reader.next(line, line_no))
        throw InputError(at_line(line_no, "unexpected content after " + std::to_string(m) + " edges"));
    return g;
}

std::string render_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

WeightedTree parse_tree(std::string_view text, std::vector<int>* old_of_new) {
    LineReader reader{text};
    std::string_view line;
    int line_no = 0;
    if (!reader.next(line, line_no)) throw InputError("tree document: missing 'n' header");
    auto header = split_tokens(line);
    if (header.size() != 1) throw InputError(at_line(line_no, "header must be a single 'n'"));
    int n = parse_int(header[0], line_no, "for n");
    if (n < 1) throw InputError(at_line(line_no, "a tree needs at least one vertex"));

    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
    std::vector<int> decl_line(static_cast<std::size_t>(n), 0);
    int root = -1;
    for (int i = 0; i < n; ++i) {
        if (!reader.next(line, line_no))
            throw InputError("tree document: expected " + std::to_string(n) +
                             " vertex lines, found " + std::to_string(i));
        auto toks = split_tokens(line);
        if (toks.size() != 3)
            throw InputError(at_line(line_no, "vertex line must be 'id parent weight'"));
        int id = parse_int(toks[0], line_no, "for id");
        int par = parse_int(toks[1], line_no, "for parent");
        double w = parse_double(toks[2], line_no, "for weight");
        if (id < 1 || id > n)
            throw InputError(at_line(line_no, "vertex id out of range [1, " + std::to_string(n) + "]"));
        if (parent[static_cast<std::size_t>(id - 1)] != -1 || decl_line[static_cast<std::size_t>(id - 1)] != 0)
            throw InputError(at_line(line_no, "vertex " + std::to_string(id) + " declared twice"));
        if (par < 0 || par > n)
            throw InputError(at_line(line_no, "parent reference " + std::to_string(par) +
                                                  " does not resolve"));
        if (par == id) throw InputError(at_line(line_no, "vertex cannot be its own parent"));
        if (!(w > 0.0))
            throw InputError(at_line(line_no, "weight must be positive, got " + std::string(toks[2])));
        if (par == 0) {
            if (root != -1)
                throw InputError(at_line(line_no, "duplicate root (vertex " + std::to_string(root + 1) +
                                                      " already has parent 0)"));
            root = id - 1;
        }
        parent[static_cast<std::size_t>(id - 1)] = par - 1;  // -1 for the root
        weight[static_cast<std::size_t>(id - 1)] = w;
        decl_line[static_cast<std::size_t>(id - 1)] = line_no;
    }
    if (reader.next(line, line_no))
        throw InputError(at_line(line_no, "unexpected content after " + std::to_string(n) + " vertices"));
    if (root == -1) throw InputError("tree document: no root (exactly one vertex must have parent 0)");

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < n; ++v) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        auto key = std::minmax(v, p);
        if (!seen.insert({key.first, key.second}).second)
            throw InputError(at_line(decl_line[static_cast<std::size_t>(v)],
                                     "edge to parent duplicates an earlier edge (cycle of length 2)"));
        edges.emplace_back(v, p);
    }
    TreeOrdering ord;
    try {
        ord = tree_ordering(n, edges, root);
    } catch (const InputError&) {
        throw InputError("tree document: parent relation contains a cycle");
    }

    std::vector<double> new_weight(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        new_weight[static_cast<std::size_t>(ord.new_of_old[static_cast<std::size_t>(v)])] =
            weight[static_cast<std::size_t>(v)];
    if (old_of_new != nullptr) {
        old_of_new->assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            (*old_of_new)[static_cast<std::size_t>(ord.new_of_old[static_cast<std::size_t>(v)])] = v;
    }
    return WeightedTree::from_parts(std::move(ord.father), std::move(new_weight));
}

WeightedTree parse_tree(std::string_view text) { return parse_tree(text, nullptr); }

std::string render_tree(const WeightedTree& t) {
    const int n = t.vertex_count();
    std::string out = std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        int parent = i == t.root() ? 0 : t.father[static_cast<std::size_t>(i)] + 1;
        out += std::to_string(i + 1) + " " + std::to_string(parent) + " " +
               format_double(t.weights[static_cast<std::size_t>(i)]) + "\n";
    }
    return out;
}

std::vector<double> parse_weights(std::string_view text, int expected_count) {
    LineReader reader{text};
    std::string_view line;
    int line_no = 0;
    std::vector<double> out;
    while (reader.next(line, line_no)) {
        for (auto tok : split_tokens(line)) {
            double w = parse_double(tok, line_no, "for a weight");
            if (!(w > 0.0))
                throw InputError(at_line(line_no, "weight must be positive, got " + std::string(tok)));
            out.push_back(w);
        }
    }
    if (static_cast<int>(out.size()) != expected_count)
        throw InputError("weights: expected " + std::to_string(expected_count) + " values, found " +
                         std::to_string(out.size()));
    return out;
}

std::string format_id_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ", ";
        out += std::to_string(v + 1);
        first = false;
    });
    out += "}";
    return out;
}

}  // namespace pdom
