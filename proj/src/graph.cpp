#include "defco/graph.hpp"

#include <algorithm>
#include <sstream>

namespace defco {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ContractError("add_edge: endpoint out of range");
    if (u == v) throw ContractError("add_edge: self-loop");
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++edges_;
    }
}

bool Graph::adjacent(int u, int v) const {
    return neighbors(u).count(v) > 0;
}

const std::set<int>& Graph::neighbors(int u) const {
    if (u < 0 || u >= vertex_count()) throw ContractError("neighbors: vertex out of range");
    return adj_[u];
}

Instance::Instance(Graph g, int chi_colors, int delta_bound)
    : graph(std::move(g)), chi(chi_colors), delta(delta_bound) {
    if (chi < 1) throw ContractError("instance: chi must be >= 1");
    if (delta < 0) throw ContractError("instance: delta must be >= 0");
}

int deficiency(const Graph& g, const Coloring& c, int u) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw ContractError("deficiency: coloring size mismatch");
    if (u < 0 || u >= g.vertex_count()) throw ContractError("deficiency: vertex out of range");
    int count = 0;
    for (int v : g.neighbors(u))
        if (c[v] == c[u]) ++count;
    return count;
}

VerifyReport verify_coloring(const Instance& inst, const Coloring& c) {
    const Graph& g = inst.graph;
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw ContractError("verify_coloring: coloring size mismatch");
    for (int u = 0; u < g.vertex_count(); ++u)
        if (c[u] < 1 || c[u] > inst.chi)
            throw ContractError("verify_coloring: color of vertex " + std::to_string(u) +
                                " outside {1.." + std::to_string(inst.chi) + "}");

    VerifyReport report;
    report.valid = true;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int d = deficiency(g, c, u);
        report.max_deficiency = std::max<long long>(report.max_deficiency, d);
        if (d > inst.delta && !report.violating_vertex) {
            report.valid = false;
            report.violating_vertex = u;
        }
    }
    return report;
}

std::optional<Coloring> trivial_shortcut(const Instance& inst) {
    const long long n = inst.graph.vertex_count();
    if (static_cast<long long>(inst.chi) * inst.delta < n) return std::nullopt;
    Coloring c(n);
    for (long long i = 0; i < n; ++i) c[i] = static_cast<int>(i % inst.chi) + 1;
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count())
            throw ContractError("induced_subgraph: vertex out of range");

    Graph sub(static_cast<int>(sorted.size()));
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(sorted.size()); ++j) {
            if (g.adjacent(sorted[i], sorted[j])) sub.add_edge(i, j);
        }
    }
    return sub;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    return value;
}

}  // namespace

Graph parse_dimacs_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    Graph g;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p edge <n> <m>'");
            const int n = parse_int(tokens[2], line_no, "vertex count");
            parse_int(tokens[3], line_no, "edge count");
            if (n < 0) throw DataError("line " + std::to_string(line_no) + ": negative n");
            g = Graph(n);
            have_header = true;
        } else if (tokens[0] == "e") {
            if (!have_header)
                throw ParseError("line " + std::to_string(line_no) + ": edge before header");
            if (tokens.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            const int u = parse_int(tokens[1], line_no, "endpoint");
            const int v = parse_int(tokens[2], line_no, "endpoint");
            if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
                throw DataError("line " + std::to_string(line_no) + ": endpoint out of range");
            if (u == v) throw DataError("line " + std::to_string(line_no) + ": self-loop");
            g.add_edge(u - 1, v - 1);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unrecognized line '" +
                             tokens[0] + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p edge' header");
    return g;
}

Graph parse_dimacs_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_graph(in);
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

}  // namespace defco
