#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "defco/errors.hpp"

namespace defco {

// A coloring assigns each vertex a color in {1..chi}.
using Coloring = std::vector<int>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as sorted sets.
// Instances are built once and treated as immutable afterwards; all
// operations on them are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }

    // Inserts {u,v}; duplicates are collapsed, self-loops rejected.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const;
    const std::set<int>& neighbors(int u) const;
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::set<int>> adj_;
    int edges_ = 0;
};

// A decision-problem instance: color `graph` with `chi` colors so that every
// vertex has at most `delta` same-colored neighbors.
struct Instance {
    Graph graph;
    int chi = 1;
    int delta = 0;

    Instance(Graph g, int chi_colors, int delta_bound);
};

struct VerifyReport {
    bool valid = false;
    long long max_deficiency = 0;
    std::optional<int> violating_vertex;  // present iff invalid
};

// Number of neighbors of u sharing u's color.
int deficiency(const Graph& g, const Coloring& c, int u);

// Checks the defining condition vertex by vertex. Length/range violations of
// the coloring itself are contract errors, distinct from "invalid coloring".
VerifyReport verify_coloring(const Instance& inst, const Coloring& c);

// If chi*delta >= n, any equitable partition works: vertex i takes color
// (i mod chi)+1. Returns the certificate, or nullopt when the bound does not
// apply (which says nothing about the answer).
std::optional<Coloring> trivial_shortcut(const Instance& inst);

// Subgraph induced by `keep`, vertices relabeled to 0..|keep|-1 following the
// ascending order of the kept ids.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// DIMACS .col I/O. Comment lines and duplicate edges are tolerated on input.
Graph parse_dimacs_graph(std::istream& in);
Graph parse_dimacs_graph(const std::string& text);
std::string to_dimacs(const Graph& g);

}  // namespace defco
