#pragma once

#include <optional>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

// Underlying rooted forest of a trivially perfect graph: the graph is the
// comparability closure (every vertex adjacent to all its descendants).
// levels[0] holds the leaves; levels[i] the vertices that become leaves once
// the lower levels are stripped. Each level is an independent set.
struct RootedForest {
    std::vector<int> parent;  // -1 for roots
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
    std::vector<std::vector<int>> levels;
    std::vector<int> depth;  // distance from the component root

    int vertex_count() const { return static_cast<int>(parent.size()); }
    Graph closure() const;
    bool is_ancestor(int u, int v) const;  // proper ancestor
};

// Derives children/roots/levels/depth from a parent vector.
RootedForest make_forest(const std::vector<int>& parent);

struct RootedForestBuild {
    std::optional<RootedForest> forest;
    std::vector<int> witness_component;  // set iff !forest: no universal vertex here
};

// Per connected component, repeatedly roots a universal vertex (lowest id on
// ties) and recurses into the remainder's components.
RootedForestBuild build_rooted_forest(const Graph& g);

// Level-by-level greedy: leaves get color 1, every later vertex the lowest
// color held by at most delta of its descendants. Fails exactly when some
// vertex has delta+1 descendants of every color.
std::optional<Coloring> greedy_tp_color(const RootedForest& f, int chi, int delta);

// Exchange procedure turning any valid coloring into a sorted one (every
// descendant's color <= its ancestor's) while staying valid. Picks the
// conflicting pair with the ancestor closest to a root, breaking ties by the
// largest descendant color; either swaps the two vertices' colors (when some
// higher ancestor already holds the descendant's color) or exchanges the two
// colors inside the ancestor's subtree. When `trace` is given, the coloring
// after each exchange is appended to it.
Coloring sort_coloring(const RootedForest& f, const Coloring& c, int chi, int delta,
                       std::vector<Coloring>* trace = nullptr);

// Recognize + greedy; throws NotTriviallyPerfectError with the witness
// component otherwise.
std::optional<Coloring> solve_trivially_perfect(const Instance& inst);

}  // namespace defco
