#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

struct EliminationOrdering {
    std::vector<int> order;  // candidate perfect elimination ordering
    bool perfect = false;
    // when not perfect: order[?] = v with two non-adjacent later neighbors a, b
    std::array<int, 3> violation{-1, -1, -1};
};

// Lexicographic BFS; the reversed visit order is a perfect elimination
// ordering exactly when the graph is chordal. The perfect flag is set by the
// later-neighborhood clique test, with a violating triple on failure.
EliminationOrdering peo_lexbfs(const Graph& g);

// Maximal cliques of a chordal graph read off the elimination ordering.
std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& g,
                                                      const EliminationOrdering& peo);

enum class BagKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceBag {
    BagKind kind = BagKind::kLeaf;
    int vertex = -1;            // introduce/forget
    std::vector<int> vertices;  // bag contents, sorted
    int left = -1, right = -1;  // children (left only, except join)
};

struct NiceTreeDecomposition {
    std::vector<NiceBag> bags;
    int root = -1;   // empty bag
    int width = -1;  // max bag size - 1
};

// Clique tree (maximum-weight spanning tree on bag intersections) expanded
// into leaf/introduce/forget/join bags, rooted at an empty bag. The width
// equals omega(G)-1.
NiceTreeDecomposition build_nice_decomposition(const Graph& g, const EliminationOrdering& peo);

// Independent validator: decomposition axioms (vertex and edge coverage,
// connected occurrence subtrees) plus nice-ness of every bag. Returns a
// description of the first failure, or nullopt if the decomposition is valid.
std::optional<std::string> validate_nice_decomposition(const Graph& g,
                                                       const NiceTreeDecomposition& ntd);

// Bottom-up DP over bag states (per-vertex color and partial deficiency).
// Join bags add the two partial deficiencies and subtract the same-colored
// in-bag neighbor count that both sides counted. Certificates come from
// back-pointers and are verified before returning.
std::optional<Coloring> treewidth_dp(const Graph& g, const NiceTreeDecomposition& ntd, int chi,
                                     int delta);

// Chordal solver: recognition (throws NotChordalError), equitable shortcut,
// reject when omega > chi*(delta+1), otherwise the treewidth DP.
std::optional<Coloring> solve_chordal(const Instance& inst);

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

// Degree-sequence split test with explicit partition extraction.
std::optional<SplitPartition> recognize_split(const Graph& g);

}  // namespace defco
