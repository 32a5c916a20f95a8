#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

enum class CotreeKind { kLeaf, kUnion, kJoin };

struct CotreeNode {
    CotreeKind kind = CotreeKind::kLeaf;
    int vertex = -1;            // leaves: original vertex id
    std::vector<int> children;  // internal nodes: >= 2 children
};

// Rooted tree whose leaves carry the graph's vertices and whose internal
// nodes alternate between disjoint-union and complete-join combinators.
struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;

    int add_leaf(int vertex);
    int add_internal(CotreeKind kind, std::vector<int> children);
    int leaf_count() const;
};

struct CotreeBuild {
    std::optional<Cotree> cotree;
    std::array<int, 4> p4{-1, -1, -1, -1};  // induced path witness, set iff !cotree
};

// Recursive decomposition: components under union, co-components under join.
// When neither applies the graph is not a cograph and an induced P4 is
// extracted as the witness.
CotreeBuild build_cotree(const Graph& g);

// Evaluates the cotree back to a graph. Leaf ids must be exactly 0..n-1.
Graph eval_cotree(const Cotree& t);

// Folds multiway internal nodes into left-associated binary nodes of the
// same kind; the evaluated graph is unchanged.
Cotree binarize(const Cotree& t);

// Exact clique number of the evaluated graph: max over union children, sum
// over join children, 1 at leaves.
int omega_cotree(const Cotree& t);

// S-expression format used by the tests, e.g. "(J (U v0 v1) (U v2 v3))".
Cotree parse_cotree(const std::string& text);
std::string to_sexpr(const Cotree& t);

}  // namespace defco
