#pragma once

#include <cstdint>
#include <random>

#include "defco/cotree.hpp"
#include "defco/graph.hpp"
#include "defco/trivially_perfect.hpp"

namespace defco {

// Thin wrapper so every draw goes through our own bounded sampling; the
// mt19937_64 stream is fixed by the standard, which keeps generated corpora
// reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    int below(int n) {  // uniform-ish in 0..n-1
        if (n <= 0) throw ContractError("rng: empty range");
        return static_cast<int>(engine_() % static_cast<uint64_t>(n));
    }
    bool coin() { return below(2) == 1; }
    bool percent(int p) { return below(100) < p; }

private:
    std::mt19937_64 engine_;
};

// Random cotree on vertices 0..n-1 (random arity, random node kinds).
Cotree random_cotree(int n, Rng& rng);
Graph random_cograph(int n, Rng& rng);

// Random rooted forest / its comparability closure.
RootedForest random_rooted_forest(int n, Rng& rng);
Graph random_trivially_perfect(int n, Rng& rng);

// Random induced subgraph of a random k-tree (k drawn from 1..max_k); always
// chordal, treewidth at most k.
Graph random_chordal(int n, int max_k, Rng& rng);

// Random split graph: clique prefix, independent rest, cross edges by coin.
Graph random_split(int n, Rng& rng);

// Erdos-Renyi-style graph with the given edge percentage.
Graph random_graph(int n, int edge_percent, Rng& rng);

}  // namespace defco
