#include "defco/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace defco {

namespace {

int random_cotree_rec(const std::vector<int>& verts, Cotree& out, Rng& rng) {
    if (verts.size() == 1) return out.add_leaf(verts[0]);

    // shuffle and cut into 2..4 non-empty blocks
    std::vector<int> shuffled = verts;
    for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
        std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
    const int max_blocks = std::min<int>(4, static_cast<int>(shuffled.size()));
    const int blocks = 2 + (max_blocks > 2 ? rng.below(max_blocks - 1) : 0);

    std::set<int> cuts{0, static_cast<int>(shuffled.size())};
    while (static_cast<int>(cuts.size()) < blocks + 1)
        cuts.insert(1 + rng.below(static_cast<int>(shuffled.size()) - 1));

    std::vector<int> children;
    auto it = cuts.begin();
    for (int from = *it++; it != cuts.end(); from = *it++) {
        std::vector<int> block(shuffled.begin() + from, shuffled.begin() + *it);
        children.push_back(random_cotree_rec(block, out, rng));
    }
    return out.add_internal(rng.coin() ? CotreeKind::kJoin : CotreeKind::kUnion,
                            std::move(children));
}

}  // namespace

Cotree random_cotree(int n, Rng& rng) {
    if (n < 1) throw ContractError("random_cotree: n must be >= 1");
    Cotree out;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    out.root = random_cotree_rec(verts, out, rng);
    return out;
}

Graph random_cograph(int n, Rng& rng) {
    Cotree t = random_cotree(n, rng);
    return eval_cotree(t);
}

RootedForest random_rooted_forest(int n, Rng& rng) {
    if (n < 1) throw ContractError("random_rooted_forest: n must be >= 1");
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v)
        if (!rng.percent(20)) parent[v] = rng.below(v);
    return make_forest(parent);
}

Graph random_trivially_perfect(int n, Rng& rng) {
    return random_rooted_forest(n, rng).closure();
}

Graph random_chordal(int n, int max_k, Rng& rng) {
    if (n < 1) throw ContractError("random_chordal: n must be >= 1");
    if (max_k < 1) throw ContractError("random_chordal: max_k must be >= 1");
    const int k = 1 + rng.below(max_k);
    const int big_n = n + rng.below(3);

    // grow a k-tree, tracking its k-cliques as attachment points
    Graph kt(big_n);
    std::vector<std::vector<int>> attach;
    const int seed_size = std::min(big_n, k + 1);
    for (int a = 0; a < seed_size; ++a)
        for (int b = a + 1; b < seed_size; ++b) kt.add_edge(a, b);
    if (seed_size >= k) {
        std::vector<int> base(seed_size);
        std::iota(base.begin(), base.end(), 0);
        if (seed_size == k) {
            attach.push_back(base);
        } else {
            for (int skip = 0; skip < seed_size; ++skip) {
                std::vector<int> clique;
                for (int v : base)
                    if (v != skip) clique.push_back(v);
                attach.push_back(clique);
            }
        }
    }
    for (int v = seed_size; v < big_n; ++v) {
        const auto& base = attach[rng.below(static_cast<int>(attach.size()))];
        for (int u : base) kt.add_edge(v, u);
        for (size_t skip = 0; skip < base.size(); ++skip) {
            std::vector<int> clique;
            for (size_t i = 0; i < base.size(); ++i)
                if (i != skip) clique.push_back(base[i]);
            clique.push_back(v);
            attach.push_back(std::move(clique));
        }
        attach.push_back(base);  // the base stays available too
    }

    // induced subgraphs of chordal graphs stay chordal
    std::vector<int> keep(big_n);
    std::iota(keep.begin(), keep.end(), 0);
    for (int i = big_n - 1; i > 0; --i) std::swap(keep[i], keep[rng.below(i + 1)]);
    keep.resize(n);
    return induced_subgraph(kt, keep);
}

Graph random_split(int n, Rng& rng) {
    if (n < 1) throw ContractError("random_split: n must be >= 1");
    const int clique_size = rng.below(n + 1);
    Graph g(n);
    for (int a = 0; a < clique_size; ++a)
        for (int b = a + 1; b < clique_size; ++b) g.add_edge(a, b);
    for (int a = 0; a < clique_size; ++a)
        for (int s = clique_size; s < n; ++s)
            if (rng.coin()) g.add_edge(a, s);
    return g;
}

Graph random_graph(int n, int edge_percent, Rng& rng) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.percent(edge_percent)) g.add_edge(a, b);
    return g;
}

}  // namespace defco
