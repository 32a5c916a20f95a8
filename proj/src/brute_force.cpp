#include "defco/brute_force.hpp"

#include <algorithm>
#include <numeric>

namespace defco {

namespace {

struct Searcher {
    const Graph& g;
    const int chi;
    const int delta;
    const long long budget;

    std::vector<int> order;              // search order, highest degree first
    std::vector<std::vector<int>> nbrs;  // neighbor lists by original id
    std::vector<int> color;              // 0 = unassigned
    std::vector<int> def;                // same-colored assigned neighbors
    long long nodes = 0;
    bool exceeded = false;

    Searcher(const Instance& inst, long long node_budget)
        : g(inst.graph), chi(inst.chi), delta(inst.delta), budget(node_budget) {
        const int n = g.vertex_count();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        nbrs.resize(n);
        for (int u = 0; u < n; ++u) nbrs[u].assign(g.neighbors(u).begin(), g.neighbors(u).end());
        color.assign(n, 0);
        def.assign(n, 0);
    }

    bool assign(int idx, int max_used) {
        if (idx == static_cast<int>(order.size())) return true;
        const int u = order[idx];
        const int top = std::min(chi, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            int same = 0;
            bool feasible = true;
            for (int v : nbrs[u]) {
                if (color[v] != c) continue;
                if (++same > delta || def[v] == delta) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;

            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            color[u] = c;
            def[u] = same;
            for (int v : nbrs[u])
                if (color[v] == c) ++def[v];

            if (assign(idx + 1, std::max(max_used, c))) return true;
            if (exceeded) return false;

            for (int v : nbrs[u])
                if (color[v] == c) --def[v];
            color[u] = 0;
            def[u] = 0;
        }
        return false;
    }
};

}  // namespace

SearchResult brute_force_decide(const Instance& inst, long long node_budget) {
    Searcher searcher(inst, node_budget);
    SearchResult result;
    if (searcher.assign(0, 0)) {
        result.status = SearchStatus::kYes;
        result.coloring = searcher.color;
        if (!verify_coloring(inst, *result.coloring).valid)
            throw std::logic_error("brute_force_decide: produced an invalid coloring");
    } else if (searcher.exceeded) {
        result.status = SearchStatus::kBudgetExceeded;
    } else {
        result.status = SearchStatus::kNo;
    }
    result.nodes = searcher.nodes;
    return result;
}

}  // namespace defco
