#include "defco/trivially_perfect.hpp"

#include <algorithm>
#include <functional>

namespace defco {

Graph RootedForest::closure() const {
    Graph g(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (int a = parent[v]; a != -1; a = parent[a]) g.add_edge(v, a);
    return g;
}

bool RootedForest::is_ancestor(int u, int v) const {
    for (int a = parent[v]; a != -1; a = parent[a])
        if (a == u) return true;
    return false;
}

RootedForest make_forest(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    RootedForest f;
    f.parent = parent;
    f.children.resize(n);
    f.depth.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (parent[v] == -1)
            f.roots.push_back(v);
        else if (parent[v] < 0 || parent[v] >= n)
            throw ContractError("make_forest: parent out of range");
        else
            f.children[parent[v]].push_back(v);
    }

    std::vector<int> height(n, 0);
    std::function<void(int, int)> visit = [&](int u, int d) {
        if (f.depth[u] != -1) throw ContractError("make_forest: parent links contain a cycle");
        f.depth[u] = d;
        int h = 1;
        for (int c : f.children[u]) {
            visit(c, d + 1);
            h = std::max(h, height[c] + 1);
        }
        height[u] = h;
    };
    for (int r : f.roots) visit(r, 0);
    for (int v = 0; v < n; ++v)
        if (f.depth[v] == -1) throw ContractError("make_forest: parent links contain a cycle");

    int max_height = 0;
    for (int v = 0; v < n; ++v) max_height = std::max(max_height, height[v]);
    f.levels.resize(max_height);
    for (int v = 0; v < n; ++v) f.levels[height[v] - 1].push_back(v);
    return f;
}

namespace {

std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> in_set(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : verts) in_set[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int start : verts) {
        if (seen[start]) continue;
        seen[start] = 1;
        std::vector<int> stack{start}, comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Universal within the component = adjacent to every other member.
int find_universal(const Graph& g, const std::vector<int>& comp) {
    for (int u : comp) {
        bool universal = true;
        for (int v : comp)
            if (v != u && !g.adjacent(u, v)) {
                universal = false;
                break;
            }
        if (universal) return u;
    }
    return -1;
}

bool root_components(const Graph& g, const std::vector<int>& verts, int parent_of_roots,
                     std::vector<int>& parent, std::vector<int>& witness) {
    for (const auto& comp : components_within(g, verts)) {
        const int u = find_universal(g, comp);
        if (u == -1) {
            witness = comp;
            return false;
        }
        parent[u] = parent_of_roots;
        std::vector<int> rest;
        for (int v : comp)
            if (v != u) rest.push_back(v);
        if (!rest.empty() && !root_components(g, rest, u, parent, witness)) return false;
    }
    return true;
}

}  // namespace

RootedForestBuild build_rooted_forest(const Graph& g) {
    RootedForestBuild result;
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;

    std::vector<int> witness;
    if (!root_components(g, all, -1, parent, witness)) {
        result.witness_component = std::move(witness);
        return result;
    }
    result.forest = make_forest(parent);
    return result;
}

std::optional<Coloring> greedy_tp_color(const RootedForest& f, int chi, int delta) {
    if (chi < 1 || delta < 0) throw ContractError("greedy_tp_color: bad parameters");
    const int n = f.vertex_count();
    if (n == 0) return Coloring{};
    const int chi_eff = std::min(chi, n);  // colors beyond n are never reachable

    Coloring color(n, 0);
    // desc_count[u][j] = min(delta+1, #descendants of u colored j+1); counters
    // are merged upward level by level, so children are always ready.
    std::vector<std::vector<int>> desc_count(n);
    for (const auto& level : f.levels) {
        for (int u : level) {
            std::vector<int> counts(chi_eff, 0);
            for (int c : f.children[u]) {
                for (int j = 0; j < chi_eff; ++j)
                    counts[j] = std::min(delta + 1, counts[j] + desc_count[c][j]);
                counts[color[c] - 1] = std::min(delta + 1, counts[color[c] - 1] + 1);
                desc_count[c].clear();
            }
            int chosen = 0;
            for (int j = 1; j <= chi_eff; ++j)
                if (counts[j - 1] <= delta) {
                    chosen = j;
                    break;
                }
            if (chosen == 0) return std::nullopt;
            color[u] = chosen;
            desc_count[u] = std::move(counts);
        }
    }

    if (!verify_coloring(Instance(f.closure(), chi, delta), color).valid)
        throw std::logic_error("greedy_tp_color: produced an invalid coloring");
    return color;
}

Coloring sort_coloring(const RootedForest& f, const Coloring& input, int chi, int delta,
                       std::vector<Coloring>* trace) {
    const int n = f.vertex_count();
    const Graph g = f.closure();
    const Instance inst(g, chi, delta);
    if (!verify_coloring(inst, input).valid)
        throw ContractError("sort_coloring: input coloring is not valid");

    Coloring c = input;
    for (int step = 0; step <= n; ++step) {
        // conflicting pair: ancestor u, descendant v, c[u] < c[v]; choose u
        // closest to a root, then maximum c[v], then lowest ids
        int best_u = -1, best_v = -1;
        for (int v = 0; v < n; ++v) {
            for (int u = f.parent[v]; u != -1; u = f.parent[u]) {
                if (c[u] >= c[v]) continue;
                if (best_u == -1 || f.depth[u] < f.depth[best_u] ||
                    (f.depth[u] == f.depth[best_u] &&
                     (c[v] > c[best_v] || (c[v] == c[best_v] &&
                                           (u < best_u || (u == best_u && v < best_v))))))
                {
                    best_u = u;
                    best_v = v;
                }
            }
        }
        if (best_u == -1) {
            if (!verify_coloring(inst, c).valid)
                throw std::logic_error("sort_coloring: exchange broke validity");
            return c;
        }

        bool ancestor_has_vcolor = false;
        for (int x = f.parent[best_u]; x != -1; x = f.parent[x])
            if (c[x] == c[best_v]) {
                ancestor_has_vcolor = true;
                break;
            }

        if (ancestor_has_vcolor) {
            std::swap(c[best_u], c[best_v]);
        } else {
            // no ancestor of u holds either color: exchange them in u's subtree
            const int cu = c[best_u], cv = c[best_v];
            std::function<void(int)> exchange = [&](int w) {
                if (c[w] == cu)
                    c[w] = cv;
                else if (c[w] == cv)
                    c[w] = cu;
                for (int child : f.children[w]) exchange(child);
            };
            exchange(best_u);
        }
        if (trace) trace->push_back(c);
    }
    throw std::logic_error("sort_coloring: did not converge within n exchanges");
}

std::optional<Coloring> solve_trivially_perfect(const Instance& inst) {
    RootedForestBuild build = build_rooted_forest(inst.graph);
    if (!build.forest) throw NotTriviallyPerfectError(build.witness_component);
    auto coloring = greedy_tp_color(*build.forest, inst.chi, inst.delta);
    if (coloring && !verify_coloring(inst, *coloring).valid)
        throw std::logic_error("solve_trivially_perfect: certificate failed verification");
    return coloring;
}

}  // namespace defco
