#include "defco/chordal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace defco {

EliminationOrdering peo_lexbfs(const Graph& g) {
    const int n = g.vertex_count();
    EliminationOrdering result;

    // label-based LexBFS, O(n^2 log n); labels collect visit stamps
    std::vector<std::vector<int>> label(n);
    std::vector<int> visited(n, 0), visit_order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (pick == -1 || label[v] > label[pick]) pick = v;
        }
        visited[pick] = 1;
        visit_order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!visited[w]) label[w].push_back(n - step);
    }
    result.order.assign(visit_order.rbegin(), visit_order.rend());

    // perfect <=> each vertex's later neighbors form a clique; the standard
    // parent test finds a non-adjacent later pair when they do not
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[result.order[i]] = i;
    result.perfect = true;
    for (int i = 0; i < n && result.perfect; ++i) {
        const int v = result.order[i];
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > i && (parent == -1 || pos[w] < pos[parent])) parent = w;
        if (parent == -1) continue;
        for (int w : g.neighbors(v)) {
            if (pos[w] <= i || w == parent) continue;
            if (!g.adjacent(parent, w)) {
                result.perfect = false;
                result.violation = {v, parent, w};
                break;
            }
        }
    }
    return result;
}

std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& g,
                                                      const EliminationOrdering& peo) {
    if (!peo.perfect) throw ContractError("maximal_cliques_chordal: ordering is not perfect");
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo.order[i]] = i;

    std::vector<std::set<int>> candidates;
    for (int i = 0; i < n; ++i) {
        const int v = peo.order[i];
        std::set<int> clique{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) clique.insert(w);
        candidates.push_back(std::move(clique));
    }
    // drop candidates contained in another one
    std::vector<std::vector<int>> maximal;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < candidates.size() && !contained; ++j) {
            if (i == j || candidates[i].size() > candidates[j].size()) continue;
            if (i < j && candidates[i] == candidates[j]) continue;  // keep one copy of ties
            contained = std::includes(candidates[j].begin(), candidates[j].end(),
                                      candidates[i].begin(), candidates[i].end());
        }
        if (!contained) maximal.emplace_back(candidates[i].begin(), candidates[i].end());
    }
    return maximal;
}

namespace {

struct NiceBuilder {
    NiceTreeDecomposition ntd;

    int add(BagKind kind, int vertex, std::vector<int> vertices, int left, int right) {
        ntd.bags.push_back(NiceBag{kind, vertex, std::move(vertices), left, right});
        ntd.width = std::max(ntd.width,
                             static_cast<int>(ntd.bags.back().vertices.size()) - 1);
        return static_cast<int>(ntd.bags.size()) - 1;
    }

    // chain of introduces growing an empty leaf into `target`
    int grow_from_leaf(const std::vector<int>& target) {
        int node = add(BagKind::kLeaf, -1, {}, -1, -1);
        std::vector<int> bag;
        for (int v : target) {
            bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            node = add(BagKind::kIntroduce, v, bag, node, -1);
        }
        return node;
    }

    // forget everything in `from` but not in `to`, then introduce the rest
    int morph(int node, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> bag = from;
        for (int v : from) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            node = add(BagKind::kForget, v, bag, node, -1);
        }
        for (int v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            node = add(BagKind::kIntroduce, v, bag, node, -1);
        }
        return node;
    }
};

}  // namespace

NiceTreeDecomposition build_nice_decomposition(const Graph& g, const EliminationOrdering& peo) {
    if (!peo.perfect) throw ContractError("build_nice_decomposition: ordering is not perfect");

    NiceBuilder builder;
    auto cliques = maximal_cliques_chordal(g, peo);
    if (cliques.empty()) {
        builder.ntd.root = builder.add(BagKind::kLeaf, -1, {}, -1, -1);
        builder.ntd.width = std::max(builder.ntd.width, -1);
        return builder.ntd;
    }
    for (auto& c : cliques) std::sort(c.begin(), c.end());

    // maximum-weight spanning tree on |intersection| connects the cliques
    // into a clique tree; zero-weight edges bridge graph components
    const int k = static_cast<int>(cliques.size());
    std::vector<int> tree_parent(k, -1);
    std::vector<int> in_tree(k, 0), best_weight(k, -1), best_link(k, -1);
    in_tree[0] = 1;
    for (int j = 1; j < k; ++j) {
        std::vector<int> inter;
        std::set_intersection(cliques[0].begin(), cliques[0].end(), cliques[j].begin(),
                              cliques[j].end(), std::back_inserter(inter));
        best_weight[j] = static_cast<int>(inter.size());
        best_link[j] = 0;
    }
    for (int added = 1; added < k; ++added) {
        int pick = -1;
        for (int j = 0; j < k; ++j)
            if (!in_tree[j] && (pick == -1 || best_weight[j] > best_weight[pick])) pick = j;
        in_tree[pick] = 1;
        tree_parent[pick] = best_link[pick];
        for (int j = 0; j < k; ++j) {
            if (in_tree[j]) continue;
            std::vector<int> inter;
            std::set_intersection(cliques[pick].begin(), cliques[pick].end(),
                                  cliques[j].begin(), cliques[j].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) > best_weight[j]) {
                best_weight[j] = static_cast<int>(inter.size());
                best_link[j] = pick;
            }
        }
    }
    std::vector<std::vector<int>> tree_children(k);
    for (int j = 1; j < k; ++j) tree_children[tree_parent[j]].push_back(j);

    // expand recursively: each clique-tree node becomes a bag reached from
    // its children via forget/introduce chains, siblings joined pairwise
    std::function<int(int)> expand = [&](int cq) -> int {
        std::vector<int> tops;
        for (int child : tree_children[cq]) {
            int node = expand(child);
            tops.push_back(builder.morph(node, cliques[child], cliques[cq]));
        }
        if (tops.empty()) return builder.grow_from_leaf(cliques[cq]);
        int node = tops[0];
        for (size_t i = 1; i < tops.size(); ++i)
            node = builder.add(BagKind::kJoin, -1, cliques[cq], node, tops[i]);
        return node;
    };

    int top = expand(0);
    builder.ntd.root = builder.morph(top, cliques[0], {});
    return builder.ntd;
}

std::optional<std::string> validate_nice_decomposition(const Graph& g,
                                                       const NiceTreeDecomposition& ntd) {
    const int n = g.vertex_count();
    const int b = static_cast<int>(ntd.bags.size());
    if (ntd.root < 0 || ntd.root >= b) return "root out of range";

    std::vector<int> parent(b, -2);
    int max_bag = 0;
    for (int i = 0; i < b; ++i) {
        const NiceBag& bag = ntd.bags[i];
        if (!std::is_sorted(bag.vertices.begin(), bag.vertices.end()))
            return "bag " + std::to_string(i) + ": vertices not sorted";
        max_bag = std::max(max_bag, static_cast<int>(bag.vertices.size()));
        for (int child : {bag.left, bag.right}) {
            if (child == -1) continue;
            if (child < 0 || child >= b) return "bag " + std::to_string(i) + ": bad child";
            if (parent[child] != -2) return "bag " + std::to_string(child) + ": two parents";
            parent[child] = i;
        }
    }
    if (parent[ntd.root] != -2) return "root has a parent";
    parent[ntd.root] = -1;
    for (int i = 0; i < b; ++i)
        if (parent[i] == -2) return "bag " + std::to_string(i) + ": unreachable";
    if (max_bag - 1 != ntd.width) return "recorded width is wrong";
    if (!ntd.bags[ntd.root].vertices.empty()) return "root bag not empty";

    auto diff_one = [](const std::vector<int>& small, const std::vector<int>& big, int v) {
        if (big.size() != small.size() + 1) return false;
        if (!std::binary_search(big.begin(), big.end(), v)) return false;
        if (std::binary_search(small.begin(), small.end(), v)) return false;
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    for (int i = 0; i < b; ++i) {
        const NiceBag& bag = ntd.bags[i];
        switch (bag.kind) {
            case BagKind::kLeaf:
                if (bag.left != -1 || bag.right != -1 || !bag.vertices.empty())
                    return "bag " + std::to_string(i) + ": malformed leaf";
                break;
            case BagKind::kIntroduce:
                if (bag.left == -1 || bag.right != -1 ||
                    !diff_one(ntd.bags[bag.left].vertices, bag.vertices, bag.vertex))
                    return "bag " + std::to_string(i) + ": malformed introduce";
                break;
            case BagKind::kForget:
                if (bag.left == -1 || bag.right != -1 ||
                    !diff_one(bag.vertices, ntd.bags[bag.left].vertices, bag.vertex))
                    return "bag " + std::to_string(i) + ": malformed forget";
                break;
            case BagKind::kJoin:
                if (bag.left == -1 || bag.right == -1 ||
                    ntd.bags[bag.left].vertices != bag.vertices ||
                    ntd.bags[bag.right].vertices != bag.vertices)
                    return "bag " + std::to_string(i) + ": malformed join";
                break;
        }
    }

    // coverage and connectivity of occurrences
    std::vector<std::vector<int>> holding(n);
    for (int i = 0; i < b; ++i)
        for (int v : ntd.bags[i].vertices) holding[v].push_back(i);
    for (int v = 0; v < n; ++v) {
        if (holding[v].empty()) return "vertex " + std::to_string(v) + " in no bag";
        int top_count = 0;  // occurrence bags whose parent is not an occurrence
        std::set<int> occ(holding[v].begin(), holding[v].end());
        for (int i : holding[v])
            if (parent[i] == -1 || !occ.count(parent[i])) ++top_count;
        if (top_count != 1)
            return "vertex " + std::to_string(v) + ": occurrences not connected";
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            bool covered = false;
            for (int i = 0; i < b && !covered; ++i) {
                const auto& verts = ntd.bags[i].vertices;
                covered = std::binary_search(verts.begin(), verts.end(), u) &&
                          std::binary_search(verts.begin(), verts.end(), v);
            }
            if (!covered)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered";
        }
    return std::nullopt;
}

namespace {

// DP state: per bag vertex (aligned with the sorted bag) the pair
// (color, partial deficiency), packed as color*(delta+1)+def with colors
// counted from 0 here.
using BagState = std::vector<int>;

struct DpOrigin {
    BagState child1, child2;  // child2 used by join only
    int introduced_color = 0;  // introduce only, 1-based
};

using BagTable = std::map<BagState, DpOrigin>;

int state_color(int packed, int delta) { return packed / (delta + 1) + 1; }
int state_def(int packed, int delta) { return packed % (delta + 1); }
int pack_state(int color, int def, int delta) { return (color - 1) * (delta + 1) + def; }

std::vector<BagTable> run_tw_dp(const Graph& g, const NiceTreeDecomposition& ntd, int chi,
                                int delta) {
    std::vector<BagTable> tables(ntd.bags.size());

    std::function<void(int)> visit = [&](int node) {
        const NiceBag& bag = ntd.bags[node];
        if (bag.left != -1) visit(bag.left);
        if (bag.right != -1) visit(bag.right);
        BagTable& table = tables[node];

        switch (bag.kind) {
            case BagKind::kLeaf: {
                table.emplace(BagState{}, DpOrigin{});
                break;
            }
            case BagKind::kIntroduce: {
                const NiceBag& child = ntd.bags[bag.left];
                const int vpos = static_cast<int>(
                    std::lower_bound(bag.vertices.begin(), bag.vertices.end(), bag.vertex) -
                    bag.vertices.begin());
                // which child positions hold neighbors of the new vertex
                std::vector<int> nbr_pos;
                for (size_t i = 0; i < child.vertices.size(); ++i)
                    if (g.adjacent(bag.vertex, child.vertices[i]))
                        nbr_pos.push_back(static_cast<int>(i));

                for (const auto& [cstate, origin] : tables[bag.left]) {
                    for (int color = 1; color <= chi; ++color) {
                        int own_def = 0;
                        bool feasible = true;
                        for (int i : nbr_pos) {
                            if (state_color(cstate[i], delta) != color) continue;
                            ++own_def;
                            if (own_def > delta ||
                                state_def(cstate[i], delta) == delta) {
                                feasible = false;
                                break;
                            }
                        }
                        if (!feasible) continue;
                        BagState next = cstate;
                        for (int i : nbr_pos)
                            if (state_color(cstate[i], delta) == color) ++next[i];
                        next.insert(next.begin() + vpos, pack_state(color, own_def, delta));
                        table.emplace(std::move(next), DpOrigin{cstate, {}, color});
                    }
                }
                break;
            }
            case BagKind::kForget: {
                const NiceBag& child = ntd.bags[bag.left];
                const int vpos = static_cast<int>(
                    std::lower_bound(child.vertices.begin(), child.vertices.end(),
                                     bag.vertex) -
                    child.vertices.begin());
                // the forgotten vertex's deficiency is final here; the
                // introduce steps never let it pass delta, so every child
                // state qualifies
                for (const auto& [cstate, origin] : tables[bag.left]) {
                    BagState next = cstate;
                    next.erase(next.begin() + vpos);
                    table.emplace(std::move(next), DpOrigin{cstate, {}, 0});
                }
                break;
            }
            case BagKind::kJoin: {
                const int bag_size = static_cast<int>(bag.vertices.size());
                // same-colored in-bag neighbor counts are in both children's
                // deficiencies; subtract them once
                std::vector<std::vector<int>> bag_nbrs(bag_size);
                for (int i = 0; i < bag_size; ++i)
                    for (int j = 0; j < bag_size; ++j)
                        if (i != j && g.adjacent(bag.vertices[i], bag.vertices[j]))
                            bag_nbrs[i].push_back(j);

                std::map<std::vector<int>, std::vector<const BagState*>> right_by_colors;
                for (const auto& [state, origin] : tables[bag.right]) {
                    std::vector<int> colors(bag_size);
                    for (int i = 0; i < bag_size; ++i) colors[i] = state_color(state[i], delta);
                    right_by_colors[colors].push_back(&state);
                }
                for (const auto& [lstate, origin] : tables[bag.left]) {
                    std::vector<int> colors(bag_size);
                    for (int i = 0; i < bag_size; ++i)
                        colors[i] = state_color(lstate[i], delta);
                    auto it = right_by_colors.find(colors);
                    if (it == right_by_colors.end()) continue;

                    std::vector<int> shared(bag_size, 0);
                    for (int i = 0; i < bag_size; ++i)
                        for (int j : bag_nbrs[i])
                            if (colors[j] == colors[i]) ++shared[i];

                    for (const BagState* rstate : it->second) {
                        BagState next(bag_size);
                        bool feasible = true;
                        for (int i = 0; i < bag_size; ++i) {
                            const int def = state_def(lstate[i], delta) +
                                            state_def((*rstate)[i], delta) - shared[i];
                            if (def > delta) {
                                feasible = false;
                                break;
                            }
                            next[i] = pack_state(colors[i], def, delta);
                        }
                        if (feasible)
                            table.emplace(std::move(next), DpOrigin{lstate, *rstate, 0});
                    }
                }
                break;
            }
        }
    };
    visit(ntd.root);
    return tables;
}

void reconstruct_tw(const NiceTreeDecomposition& ntd, const std::vector<BagTable>& tables,
                    int node, const BagState& state, Coloring& coloring) {
    const NiceBag& bag = ntd.bags[node];
    if (bag.kind == BagKind::kLeaf) return;
    const DpOrigin& origin = tables[node].at(state);
    if (bag.kind == BagKind::kIntroduce) {
        coloring[bag.vertex] = origin.introduced_color;
        reconstruct_tw(ntd, tables, bag.left, origin.child1, coloring);
    } else if (bag.kind == BagKind::kForget) {
        reconstruct_tw(ntd, tables, bag.left, origin.child1, coloring);
    } else {
        reconstruct_tw(ntd, tables, bag.left, origin.child1, coloring);
        reconstruct_tw(ntd, tables, bag.right, origin.child2, coloring);
    }
}

}  // namespace

std::optional<Coloring> treewidth_dp(const Graph& g, const NiceTreeDecomposition& ntd, int chi,
                                     int delta) {
    if (chi < 1 || delta < 0) throw ContractError("treewidth_dp: bad parameters");
    if (auto issue = validate_nice_decomposition(g, ntd))
        throw ContractError("treewidth_dp: invalid decomposition: " + *issue);

    const auto tables = run_tw_dp(g, ntd, chi, delta);
    const BagTable& root = tables[ntd.root];
    if (root.empty()) return std::nullopt;

    Coloring coloring(g.vertex_count(), 0);
    reconstruct_tw(ntd, tables, ntd.root, root.begin()->first, coloring);
    if (!verify_coloring(Instance(g, chi, delta), coloring).valid)
        throw std::logic_error("treewidth_dp: certificate failed verification");
    return coloring;
}

std::optional<Coloring> solve_chordal(const Instance& inst) {
    const EliminationOrdering peo = peo_lexbfs(inst.graph);
    if (!peo.perfect) throw NotChordalError(peo.violation);

    if (auto shortcut = trivial_shortcut(inst)) {
        if (!verify_coloring(inst, *shortcut).valid)
            throw std::logic_error("solve_chordal: shortcut certificate invalid");
        return shortcut;
    }

    int omega = 0;
    const auto cliques = maximal_cliques_chordal(inst.graph, peo);
    for (const auto& clique : cliques)
        omega = std::max(omega, static_cast<int>(clique.size()));
    if (omega > static_cast<long long>(inst.chi) * (inst.delta + 1)) return std::nullopt;

    const NiceTreeDecomposition ntd = build_nice_decomposition(inst.graph, peo);
    return treewidth_dp(inst.graph, ntd, inst.chi, inst.delta);
}

std::optional<SplitPartition> recognize_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    // largest k with d_k >= k-1, then the degree-sum identity decides
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) k = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < k ? head : tail) += g.degree(order[i]);
    if (head != static_cast<long long>(k) * (k - 1) + tail) return std::nullopt;

    SplitPartition partition;
    partition.clique.assign(order.begin(), order.begin() + k);
    partition.independent.assign(order.begin() + k, order.end());
    std::sort(partition.clique.begin(), partition.clique.end());
    std::sort(partition.independent.begin(), partition.independent.end());

    for (size_t i = 0; i < partition.clique.size(); ++i)
        for (size_t j = i + 1; j < partition.clique.size(); ++j)
            if (!g.adjacent(partition.clique[i], partition.clique[j]))
                throw std::logic_error("recognize_split: extracted clique is not a clique");
    for (size_t i = 0; i < partition.independent.size(); ++i)
        for (size_t j = i + 1; j < partition.independent.size(); ++j)
            if (g.adjacent(partition.independent[i], partition.independent[j]))
                throw std::logic_error("recognize_split: extracted set is not independent");
    return partition;
}

}  // namespace defco
