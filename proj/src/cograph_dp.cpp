#include "defco/cograph_dp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace defco {

std::vector<ClassType> type_grid(int delta) {
    std::vector<ClassType> grid;
    for (int s = 1; s <= delta + 1; ++s)
        for (int d = 0; d <= delta; ++d) grid.push_back({s, d});
    return grid;
}

std::optional<ClassType> merge_types(ClassType a, ClassType b, CotreeKind kind, int delta) {
    if (kind == CotreeKind::kLeaf) throw ContractError("merge_types: leaf kind");
    const int size = std::min(a.size + b.size, delta + 1);
    if (kind == CotreeKind::kUnion) return ClassType{size, std::max(a.max_def, b.max_def)};
    // join: every vertex of one class gains the full size of the other
    if (a.size + b.max_def > delta || b.size + a.max_def > delta) return std::nullopt;
    return ClassType{size, std::max(a.max_def + b.size, b.max_def + a.size)};
}

TypeMergeGraph build_type_merge_graph(const SignatureSmallDeficiency& s1,
                                      const SignatureSmallDeficiency& s2, CotreeKind kind,
                                      int delta) {
    TypeMergeGraph tmg;
    for (const auto& [type, count] : s1) {
        tmg.left_types.push_back(type);
        tmg.left_weight.push_back(count);
    }
    for (const auto& [type, count] : s2) {
        tmg.right_types.push_back(type);
        tmg.right_weight.push_back(count);
    }
    for (int i = 0; i < static_cast<int>(tmg.left_types.size()); ++i)
        for (int j = 0; j < static_cast<int>(tmg.right_types.size()); ++j)
            if (auto merged = merge_types(tmg.left_types[i], tmg.right_types[j], kind, delta))
                tmg.edges.push_back({i, j, *merged});
    return tmg;
}

namespace {

using MergeList = std::vector<std::tuple<ClassType, ClassType, int>>;

// Enumerates all weighted matchings of the merge graph by depth-first weight
// assignment over the edges. Remaining-capacity bounds prune branches that
// cannot reach `min_merges` total merges (the chi filter turned into a lower
// bound: every merge lowers the class count by one).
void enumerate_matchings(const TypeMergeGraph& tmg, int min_merges,
                         const std::function<void(const std::vector<int>&)>& sink) {
    std::vector<int> weight(tmg.edges.size(), 0);
    std::vector<int> left_rem = tmg.left_weight;
    std::vector<int> right_rem = tmg.right_weight;

    std::function<void(size_t, int)> dfs = [&](size_t e, int merges_so_far) {
        // optimistic bound on merges still obtainable from edges e..end
        int optimistic = merges_so_far;
        for (size_t i = e; i < tmg.edges.size(); ++i)
            optimistic += std::min(left_rem[tmg.edges[i].left], right_rem[tmg.edges[i].right]);
        if (optimistic < min_merges) return;

        if (e == tmg.edges.size()) {
            sink(weight);
            return;
        }
        const auto& edge = tmg.edges[e];
        const int cap = std::min(left_rem[edge.left], right_rem[edge.right]);
        for (int w = 0; w <= cap; ++w) {
            weight[e] = w;
            left_rem[edge.left] -= w;
            right_rem[edge.right] -= w;
            dfs(e + 1, merges_so_far + w);
            left_rem[edge.left] += w;
            right_rem[edge.right] += w;
        }
        weight[e] = 0;
    };
    dfs(0, 0);
}

int total_classes(const SignatureSmallDeficiency& s) {
    int total = 0;
    for (const auto& [type, count] : s) total += count;
    return total;
}

// Runs one (S1, S2) combination, reporting each surviving signature together
// with the merge list that produced it.
void combine_sd_pair(const SignatureSmallDeficiency& s1, const SignatureSmallDeficiency& s2,
                     CotreeKind kind, int chi, int delta,
                     const std::function<void(const SignatureSmallDeficiency&, const MergeList&)>&
                         sink) {
    const TypeMergeGraph tmg = build_type_merge_graph(s1, s2, kind, delta);
    const int min_merges = total_classes(s1) + total_classes(s2) - chi;

    enumerate_matchings(tmg, min_merges, [&](const std::vector<int>& weight) {
        SignatureSmallDeficiency out;
        std::vector<int> left_unmatched = tmg.left_weight;
        std::vector<int> right_unmatched = tmg.right_weight;
        MergeList merges;
        for (size_t e = 0; e < tmg.edges.size(); ++e) {
            if (weight[e] == 0) continue;
            const auto& edge = tmg.edges[e];
            left_unmatched[edge.left] -= weight[e];
            right_unmatched[edge.right] -= weight[e];
            out[edge.merged] += weight[e];
            merges.emplace_back(tmg.left_types[edge.left], tmg.right_types[edge.right],
                                weight[e]);
        }
        for (size_t i = 0; i < tmg.left_types.size(); ++i)
            if (left_unmatched[i] > 0) out[tmg.left_types[i]] += left_unmatched[i];
        for (size_t j = 0; j < tmg.right_types.size(); ++j)
            if (right_unmatched[j] > 0) out[tmg.right_types[j]] += right_unmatched[j];
        if (total_classes(out) > chi) return;
        sink(out, merges);
    });
}

}  // namespace

std::set<SignatureSmallDeficiency> combine_small_deficiency(
    const std::set<SignatureSmallDeficiency>& t1, const std::set<SignatureSmallDeficiency>& t2,
    CotreeKind kind, int chi, int delta) {
    std::set<SignatureSmallDeficiency> result;
    for (const auto& s1 : t1)
        for (const auto& s2 : t2)
            combine_sd_pair(s1, s2, kind, chi, delta,
                            [&](const SignatureSmallDeficiency& s, const MergeList&) {
                                result.insert(s);
                            });
    return result;
}

namespace {

// ---- small-deficiency DP over a binarized cotree ----

struct SdOrigin {
    SignatureSmallDeficiency s1, s2;  // child signatures (internal nodes)
    MergeList merges;
};

using SdTable = std::map<SignatureSmallDeficiency, SdOrigin>;

std::vector<SdTable> run_sd_dp(const Cotree& bin, int chi, int delta) {
    std::vector<SdTable> tables(bin.nodes.size());
    std::function<void(int)> visit = [&](int node) {
        const CotreeNode& nd = bin.nodes[node];
        if (nd.kind == CotreeKind::kLeaf) {
            SignatureSmallDeficiency leaf_sig{{ClassType{1, 0}, 1}};
            tables[node].emplace(std::move(leaf_sig), SdOrigin{});
            return;
        }
        visit(nd.children[0]);
        visit(nd.children[1]);
        const SdTable& t1 = tables[nd.children[0]];
        const SdTable& t2 = tables[nd.children[1]];
        for (const auto& [s1, o1] : t1)
            for (const auto& [s2, o2] : t2)
                combine_sd_pair(s1, s2, nd.kind, chi, delta,
                                [&](const SignatureSmallDeficiency& s, const MergeList& merges) {
                                    tables[node].emplace(s, SdOrigin{s1, s2, merges});
                                });
    };
    if (bin.root >= 0) visit(bin.root);
    return tables;
}

using TypedClasses = std::vector<std::pair<ClassType, std::vector<int>>>;

TypedClasses reconstruct_sd(const Cotree& bin, const std::vector<SdTable>& tables, int node,
                            const SignatureSmallDeficiency& sig, int delta) {
    const CotreeNode& nd = bin.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) return {{ClassType{1, 0}, {nd.vertex}}};

    const SdOrigin& origin = tables[node].at(sig);
    TypedClasses left = reconstruct_sd(bin, tables, nd.children[0], origin.s1, delta);
    TypedClasses right = reconstruct_sd(bin, tables, nd.children[1], origin.s2, delta);

    std::map<ClassType, std::vector<std::vector<int>>> left_pool, right_pool;
    for (auto& [type, verts] : left) left_pool[type].push_back(std::move(verts));
    for (auto& [type, verts] : right) right_pool[type].push_back(std::move(verts));

    TypedClasses result;
    for (const auto& [ta, tb, count] : origin.merges) {
        for (int k = 0; k < count; ++k) {
            auto& la = left_pool[ta];
            auto& rb = right_pool[tb];
            if (la.empty() || rb.empty())
                throw std::logic_error("cograph dp: merge list inconsistent with classes");
            std::vector<int> verts = std::move(la.back());
            la.pop_back();
            verts.insert(verts.end(), rb.back().begin(), rb.back().end());
            rb.pop_back();
            result.emplace_back(*merge_types(ta, tb, nd.kind, delta), std::move(verts));
        }
    }
    for (auto& [type, pool] : left_pool)
        for (auto& verts : pool) result.emplace_back(type, std::move(verts));
    for (auto& [type, pool] : right_pool)
        for (auto& verts : pool) result.emplace_back(type, std::move(verts));
    return result;
}

Coloring classes_to_coloring(const TypedClasses& classes, int n) {
    Coloring coloring(n, 0);
    int next_color = 0;
    for (const auto& [type, verts] : classes) {
        if (verts.empty()) continue;
        ++next_color;
        for (int v : verts) coloring[v] = next_color;
    }
    for (int v = 0; v < n; ++v)
        if (coloring[v] == 0) throw std::logic_error("cograph dp: vertex left uncolored");
    return coloring;
}

}  // namespace

std::set<SignatureSmallDeficiency> small_deficiency_root_table(const Cotree& t, int chi,
                                                               int delta) {
    std::set<SignatureSmallDeficiency> keys;
    if (t.root < 0) return keys;
    const Cotree bin = binarize(t);
    const auto tables = run_sd_dp(bin, chi, delta);
    for (const auto& [sig, origin] : tables[bin.root]) keys.insert(sig);
    return keys;
}

std::optional<Coloring> solve_small_deficiency(const Cotree& t, int chi, int delta) {
    if (chi < 1 || delta < 0) throw ContractError("solve_small_deficiency: bad parameters");
    if (t.root < 0) return Coloring{};
    const Cotree bin = binarize(t);
    const auto tables = run_sd_dp(bin, chi, delta);
    const SdTable& root = tables[bin.root];
    if (root.empty()) return std::nullopt;

    const auto classes = reconstruct_sd(bin, tables, bin.root, root.begin()->first, delta);
    const Graph g = eval_cotree(t);
    Coloring coloring = classes_to_coloring(classes, g.vertex_count());
    if (!verify_coloring(Instance(g, chi, delta), coloring).valid)
        throw std::logic_error("solve_small_deficiency: certificate failed verification");
    return coloring;
}

namespace {

// ---- few-colors DP ----

// One color's worth of the combine step; empty classes pass the other side
// through unchanged.
std::optional<ClassType> fc_combine_pair(ClassType a, ClassType b, CotreeKind kind, int delta) {
    if (kind == CotreeKind::kUnion)
        return ClassType{std::min(a.size + b.size, delta + 1), std::max(a.max_def, b.max_def)};
    if (a.size == 0) return b;
    if (b.size == 0) return a;
    const int d = std::max(a.size + b.max_def, b.size + a.max_def);
    if (d > delta) return std::nullopt;
    return ClassType{std::min(a.size + b.size, delta + 1), d};
}

SignatureFewColors canonical_fc(SignatureFewColors sig) {
    std::sort(sig.begin(), sig.end());
    return sig;
}

struct FcOrigin {
    SignatureFewColors s1, s2;
    std::vector<std::tuple<ClassType, ClassType, int>> cells;  // alignment counts
};

using FcTable = std::map<SignatureFewColors, FcOrigin>;

std::vector<std::pair<ClassType, int>> type_multiplicities(const SignatureFewColors& sig) {
    std::vector<std::pair<ClassType, int>> out;
    for (const ClassType& t : sig) {
        if (!out.empty() && out.back().first == t)
            ++out.back().second;
        else
            out.emplace_back(t, 1);
    }
    return out;
}

// Colors of the two children pair up bijectively; distinct alignments up to
// color exchange are exactly the contingency tables over the two type
// multisets. Cells whose pair cannot combine are forced to zero.
void combine_fc_pair(const SignatureFewColors& s1, const SignatureFewColors& s2,
                     CotreeKind kind, int delta,
                     const std::function<void(const SignatureFewColors&,
                                              const std::vector<std::tuple<ClassType, ClassType,
                                                                           int>>&)>& sink) {
    const auto rows = type_multiplicities(s1);
    const auto cols = type_multiplicities(s2);
    std::vector<int> col_rem(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) col_rem[j] = cols[j].second;

    std::vector<std::vector<int>> cell(rows.size(), std::vector<int>(cols.size(), 0));

    std::function<void(size_t, size_t, int)> dfs = [&](size_t r, size_t j, int row_rem) {
        if (r == rows.size()) {
            SignatureFewColors out;
            std::vector<std::tuple<ClassType, ClassType, int>> cells;
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t k = 0; k < cols.size(); ++k) {
                    if (cell[i][k] == 0) continue;
                    const auto combined =
                        fc_combine_pair(rows[i].first, cols[k].first, kind, delta);
                    for (int c = 0; c < cell[i][k]; ++c) out.push_back(*combined);
                    cells.emplace_back(rows[i].first, cols[k].first, cell[i][k]);
                }
            sink(canonical_fc(std::move(out)), cells);
            return;
        }
        if (j == cols.size()) {
            if (row_rem == 0) dfs(r + 1, 0, r + 1 < rows.size() ? rows[r + 1].second : 0);
            return;
        }
        const bool combinable =
            fc_combine_pair(rows[r].first, cols[j].first, kind, delta).has_value();
        const int cap = combinable ? std::min(row_rem, col_rem[j]) : 0;
        for (int w = 0; w <= cap; ++w) {
            cell[r][j] = w;
            col_rem[j] -= w;
            dfs(r, j + 1, row_rem - w);
            col_rem[j] += w;
        }
        cell[r][j] = 0;
    };
    if (rows.empty()) return;
    dfs(0, 0, rows[0].second);
}

std::vector<FcTable> run_fc_dp(const Cotree& bin, int chi, int delta) {
    std::vector<FcTable> tables(bin.nodes.size());
    std::function<void(int)> visit = [&](int node) {
        const CotreeNode& nd = bin.nodes[node];
        if (nd.kind == CotreeKind::kLeaf) {
            SignatureFewColors sig(chi, ClassType{0, 0});
            sig[chi - 1] = ClassType{1, 0};
            tables[node].emplace(canonical_fc(std::move(sig)), FcOrigin{});
            return;
        }
        visit(nd.children[0]);
        visit(nd.children[1]);
        for (const auto& [s1, o1] : tables[nd.children[0]])
            for (const auto& [s2, o2] : tables[nd.children[1]])
                combine_fc_pair(s1, s2, nd.kind, delta,
                                [&](const SignatureFewColors& s, const auto& cells) {
                                    tables[node].emplace(s, FcOrigin{s1, s2, cells});
                                });
    };
    if (bin.root >= 0) visit(bin.root);
    return tables;
}

TypedClasses reconstruct_fc(const Cotree& bin, const std::vector<FcTable>& tables, int node,
                            const SignatureFewColors& sig, int chi, int delta) {
    const CotreeNode& nd = bin.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) {
        TypedClasses classes(chi, {ClassType{0, 0}, {}});
        classes[chi - 1] = {ClassType{1, 0}, {nd.vertex}};
        return classes;
    }
    const FcOrigin& origin = tables[node].at(sig);
    TypedClasses left = reconstruct_fc(bin, tables, nd.children[0], origin.s1, chi, delta);
    TypedClasses right = reconstruct_fc(bin, tables, nd.children[1], origin.s2, chi, delta);

    std::map<ClassType, std::vector<std::vector<int>>> left_pool, right_pool;
    for (auto& [type, verts] : left) left_pool[type].push_back(std::move(verts));
    for (auto& [type, verts] : right) right_pool[type].push_back(std::move(verts));

    TypedClasses result;
    for (const auto& [ta, tb, count] : origin.cells) {
        for (int k = 0; k < count; ++k) {
            auto& la = left_pool[ta];
            auto& rb = right_pool[tb];
            if (la.empty() || rb.empty())
                throw std::logic_error("few-colors dp: alignment inconsistent with classes");
            std::vector<int> verts = std::move(la.back());
            la.pop_back();
            verts.insert(verts.end(), rb.back().begin(), rb.back().end());
            rb.pop_back();
            result.emplace_back(*fc_combine_pair(ta, tb, nd.kind, delta), std::move(verts));
        }
    }
    if (static_cast<int>(result.size()) != chi)
        throw std::logic_error("few-colors dp: alignment does not cover all colors");
    return result;
}

}  // namespace

std::optional<SignatureFewColors> combine_few_colors(const SignatureFewColors& s1,
                                                     const SignatureFewColors& s2,
                                                     CotreeKind kind, int delta) {
    if (s1.size() != s2.size()) throw ContractError("combine_few_colors: length mismatch");
    SignatureFewColors out(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) {
        const auto combined = fc_combine_pair(s1[i], s2[i], kind, delta);
        if (!combined) return std::nullopt;
        out[i] = *combined;
    }
    return out;
}

std::set<SignatureFewColors> few_colors_root_table(const Cotree& t, int chi, int delta) {
    std::set<SignatureFewColors> keys;
    if (t.root < 0) return keys;
    const Cotree bin = binarize(t);
    const auto tables = run_fc_dp(bin, chi, delta);
    for (const auto& [sig, origin] : tables[bin.root]) keys.insert(sig);
    return keys;
}

std::optional<Coloring> solve_few_colors(const Cotree& t, int chi, int delta) {
    if (chi < 1 || delta < 0) throw ContractError("solve_few_colors: bad parameters");
    if (t.root < 0) return Coloring{};
    // colors beyond the vertex count can never be used
    const int chi_eff = std::min(chi, t.leaf_count());
    const Cotree bin = binarize(t);
    const auto tables = run_fc_dp(bin, chi_eff, delta);
    const FcTable& root = tables[bin.root];
    if (root.empty()) return std::nullopt;

    const auto classes =
        reconstruct_fc(bin, tables, bin.root, root.begin()->first, chi_eff, delta);
    const Graph g = eval_cotree(t);
    Coloring coloring = classes_to_coloring(classes, g.vertex_count());
    if (!verify_coloring(Instance(g, chi, delta), coloring).valid)
        throw std::logic_error("solve_few_colors: certificate failed verification");
    return coloring;
}

SignatureSmallDeficiency signature_of_coloring(const Graph& g, const Coloring& c, int delta) {
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < g.vertex_count(); ++v) classes[c[v]].push_back(v);
    SignatureSmallDeficiency sig;
    for (const auto& [color, verts] : classes) {
        int max_def = 0;
        for (int v : verts) max_def = std::max(max_def, deficiency(g, c, v));
        ++sig[ClassType{std::min<int>(verts.size(), delta + 1), max_def}];
    }
    return sig;
}

SignatureFewColors fc_signature_of_coloring(const Graph& g, const Coloring& c, int chi,
                                            int delta) {
    SignatureFewColors sig(chi, ClassType{0, 0});
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < g.vertex_count(); ++v) classes[c[v]].push_back(v);
    for (const auto& [color, verts] : classes) {
        int max_def = 0;
        for (int v : verts) max_def = std::max(max_def, deficiency(g, c, v));
        sig[color - 1] = ClassType{std::min<int>(verts.size(), delta + 1), max_def};
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::optional<Coloring> solve_cograph(const Instance& inst) {
    CotreeBuild build = build_cotree(inst.graph);
    if (!build.cotree) throw NotCographError(build.p4);

    if (auto shortcut = trivial_shortcut(inst)) {
        if (!verify_coloring(inst, *shortcut).valid)
            throw std::logic_error("solve_cograph: shortcut certificate invalid");
        return shortcut;
    }

    if (omega_cotree(*build.cotree) >
        static_cast<long long>(inst.chi) * (inst.delta + 1))
        return std::nullopt;

    // delta <= n^(1/5) iff delta^5 <= n; ties go to the small-deficiency DP
    const long long n = inst.graph.vertex_count();
    const long long d = inst.delta;
    const bool small_deficiency = d <= 100 && d * d * d * d * d <= n;
    if (small_deficiency) return solve_small_deficiency(*build.cotree, inst.chi, inst.delta);
    return solve_few_colors(*build.cotree, inst.chi, inst.delta);
}

}  // namespace defco
