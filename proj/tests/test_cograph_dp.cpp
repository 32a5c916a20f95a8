#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "defco/brute_force.hpp"
#include "defco/cograph_dp.hpp"
#include "defco/generate.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace defco;
using namespace defco::testing;

using Sig = SignatureSmallDeficiency;

TEST_CASE("type grid size") {
    for (int delta = 0; delta <= 3; ++delta)
        CHECK(static_cast<int>(type_grid(delta).size()) == (delta + 1) * (delta + 1));
}

TEST_CASE("merge_types") {
    // join of two singletons at delta=1: sizes add, each side gains the other
    CHECK(merge_types({1, 0}, {1, 0}, CotreeKind::kJoin, 1) == ClassType{2, 1});
    // join rejected: 2+1 > 1
    CHECK(!merge_types({2, 0}, {1, 1}, CotreeKind::kJoin, 1));
    // union truncates the size and keeps the max deficiency
    CHECK(merge_types({2, 1}, {2, 0}, CotreeKind::kUnion, 1) == ClassType{2, 1});
    // truncated classes never pass a join
    CHECK(!merge_types({2, 0}, {2, 0}, CotreeKind::kJoin, 1));
}

TEST_CASE("combine_small_deficiency hand enumerations") {
    const Sig singleton{{ClassType{1, 0}, 1}};
    const std::set<Sig> t{singleton};

    const auto join = combine_small_deficiency(t, t, CotreeKind::kJoin, 2, 1);
    const std::set<Sig> join_expected{Sig{{ClassType{1, 0}, 2}}, Sig{{ClassType{2, 1}, 1}}};
    CHECK(join == join_expected);

    const auto uni = combine_small_deficiency(t, t, CotreeKind::kUnion, 1, 1);
    const std::set<Sig> uni_expected{Sig{{ClassType{2, 0}, 1}}};
    CHECK(uni == uni_expected);

    CHECK(combine_small_deficiency({}, t, CotreeKind::kJoin, 2, 1).empty());
}

TEST_CASE("type merge graph capacities") {
    const Sig s1{{ClassType{1, 0}, 2}, {ClassType{2, 1}, 1}};
    const Sig s2{{ClassType{1, 0}, 1}};
    const auto tmg = build_type_merge_graph(s1, s2, CotreeKind::kJoin, 2);
    CHECK(tmg.left_types.size() == 2);
    CHECK(tmg.right_types.size() == 1);
    // (1,0)+(1,0) -> (2,1); (2,1)+(1,0): 2+0<=2 and 1+1<=2 -> (3,2)
    REQUIRE(tmg.edges.size() == 2);
    CHECK(tmg.edges[0].merged == ClassType{2, 1});
    CHECK(tmg.edges[1].merged == ClassType{3, 2});
}

TEST_CASE("solve_small_deficiency spec instances") {
    const auto c4 = build_cotree(make_cycle(4));
    REQUIRE(c4.cotree);

    const auto all_one = solve_small_deficiency(*c4.cotree, 1, 2);
    REQUIRE(all_one);
    CHECK(verify_coloring(Instance(make_cycle(4), 1, 2), *all_one).valid);

    CHECK(!solve_small_deficiency(*c4.cotree, 1, 1));

    const auto k4 = build_cotree(make_complete(4));
    REQUIRE(k4.cotree);
    const auto two_pairs = solve_small_deficiency(*k4.cotree, 2, 1);
    REQUIRE(two_pairs);
    CHECK(verify_coloring(Instance(make_complete(4), 2, 1), *two_pairs).valid);
}

TEST_CASE("combine_few_colors pointwise") {
    using FC = SignatureFewColors;
    CHECK(combine_few_colors(FC{{1, 0}}, FC{{1, 0}}, CotreeKind::kJoin, 1) == FC{{2, 1}});
    // max{2+0, 1+1} = 2 > 1
    CHECK(!combine_few_colors(FC{{2, 1}}, FC{{1, 0}}, CotreeKind::kJoin, 1));
    CHECK(combine_few_colors(FC{{1, 0}, {0, 0}}, FC{{0, 0}, {1, 0}}, CotreeKind::kUnion, 0) ==
          FC{{1, 0}, {1, 0}});
    // empty classes join anything unchanged
    CHECK(combine_few_colors(FC{{2, 1}, {0, 0}}, FC{{0, 0}, {1, 0}}, CotreeKind::kJoin, 1) ==
          FC{{2, 1}, {1, 0}});
    CHECK_THROWS_AS(combine_few_colors(FC{{1, 0}}, FC{{1, 0}, {0, 0}}, CotreeKind::kJoin, 1),
                    ContractError);
}

TEST_CASE("solve_few_colors spec instances") {
    const Cotree k2 = parse_cotree("(J v0 v1)");
    const auto proper = solve_few_colors(k2, 2, 0);
    REQUIRE(proper);
    CHECK(verify_coloring(Instance(make_complete(2), 2, 0), *proper).valid);
    CHECK(!solve_few_colors(k2, 1, 0));

    const auto c4 = build_cotree(make_cycle(4));
    const auto c4_proper = solve_few_colors(*c4.cotree, 2, 0);
    REQUIRE(c4_proper);
    CHECK(verify_coloring(Instance(make_cycle(4), 2, 0), *c4_proper).valid);
}

TEST_CASE("solve_cograph dispatch") {
    Rng rng(17);
    const Graph g6 = random_cograph(6, rng);
    const auto shortcut = solve_cograph(Instance(g6, 3, 2));  // 3*2 >= 6
    REQUIRE(shortcut);
    CHECK(verify_coloring(Instance(g6, 3, 2), *shortcut).valid);

    const auto c4 = solve_cograph(Instance(make_cycle(4), 2, 1));
    REQUIRE(c4);
    CHECK(verify_coloring(Instance(make_cycle(4), 2, 1), *c4).valid);

    // omega = 8 > 2*3 rejects without running a DP
    CHECK(!solve_cograph(Instance(make_complete(8), 2, 2)));

    CHECK_THROWS_AS(solve_cograph(Instance(make_path(4), 2, 1)), NotCographError);
}

TEST_CASE("oracle equivalence on exhaustive small graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) {
            const auto built = build_cotree(g);
            if (!built.cotree) continue;
            for (int chi = 1; chi <= 2; ++chi)
                for (int delta = 0; delta <= 2; ++delta) {
                    const Instance inst(g, chi, delta);
                    const bool expected = naive_decide(inst).has_value();
                    const auto small = solve_small_deficiency(*built.cotree, chi, delta);
                    const auto few = solve_few_colors(*built.cotree, chi, delta);
                    CHECK(small.has_value() == expected);
                    CHECK(few.has_value() == expected);
                    if (small) CHECK(verify_coloring(inst, *small).valid);
                    if (few) CHECK(verify_coloring(inst, *few).valid);
                }
        }
}

TEST_CASE("oracle equivalence on random cotrees") {
    Rng rng(29);
    for (int round = 0; round < 60; ++round) {
        const Cotree t = random_cotree(1 + rng.below(6), rng);
        const Graph g = eval_cotree(t);
        const int chi = 1 + rng.below(3), delta = rng.below(3);
        const Instance inst(g, chi, delta);
        const bool expected = brute_force_decide(inst).status == SearchStatus::kYes;
        CHECK(solve_small_deficiency(t, chi, delta).has_value() == expected);
        CHECK(solve_few_colors(t, chi, delta).has_value() == expected);
        const auto dispatched = solve_cograph(inst);
        CHECK(dispatched.has_value() == expected);
        if (dispatched) CHECK(verify_coloring(inst, *dispatched).valid);
    }
}

TEST_CASE("signature soundness: oracle colorings appear in the root tables") {
    Rng rng(41);
    int seen = 0;
    for (int round = 0; round < 50; ++round) {
        const Cotree t = random_cotree(1 + rng.below(5), rng);
        const Graph g = eval_cotree(t);
        const int chi = 1 + rng.below(3), delta = rng.below(3);
        const auto oracle = naive_decide(Instance(g, chi, delta));
        if (!oracle) continue;
        ++seen;
        CHECK(small_deficiency_root_table(t, chi, delta)
                  .count(signature_of_coloring(g, *oracle, delta)) == 1);
        CHECK(few_colors_root_table(t, chi, delta)
                  .count(fc_signature_of_coloring(g, *oracle, chi, delta)) == 1);
    }
    CHECK(seen > 10);
}

TEST_CASE("root tables respect the class-count bound") {
    Rng rng(43);
    for (int round = 0; round < 40; ++round) {
        const Cotree t = random_cotree(1 + rng.below(6), rng);
        const int chi = 1 + rng.below(3), delta = rng.below(3);
        for (const Sig& sig : small_deficiency_root_table(t, chi, delta)) {
            int total = 0;
            for (const auto& [type, count] : sig) {
                total += count;
                CHECK(type.size >= 1);
                CHECK(type.size <= delta + 1);
                CHECK(type.max_def >= 0);
                CHECK(type.max_def <= delta);
            }
            CHECK(total <= chi);
        }
        for (const SignatureFewColors& sig : few_colors_root_table(t, chi, delta))
            CHECK(static_cast<int>(sig.size()) == chi);
    }
}

TEST_CASE("merge rules match recomputed class types") {
    Rng rng(57);
    int merges_checked = 0, rejects_checked = 0;
    for (int round = 0; round < 200; ++round) {
        const int n1 = 1 + rng.below(4), n2 = 1 + rng.below(4);
        const Graph g1 = random_cograph(n1, rng), g2 = random_cograph(n2, rng);
        const CotreeKind kind = rng.coin() ? CotreeKind::kJoin : CotreeKind::kUnion;
        const int chi = 1 + rng.below(3), delta = rng.below(3);

        const auto c1 = naive_decide(Instance(g1, chi, delta));
        const auto c2 = naive_decide(Instance(g2, chi, delta));
        if (!c1 || !c2) continue;

        // evaluate the combined graph with disjoint color ranges
        Graph g(n1 + n2);
        for (int a = 0; a < n1; ++a)
            for (int b : g1.neighbors(a))
                if (a < b) g.add_edge(a, b);
        for (int a = 0; a < n2; ++a)
            for (int b : g2.neighbors(a))
                if (a < b) g.add_edge(n1 + a, n1 + b);
        if (kind == CotreeKind::kJoin)
            for (int a = 0; a < n1; ++a)
                for (int b = 0; b < n2; ++b) g.add_edge(a, n1 + b);

        Coloring combined(n1 + n2);
        for (int v = 0; v < n1; ++v) combined[v] = (*c1)[v];
        for (int v = 0; v < n2; ++v) combined[n1 + v] = (*c2)[v] + chi;

        for (int color_a = 1; color_a <= chi; ++color_a)
            for (int color_b = 1; color_b <= chi; ++color_b) {
                std::vector<int> class_a, class_b;
                for (int v = 0; v < n1; ++v)
                    if ((*c1)[v] == color_a) class_a.push_back(v);
                for (int v = 0; v < n2; ++v)
                    if ((*c2)[v] == color_b) class_b.push_back(n1 + v);
                if (class_a.empty() || class_b.empty()) continue;

                auto class_type = [&](const Graph& gr, const Coloring& col,
                                      const std::vector<int>& verts) {
                    int max_def = 0;
                    for (int v : verts) max_def = std::max(max_def, deficiency(gr, col, v));
                    return ClassType{std::min<int>(static_cast<int>(verts.size()), delta + 1),
                                     max_def};
                };
                const ClassType ta = class_type(g1, *c1, [&] {
                    std::vector<int> local;
                    for (int v : class_a) local.push_back(v);
                    return local;
                }());
                std::vector<int> class_b_local;
                for (int v : class_b) class_b_local.push_back(v - n1);
                const ClassType tb = class_type(g2, *c2, class_b_local);

                Coloring merged = combined;
                for (int v : class_b) merged[v] = color_a;
                const auto predicted = merge_types(ta, tb, kind, delta);

                std::vector<int> union_class = class_a;
                union_class.insert(union_class.end(), class_b.begin(), class_b.end());
                const ClassType actual = class_type(g, merged, union_class);

                if (predicted) {
                    ++merges_checked;
                    CHECK(predicted->size == actual.size);
                    CHECK(predicted->max_def >= actual.max_def);
                    const bool truncated = ta.size == delta + 1 || tb.size == delta + 1;
                    if (!truncated) CHECK(predicted->max_def == actual.max_def);
                    CHECK(predicted->max_def <= delta);
                } else {
                    ++rejects_checked;
                    CHECK(actual.max_def > delta);  // the merge really was infeasible
                }
            }
    }
    CHECK(merges_checked > 50);
    CHECK(rejects_checked > 10);
}
