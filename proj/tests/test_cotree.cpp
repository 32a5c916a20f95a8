#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "defco/cotree.hpp"
#include "defco/generate.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace defco;
using namespace defco::testing;

namespace {

bool induces_p4(const Graph& g, const std::array<int, 4>& p) {
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(p[i], p[j])) ++edges;
    return edges == 3 && g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) &&
           g.adjacent(p[2], p[3]);
}

}  // namespace

TEST_CASE("eval on tiny trees") {
    Cotree leaf;
    leaf.root = leaf.add_leaf(0);
    CHECK(eval_cotree(leaf).vertex_count() == 1);

    const Cotree join = parse_cotree("(J v0 v1)");
    CHECK(eval_cotree(join) == make_complete(2));

    const Cotree uni = parse_cotree("(U v0 v1)");
    CHECK(eval_cotree(uni) == Graph(2));
}

TEST_CASE("build on tiny graphs") {
    const auto single = build_cotree(Graph(1));
    REQUIRE(single.cotree);
    CHECK(single.cotree->nodes[single.cotree->root].kind == CotreeKind::kLeaf);

    // C4 is the join of two 2-vertex unions (up to child order)
    const auto c4 = build_cotree(make_cycle(4));
    REQUIRE(c4.cotree);
    const auto& root = c4.cotree->nodes[c4.cotree->root];
    CHECK(root.kind == CotreeKind::kJoin);
    REQUIRE(root.children.size() == 2);
    for (int child : root.children) {
        CHECK(c4.cotree->nodes[child].kind == CotreeKind::kUnion);
        CHECK(c4.cotree->nodes[child].children.size() == 2);
    }
    CHECK(eval_cotree(*c4.cotree) == make_cycle(4));

    const auto p4 = build_cotree(make_path(4));
    REQUIRE(!p4.cotree);
    CHECK(induces_p4(make_path(4), p4.p4));
    CHECK(std::set<int>(p4.p4.begin(), p4.p4.end()).size() == 4);
}

TEST_CASE("round trip over exhaustive small graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) {
            const auto built = build_cotree(g);
            if (!built.cotree) {
                CHECK(induces_p4(g, built.p4));
                continue;
            }
            CHECK(eval_cotree(*built.cotree) == g);
        }
}

TEST_CASE("round trip over random cotrees") {
    Rng rng(21);
    for (int round = 0; round < 200; ++round) {
        const Cotree t = random_cotree(1 + rng.below(7), rng);
        const Graph g = eval_cotree(t);
        const auto rebuilt = build_cotree(g);
        REQUIRE(rebuilt.cotree);
        CHECK(eval_cotree(*rebuilt.cotree) == g);
        CHECK(eval_cotree(binarize(t)) == g);
    }
}

TEST_CASE("sexpr format") {
    const Cotree t = parse_cotree("(J (U v0 v1) (U v2 v3))");
    CHECK(eval_cotree(t) == make_cycle(4));  // C4 = K_{2,2}
    CHECK(to_sexpr(t) == "(J (U v0 v1) (U v2 v3))");
    CHECK(eval_cotree(parse_cotree("v0")).vertex_count() == 1);

    CHECK_THROWS_AS(parse_cotree("(J v0)"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(X v0 v1)"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(J v0 v1"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(J v0 v2)"), DataError);  // ids not 0..n-1
    CHECK_THROWS_AS(parse_cotree("(J v0 v0)"), DataError);  // duplicate leaf
}

TEST_CASE("omega") {
    Cotree leaf;
    leaf.root = leaf.add_leaf(0);
    CHECK(omega_cotree(leaf) == 1);
    CHECK(omega_cotree(parse_cotree("(J v0 v1)")) == 2);
    CHECK(omega_cotree(parse_cotree("(J (U v0 v1) (U v2 v3))")) == 2);

    Rng rng(33);
    for (int round = 0; round < 60; ++round) {
        const Cotree t = random_cotree(1 + rng.below(7), rng);
        CHECK(omega_cotree(t) == max_clique_brute(eval_cotree(t)));
    }
}
