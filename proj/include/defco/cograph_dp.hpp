#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "defco/cotree.hpp"
#include "defco/graph.hpp"

namespace defco {

// State atom of both cograph DPs: a color class summarized by its size
// (truncated at delta+1) and the maximum deficiency of its vertices.
struct ClassType {
    int size = 0;
    int max_def = 0;
    auto operator<=>(const ClassType&) const = default;
};

// The full (delta+1)^2 grid: size in {1..delta+1}, deficiency in {0..delta}.
std::vector<ClassType> type_grid(int delta);

// Whether/how two classes may share one color across a union or join.
// Join requires s1+d2 <= delta and s2+d1 <= delta and yields
// (min{s1+s2, delta+1}, max{d1+s2, d2+s1}); union always merges into
// (min{s1+s2, delta+1}, max{d1, d2}).
std::optional<ClassType> merge_types(ClassType a, ClassType b, CotreeKind kind, int delta);

// Signature of the small-deficiency DP: how many color classes have each
// type. No zero-count entries are stored.
using SignatureSmallDeficiency = std::map<ClassType, int>;

// Signature of the few-colors DP: one type per color, (0,0) for unused
// colors. Tables store these canonically (sorted), colors being
// interchangeable.
using SignatureFewColors = std::vector<ClassType>;

// Bipartite helper graph over the support of two signatures: one side per
// child, vertices weighted by class counts, edges between mergeable types.
// A weighted matching assigns each edge a weight with the sum at every
// vertex bounded by the vertex weight; it encodes which classes merge.
struct TypeMergeGraph {
    struct Edge {
        int left;   // index into left_types
        int right;  // index into right_types
        ClassType merged;
    };
    std::vector<ClassType> left_types, right_types;
    std::vector<int> left_weight, right_weight;
    std::vector<Edge> edges;
};

TypeMergeGraph build_type_merge_graph(const SignatureSmallDeficiency& s1,
                                      const SignatureSmallDeficiency& s2, CotreeKind kind,
                                      int delta);

// All signatures reachable by combining one feasible signature from each
// child over the node kind, keeping those with at most chi classes.
std::set<SignatureSmallDeficiency> combine_small_deficiency(
    const std::set<SignatureSmallDeficiency>& t1, const std::set<SignatureSmallDeficiency>& t2,
    CotreeKind kind, int chi, int delta);

// Color-by-color combination of two equal-length signatures; nullopt when
// some join pair is infeasible. An empty class joins anything unchanged.
std::optional<SignatureFewColors> combine_few_colors(const SignatureFewColors& s1,
                                                     const SignatureFewColors& s2,
                                                     CotreeKind kind, int delta);

// Root feasible-signature sets, exposed for the soundness tests.
std::set<SignatureSmallDeficiency> small_deficiency_root_table(const Cotree& t, int chi,
                                                               int delta);
std::set<SignatureFewColors> few_colors_root_table(const Cotree& t, int chi, int delta);

// The two deciders. Both reconstruct a certificate from back-pointers on a
// yes answer and verify it before returning.
std::optional<Coloring> solve_small_deficiency(const Cotree& t, int chi, int delta);
std::optional<Coloring> solve_few_colors(const Cotree& t, int chi, int delta);

// Signatures computed directly from a concrete coloring (test support).
SignatureSmallDeficiency signature_of_coloring(const Graph& g, const Coloring& c, int delta);
SignatureFewColors fc_signature_of_coloring(const Graph& g, const Coloring& c, int chi,
                                            int delta);

// Full cograph solver: recognizes (throws NotCographError with a P4 witness
// otherwise), tries the equitable shortcut, rejects when the clique number
// exceeds chi*(delta+1), then dispatches to the small-deficiency DP when
// delta^5 <= n and to the few-colors DP otherwise.
std::optional<Coloring> solve_cograph(const Instance& inst);

}  // namespace defco
