#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

// ---------------------------------------------------------------------------
// 4-Partition -> complete multipartite instances
// ---------------------------------------------------------------------------

// 4n weighted elements in four groups of n; a solution partitions them into
// n quadruples, one element per group, each summing to the target.
struct FourPartitionInstance {
    int group_size = 0;  // n
    long long target = 0;
    std::array<std::vector<long long>, 4> groups;
};

// Size-shifted instance: element x of group i gets 5^(i+1)*B + 5^5*n^2*B
// added, making the groups strictly ordered by size; the quadruple target
// becomes B' and every size falls in the open window B'/4 +- 5B'/n^2.
struct NormalizedFourPartition {
    FourPartitionInstance instance;  // sizes replaced by the shifted ones
    long long target = 0;            // B'

    bool size_in_window(long long size) const;  // exact rational comparison
    double window_low() const;
    double window_high() const;
};

NormalizedFourPartition normalize_four_partition(const FourPartitionInstance& fp);

struct ElementRef {
    int group = 0;  // 0..3
    int index = 0;  // position within the group
    auto operator<=>(const ElementRef&) const = default;
};
using Quadruple = std::array<ElementRef, 4>;

// One independent set of the complete multipartite graph. Group-0 elements
// contribute two parts (copy 1 and 2), everything else one (copy 0).
struct MultipartitePart {
    ElementRef element;
    int copy = 0;
    long long size = 0;
    std::string label;
};

// Compact stand-in for the reduced graph: the vertex count is astronomical,
// but with part-monochromatic colorings (the only optimal shape) everything
// is decided by part sizes.
struct MultipartiteInstance {
    int chi = 0;
    long long delta = 0;
    std::vector<MultipartitePart> parts;

    long long total_vertices() const;
    int part_index(const ElementRef& element, int copy) const;
};

MultipartiteInstance reduce_fp_to_multipartite(const NormalizedFourPartition& fp);

struct PartVerifyReport {
    bool valid = false;
    long long max_deficiency = 0;
    std::optional<int> violating_part;
};

// Deficiency of a part's vertices = total size of the other parts sharing
// its color; runs in time polynomial in the number of parts.
PartVerifyReport verify_multipartite_coloring(const MultipartiteInstance& mp,
                                              const std::vector<int>& part_color);

// Quadruples -> part colors: quadruple i paints its parts (both copies for
// the group-0 element) with color i+1. The grouping must use each element
// exactly once; whether the result is a valid coloring is the verifier's
// business.
std::vector<int> witness_fp_forward(const MultipartiteInstance& mp,
                                    const std::vector<Quadruple>& grouping);

// Part colors -> quadruples. Requires the coloring to be valid with each
// color on exactly five parts (one per groups 3,2,1 plus two copy-parts);
// copy-1/copy-2 colors are exchanged along auxiliary-digraph paths until
// every color owns a copy-1 part, then quadruples are read off and checked
// to sum to B'. Violations raise ExtractionError.
std::vector<Quadruple> witness_fp_backward(const MultipartiteInstance& mp,
                                           const std::vector<int>& part_color);

// ---------------------------------------------------------------------------
// 3-SAT -> split graphs
// ---------------------------------------------------------------------------

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // DIMACS-signed literals

    bool satisfied_by(const std::vector<bool>& assignment) const;
};

CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf(const std::string& text);

// Split graph with clique U and independent set Z; chi = 2*vars. For
// delta = 1 each variable has four clique vertices A-D and four blockers
// z^A..z^D; for delta >= 2 two clique blocks of delta-1 vertices are added
// per variable and z^B, z^C disappear. Clause vertices miss A,B of a
// positive occurrence and A,C of a negative one.
struct SatReduction {
    Instance instance;
    int num_vars = 0;
    int num_clauses = 0;
    CnfFormula formula;  // source formula, kept for the witness mappers
    std::map<int, std::string> annotations;

    int u(int var, int k) const;        // k in 0..3 for A..D
    int block_a(int var, int j) const;  // extra clique blocks, delta >= 2
    int block_d(int var, int j) const;
    int z(int var, int k) const;  // delta = 1: k in 0..3; delta >= 2: k in {0,3}
    int clause_vertex(int j) const;

    int clique_size() const;
    int independent_size() const;
};

SatReduction reduce_3sat(const CnfFormula& f, int delta);

// Satisfying assignment -> coloring: variable i uses colors 2i-1, 2i on its
// clique block, pairing A with B when true and A with C when false; every
// independent vertex takes a color whose whole clique class sits in its
// non-neighborhood. Raises WitnessError when a clause vertex has no color
// (the assignment was not satisfying).
Coloring witness_sat_forward(const SatReduction& r, const std::vector<bool>& assignment);

// Valid coloring -> assignment, read from the clique pairing
// (A with B = true). ContractError on invalid colorings, ExtractionError if
// the recovered assignment fails the formula.
std::vector<bool> witness_sat_backward(const SatReduction& r, const Coloring& c);

// ---------------------------------------------------------------------------
// 3-Set-Splitting -> split graphs with fixed chi
// ---------------------------------------------------------------------------

struct SetSplittingInstance {
    int universe_size = 0;
    std::vector<std::array<int, 3>> sets;  // distinct elements, 0-based
};

SetSplittingInstance parse_set_splitting_json(const std::string& text);

struct SetSplitReduction {
    Instance instance;  // delta = |F|+1
    int num_sets = 0;
    int universe_size = 0;
    std::vector<std::array<int, 3>> sets;  // source family
    std::map<int, std::string> annotations;

    int c1(int set) const;
    int c2(int set) const;
    int cstar(int k) const;
    int w(int element) const;
    int z1(int k) const;
    int z2(int k) const;

    int cstar_size() const;
    int z_size() const;
};

SetSplitReduction reduce_set_splitting(const SetSplittingInstance& ss, int chi);

// Builds the canonical coloring for a partition (color 1 on C1, Z2 and U1;
// color 2 on C2, Z1 and U2; C* equitably on the rest) without checking it.
Coloring set_split_coloring(const SetSplitReduction& r, const std::vector<bool>& in_u1);

// Same, but verified; raises WitnessError when the partition fails to split
// some set (the coloring then has a vertex at deficiency delta+1).
Coloring witness_ss_forward(const SetSplitReduction& r, const std::vector<bool>& in_u1);

// Valid coloring -> partition: U1 = elements whose vertex shares C1's color.
// ContractError on invalid colorings; ExtractionError when the coloring
// lacks the monochromatic-C1/C2 structure or the partition fails to split
// (possible on very small families).
std::vector<bool> witness_ss_backward(const SetSplitReduction& r, const Coloring& c);

}  // namespace defco
