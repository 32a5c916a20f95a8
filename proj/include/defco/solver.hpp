#pragma once

#include <string>

#include "defco/brute_force.hpp"
#include "defco/graph.hpp"

namespace defco {

enum class Engine { kAuto, kTriviallyPerfect, kCograph, kChordal, kBrute };

Engine engine_from_name(const std::string& name);  // ContractError on unknown names

struct SolveOutcome {
    SearchStatus status = SearchStatus::kNo;
    std::optional<Coloring> coloring;
    std::string engine_used;  // "trivially-perfect" | "cograph" | "chordal" | "brute"
};

// Forced engines throw the matching ClassMismatchError when the graph is not
// in their class; auto tries recognizers most-specialized first
// (trivially perfect, then cograph, then chordal) and falls back to the
// budgeted brute-force search.
SolveOutcome solve_instance(const Instance& inst, Engine engine,
                            long long budget = kDefaultNodeBudget);

}  // namespace defco
