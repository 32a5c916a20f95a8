#pragma once

#include <optional>

#include "defco/graph.hpp"

namespace defco {

inline constexpr long long kDefaultNodeBudget = 50'000'000;

enum class SearchStatus { kYes, kNo, kBudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::kNo;
    std::optional<Coloring> coloring;  // present iff kYes
    long long nodes = 0;
};

// Exhaustive backtracking oracle. Vertices are tried in descending degree
// order; a vertex may open color k+1 only if colors 1..k already appear
// (color classes are interchangeable). Deficiency counters are maintained
// incrementally and prune as soon as any vertex would exceed delta.
// Intended for small instances; aborts with kBudgetExceeded once more than
// `node_budget` vertex assignments have been committed.
SearchResult brute_force_decide(const Instance& inst, long long node_budget = kDefaultNodeBudget);

}  // namespace defco
