#include "defco/solver.hpp"

#include "defco/chordal.hpp"
#include "defco/cograph_dp.hpp"
#include "defco/trivially_perfect.hpp"

namespace defco {

Engine engine_from_name(const std::string& name) {
    if (name == "auto") return Engine::kAuto;
    if (name == "trivially-perfect" || name == "tp") return Engine::kTriviallyPerfect;
    if (name == "cograph") return Engine::kCograph;
    if (name == "chordal") return Engine::kChordal;
    if (name == "brute") return Engine::kBrute;
    throw ContractError("unknown engine '" + name + "'");
}

namespace {

SolveOutcome from_optional(std::optional<Coloring> coloring, const char* engine) {
    SolveOutcome out;
    out.status = coloring ? SearchStatus::kYes : SearchStatus::kNo;
    out.coloring = std::move(coloring);
    out.engine_used = engine;
    return out;
}

}  // namespace

SolveOutcome solve_instance(const Instance& inst, Engine engine, long long budget) {
    switch (engine) {
        case Engine::kTriviallyPerfect:
            return from_optional(solve_trivially_perfect(inst), "trivially-perfect");
        case Engine::kCograph:
            return from_optional(solve_cograph(inst), "cograph");
        case Engine::kChordal:
            return from_optional(solve_chordal(inst), "chordal");
        case Engine::kBrute: {
            SearchResult result = brute_force_decide(inst, budget);
            SolveOutcome out;
            out.status = result.status;
            out.coloring = std::move(result.coloring);
            out.engine_used = "brute";
            return out;
        }
        case Engine::kAuto:
            break;
    }

    if (build_rooted_forest(inst.graph).forest)
        return from_optional(solve_trivially_perfect(inst), "trivially-perfect");
    if (build_cotree(inst.graph).cotree)
        return from_optional(solve_cograph(inst), "cograph");
    if (peo_lexbfs(inst.graph).perfect)
        return from_optional(solve_chordal(inst), "chordal");
    return solve_instance(inst, Engine::kBrute, budget);
}

}  // namespace defco
