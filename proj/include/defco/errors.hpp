#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace defco {

// Input text that could not be tokenized or structured.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input with out-of-domain content (endpoint out of range, ...).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// A solution/coloring translation failed its structural requirements.
struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A witness construction could not be completed (e.g. no color available).
struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The brute-force search ran out of its node budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Base for "this graph is not in the engine's class" errors. Each carries a
// witness substructure proving the mismatch.
struct ClassMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCographError : ClassMismatchError {
    std::array<int, 4> p4;  // induced path, in path order

    explicit NotCographError(const std::array<int, 4>& witness)
        : ClassMismatchError("not a cograph: induced P4 on vertices " +
                             std::to_string(witness[0]) + "-" + std::to_string(witness[1]) + "-" +
                             std::to_string(witness[2]) + "-" + std::to_string(witness[3])),
          p4(witness) {}
};

struct NotTriviallyPerfectError : ClassMismatchError {
    std::vector<int> component;  // connected induced subgraph without a universal vertex

    explicit NotTriviallyPerfectError(std::vector<int> witness)
        : ClassMismatchError("not trivially perfect: component of " +
                             std::to_string(witness.size()) +
                             " vertices has no universal vertex"),
          component(std::move(witness)) {}
};

struct NotChordalError : ClassMismatchError {
    std::array<int, 3> triple;  // v plus two non-adjacent later neighbors

    explicit NotChordalError(const std::array<int, 3>& witness)
        : ClassMismatchError("not chordal: later neighbors " + std::to_string(witness[1]) +
                             "," + std::to_string(witness[2]) + " of vertex " +
                             std::to_string(witness[0]) + " are non-adjacent"),
          triple(witness) {}
};

}  // namespace defco
