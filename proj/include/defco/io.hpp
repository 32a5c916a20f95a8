#pragma once

#include <optional>
#include <string>

#include "defco/graph.hpp"
#include "json.hpp"

namespace defco {

// Answer object: {"answer":"YES"|"NO","chi":..,"delta":..,"colors":[..]},
// colors 1-indexed and omitted on NO.
nlohmann::json answer_json(int chi, int delta, const std::optional<Coloring>& coloring);

struct ColoringFile {
    std::optional<int> chi, delta;
    Coloring colors;
};

// Reads a coloring back from the answer object ("colors" required).
ColoringFile parse_coloring_json(const std::string& text);

nlohmann::json verify_report_json(const VerifyReport& report);

}  // namespace defco
