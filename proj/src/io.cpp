#include "defco/io.hpp"

namespace defco {

nlohmann::json answer_json(int chi, int delta, const std::optional<Coloring>& coloring) {
    nlohmann::json j;
    j["answer"] = coloring ? "YES" : "NO";
    j["chi"] = chi;
    j["delta"] = delta;
    if (coloring) j["colors"] = *coloring;
    return j;
}

ColoringFile parse_coloring_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring json: ") + e.what());
    }
    ColoringFile file;
    try {
        if (j.contains("chi")) file.chi = j["chi"].get<int>();
        if (j.contains("delta")) file.delta = j["delta"].get<int>();
        if (!j.contains("colors")) throw DataError("coloring json: missing \"colors\"");
        file.colors = j["colors"].get<Coloring>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("coloring json: ") + e.what());
    }
    return file;
}

nlohmann::json verify_report_json(const VerifyReport& report) {
    nlohmann::json j;
    j["valid"] = report.valid;
    j["max_deficiency"] = report.max_deficiency;
    if (report.violating_vertex) j["violating_vertex"] = *report.violating_vertex;
    return j;
}

}  // namespace defco
