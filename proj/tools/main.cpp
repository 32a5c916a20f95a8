// defco: exact defective-coloring solver and instance toolbox.
//
// Exit codes: 0 yes / success, 1 no / invalid, 64 usage error, 65 bad input
// data, 66 forced engine rejected the graph class, 69 node budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "defco/chordal.hpp"
#include "defco/cograph_dp.hpp"
#include "defco/generate.hpp"
#include "defco/io.hpp"
#include "defco/reductions.hpp"
#include "defco/solver.hpp"
#include "defco/trivially_perfect.hpp"
#include "json.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitClassMismatch = 66;
constexpr int kExitBudget = 69;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw defco::DataError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw defco::DataError("cannot write '" + path + "'");
    out << content;
}

struct SolveOptions {
    std::string graph_path;
    int chi = 1;
    int delta = 0;
    std::string engine = "auto";
    std::string out_path;
    long long budget = defco::kDefaultNodeBudget;
};

int run_solve(const SolveOptions& opt) {
    const defco::Graph g = defco::parse_dimacs_graph(read_file(opt.graph_path));
    const defco::Instance inst(g, opt.chi, opt.delta);
    const defco::SolveOutcome outcome =
        defco::solve_instance(inst, defco::engine_from_name(opt.engine), opt.budget);

    if (outcome.status == defco::SearchStatus::kBudgetExceeded) {
        std::cerr << "node budget of " << opt.budget << " exceeded\n";
        return kExitBudget;
    }
    nlohmann::json j = defco::answer_json(opt.chi, opt.delta, outcome.coloring);
    j["class"] = outcome.engine_used;
    std::cout << j.dump() << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, j.dump() + "\n");
    return outcome.status == defco::SearchStatus::kYes ? kExitYes : kExitNo;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path, int chi,
               int delta) {
    const defco::Graph g = defco::parse_dimacs_graph(read_file(graph_path));
    const defco::ColoringFile file = defco::parse_coloring_json(read_file(coloring_path));
    const defco::Instance inst(g, chi, delta);
    defco::VerifyReport report;
    try {
        report = defco::verify_coloring(inst, file.colors);
    } catch (const defco::ContractError& e) {
        throw defco::DataError(e.what());  // malformed coloring file, not an invalid coloring
    }
    std::cout << defco::verify_report_json(report).dump() << "\n";
    return report.valid ? kExitYes : kExitNo;
}

std::string default_prefix(const std::string& input) {
    const size_t dot = input.find_last_of('.');
    const size_t slash = input.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return input;
    return input.substr(0, dot);
}

int run_reduce(const std::string& kind, const std::string& input, int chi, int delta,
               std::string prefix) {
    if (prefix.empty()) prefix = default_prefix(input) + ".reduced";
    nlohmann::json stats;

    if (kind == "sat") {
        const defco::CnfFormula f = defco::parse_dimacs_cnf(read_file(input));
        const defco::SatReduction r = defco::reduce_3sat(f, delta);
        write_file(prefix + ".col", defco::to_dimacs(r.instance.graph));
        nlohmann::json meta;
        meta["kind"] = "sat";
        meta["chi"] = r.instance.chi;
        meta["delta"] = r.instance.delta;
        nlohmann::json ann;
        for (const auto& [v, role] : r.annotations) ann[std::to_string(v)] = role;
        meta["annotations"] = ann;
        write_file(prefix + ".json", meta.dump(2) + "\n");
        stats["vertices"] = r.instance.graph.vertex_count();
        stats["edges"] = r.instance.graph.edge_count();
        stats["clique"] = r.clique_size();
        stats["independent"] = r.independent_size();
        stats["chi"] = r.instance.chi;
        stats["delta"] = r.instance.delta;
    } else if (kind == "setsplit") {
        const auto ss = defco::parse_set_splitting_json(read_file(input));
        const defco::SetSplitReduction r = defco::reduce_set_splitting(ss, chi);
        write_file(prefix + ".col", defco::to_dimacs(r.instance.graph));
        nlohmann::json meta;
        meta["kind"] = "setsplit";
        meta["chi"] = r.instance.chi;
        meta["delta"] = r.instance.delta;
        nlohmann::json ann;
        for (const auto& [v, role] : r.annotations) ann[std::to_string(v)] = role;
        meta["annotations"] = ann;
        write_file(prefix + ".json", meta.dump(2) + "\n");
        stats["vertices"] = r.instance.graph.vertex_count();
        stats["edges"] = r.instance.graph.edge_count();
        stats["chi"] = r.instance.chi;
        stats["delta"] = r.instance.delta;
    } else if (kind == "4part") {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(input));
        } catch (const nlohmann::json::exception& e) {
            throw defco::ParseError(std::string("4-partition json: ") + e.what());
        }
        defco::FourPartitionInstance fp;
        try {
            fp.group_size = j.at("n").get<int>();
            fp.target = j.at("target").get<long long>();
            const auto& groups = j.at("groups");
            if (groups.size() != 4) throw defco::DataError("4-partition: need 4 groups");
            for (int g = 0; g < 4; ++g)
                fp.groups[g] = groups[g].get<std::vector<long long>>();
        } catch (const nlohmann::json::exception& e) {
            throw defco::DataError(std::string("4-partition json: ") + e.what());
        }
        const auto normalized = defco::normalize_four_partition(fp);
        const auto mp = defco::reduce_fp_to_multipartite(normalized);
        nlohmann::json out;
        out["chi"] = mp.chi;
        out["delta"] = mp.delta;
        out["total_vertices"] = mp.total_vertices();
        out["window"] = {normalized.window_low(), normalized.window_high()};
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& part : mp.parts)
            parts.push_back({{"label", part.label}, {"size", part.size}});
        out["parts"] = parts;
        write_file(prefix + ".json", out.dump(2) + "\n");
        stats["parts"] = mp.parts.size();
        stats["chi"] = mp.chi;
        stats["delta"] = mp.delta;
        stats["total_vertices"] = mp.total_vertices();
    } else {
        std::cerr << "unknown reduction kind '" << kind << "'\n";
        return kExitUsage;
    }
    std::cout << stats.dump() << "\n";
    return 0;
}

int run_gen(const std::string& cls, int n, uint64_t seed, const std::string& out_path) {
    defco::Rng rng(seed);
    defco::Graph g;
    if (cls == "cograph")
        g = defco::random_cograph(n, rng);
    else if (cls == "tp")
        g = defco::random_trivially_perfect(n, rng);
    else if (cls == "chordal")
        g = defco::random_chordal(n, 3, rng);
    else if (cls == "split")
        g = defco::random_split(n, rng);
    else {
        std::cerr << "unknown class '" << cls << "'\n";
        return kExitUsage;
    }
    const std::string dimacs = defco::to_dimacs(g);
    if (out_path.empty())
        std::cout << dimacs;
    else
        write_file(out_path, dimacs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (chi,delta)-coloring solver with certificates"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "decide an instance and print a certificate");
    solve->add_option("graph", solve_opt.graph_path, "DIMACS .col file")->required();
    solve->add_option("--chi", solve_opt.chi, "number of colors")->required();
    solve->add_option("--delta", solve_opt.delta, "deficiency bound")->required();
    solve->add_option("--engine", solve_opt.engine,
                      "auto|trivially-perfect|cograph|chordal|brute");
    solve->add_option("--out", solve_opt.out_path, "also write the answer JSON here");
    solve->add_option("--budget", solve_opt.budget, "node budget for the brute engine");

    SolveOptions oracle_opt;
    CLI::App* oracle = app.add_subcommand("oracle", "decide with the brute-force engine");
    oracle->add_option("graph", oracle_opt.graph_path, "DIMACS .col file")->required();
    oracle->add_option("--chi", oracle_opt.chi, "number of colors")->required();
    oracle->add_option("--delta", oracle_opt.delta, "deficiency bound")->required();
    oracle->add_option("--out", oracle_opt.out_path, "also write the answer JSON here");
    oracle->add_option("--budget", oracle_opt.budget, "node budget");

    std::string verify_graph, verify_coloring_path;
    int verify_chi = 1, verify_delta = 0;
    CLI::App* verify = app.add_subcommand("verify", "check a coloring file");
    verify->add_option("graph", verify_graph, "DIMACS .col file")->required();
    verify->add_option("coloring", verify_coloring_path, "answer JSON with colors")->required();
    verify->add_option("--chi", verify_chi, "number of colors")->required();
    verify->add_option("--delta", verify_delta, "deficiency bound")->required();

    std::string reduce_kind, reduce_input, reduce_prefix;
    int reduce_chi = 2, reduce_delta = 1;
    CLI::App* reduce = app.add_subcommand("reduce", "generate a hardness instance");
    reduce->add_option("kind", reduce_kind, "sat|setsplit|4part")->required();
    reduce->add_option("input", reduce_input, "cnf (sat) or json (setsplit/4part)")->required();
    reduce->add_option("--chi", reduce_chi, "colors (setsplit)");
    reduce->add_option("--delta", reduce_delta, "deficiency bound (sat)");
    reduce->add_option("--out", reduce_prefix, "output path prefix");

    std::string gen_class, gen_out;
    int gen_n = 8;
    uint64_t gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate a random class member");
    gen->add_option("class", gen_class, "cograph|tp|chordal|split")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (oracle->parsed()) {
            oracle_opt.engine = "brute";
            return run_solve(oracle_opt);
        }
        if (verify->parsed())
            return run_verify(verify_graph, verify_coloring_path, verify_chi, verify_delta);
        if (reduce->parsed())
            return run_reduce(reduce_kind, reduce_input, reduce_chi, reduce_delta,
                              reduce_prefix);
        if (gen->parsed()) return run_gen(gen_class, gen_n, gen_seed, gen_out);
    } catch (const defco::ClassMismatchError& e) {
        std::cerr << e.what() << "\n";
        return kExitClassMismatch;
    } catch (const defco::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitData;
    } catch (const defco::DataError& e) {
        std::cerr << e.what() << "\n";
        return kExitData;
    } catch (const defco::ContractError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
