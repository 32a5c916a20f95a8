#include "defco/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace defco {

// ---------------------------------------------------------------------------
// 4-Partition
// ---------------------------------------------------------------------------

namespace {

long long pow5(int e) {
    long long r = 1;
    while (e-- > 0) r *= 5;
    return r;
}

void check_four_partition(const FourPartitionInstance& fp) {
    if (fp.group_size < 1) throw ContractError("4-partition: group size must be >= 1");
    if (fp.target < 1) throw ContractError("4-partition: target must be >= 1");
    for (const auto& group : fp.groups) {
        if (static_cast<int>(group.size()) != fp.group_size)
            throw ContractError("4-partition: every group needs exactly n elements");
        for (long long s : group)
            if (s <= 0) throw ContractError("4-partition: sizes must be positive");
    }
}

}  // namespace

NormalizedFourPartition normalize_four_partition(const FourPartitionInstance& fp) {
    check_four_partition(fp);
    const long long n = fp.group_size;
    const long long base = pow5(5) * n * n * fp.target;  // 5^5 n^2 B added everywhere

    NormalizedFourPartition out;
    out.instance = fp;
    for (int g = 0; g < 4; ++g)
        for (long long& s : out.instance.groups[g]) s += pow5(g + 1) * fp.target + base;
    long long geo = 0;
    for (int g = 1; g <= 4; ++g) geo += pow5(g);
    out.target = fp.target + fp.target * geo + 4 * base;
    out.instance.target = out.target;
    return out;
}

bool NormalizedFourPartition::size_in_window(long long size) const {
    // open interval B'/4 - 5B'/n^2 < s < B'/4 + 5B'/n^2, scaled by 4n^2
    const __int128 n2 = static_cast<__int128>(instance.group_size) * instance.group_size;
    const __int128 lhs = static_cast<__int128>(size) * 4 * n2;
    const __int128 b = target;
    return lhs > b * (n2 - 20) && lhs < b * (n2 + 20);
}

double NormalizedFourPartition::window_low() const {
    const double n2 = static_cast<double>(instance.group_size) * instance.group_size;
    return target / 4.0 - 5.0 * target / n2;
}

double NormalizedFourPartition::window_high() const {
    const double n2 = static_cast<double>(instance.group_size) * instance.group_size;
    return target / 4.0 + 5.0 * target / n2;
}

long long MultipartiteInstance::total_vertices() const {
    long long total = 0;
    for (const auto& part : parts) total += part.size;
    return total;
}

int MultipartiteInstance::part_index(const ElementRef& element, int copy) const {
    const int n = chi;
    if (element.index < 0 || element.index >= n)
        throw ContractError("multipartite: element index out of range");
    if (element.group == 0) {
        if (copy != 1 && copy != 2) throw ContractError("multipartite: group-0 copy must be 1 or 2");
        return element.index * 2 + (copy - 1);
    }
    if (element.group < 1 || element.group > 3 || copy != 0)
        throw ContractError("multipartite: bad element reference");
    return 2 * n + (element.group - 1) * n + element.index;
}

MultipartiteInstance reduce_fp_to_multipartite(const NormalizedFourPartition& fp) {
    check_four_partition(fp.instance);
    const int n = fp.instance.group_size;
    MultipartiteInstance mp;
    mp.chi = n;
    mp.delta = fp.target;

    auto label = [](int group, int index, int copy) {
        std::string s = "V[A" + std::to_string(group + 1) + "." + std::to_string(index) + "]";
        if (copy) s += "^" + std::to_string(copy);
        return s;
    };
    for (int i = 0; i < n; ++i)
        for (int copy : {1, 2})
            mp.parts.push_back({ElementRef{0, i}, copy, fp.instance.groups[0][i],
                                label(0, i, copy)});
    for (int g = 1; g < 4; ++g)
        for (int i = 0; i < n; ++i)
            mp.parts.push_back({ElementRef{g, i}, 0, fp.instance.groups[g][i], label(g, i, 0)});
    return mp;
}

PartVerifyReport verify_multipartite_coloring(const MultipartiteInstance& mp,
                                              const std::vector<int>& part_color) {
    if (part_color.size() != mp.parts.size())
        throw ContractError("multipartite verify: assignment size mismatch");
    for (int c : part_color)
        if (c < 1 || c > mp.chi) throw ContractError("multipartite verify: color out of range");

    std::vector<long long> class_size(mp.chi + 1, 0);
    for (size_t p = 0; p < mp.parts.size(); ++p) class_size[part_color[p]] += mp.parts[p].size;

    PartVerifyReport report;
    report.valid = true;
    for (size_t p = 0; p < mp.parts.size(); ++p) {
        const long long def = class_size[part_color[p]] - mp.parts[p].size;
        report.max_deficiency = std::max(report.max_deficiency, def);
        if (def > mp.delta && !report.violating_part) {
            report.valid = false;
            report.violating_part = static_cast<int>(p);
        }
    }
    return report;
}

std::vector<int> witness_fp_forward(const MultipartiteInstance& mp,
                                    const std::vector<Quadruple>& grouping) {
    const int n = mp.chi;
    if (static_cast<int>(grouping.size()) != n)
        throw ContractError("fp forward: need exactly n quadruples");
    std::vector<std::vector<int>> used(4, std::vector<int>(n, 0));
    for (const auto& quad : grouping)
        for (const auto& el : quad) {
            if (el.group < 0 || el.group > 3 || el.index < 0 || el.index >= n)
                throw ContractError("fp forward: element reference out of range");
            if (used[el.group][el.index]++)
                throw ContractError("fp forward: element used twice");
        }
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i < n; ++i)
            if (!used[g][i]) throw ContractError("fp forward: element never used");

    std::vector<int> part_color(mp.parts.size(), 0);
    for (int q = 0; q < n; ++q)
        for (const auto& el : grouping[q]) {
            if (el.group == 0) {
                part_color[mp.part_index(el, 1)] = q + 1;
                part_color[mp.part_index(el, 2)] = q + 1;
            } else {
                part_color[mp.part_index(el, 0)] = q + 1;
            }
        }
    return part_color;
}

std::vector<Quadruple> witness_fp_backward(const MultipartiteInstance& mp,
                                           const std::vector<int>& part_color_in) {
    const int n = mp.chi;
    if (!verify_multipartite_coloring(mp, part_color_in).valid)
        throw ExtractionError("fp backward: assignment is not a valid coloring");

    std::vector<int> part_color = part_color_in;
    // structure: every color covers one part from each of A4, A3, A2 and two
    // of the duplicated small parts
    std::vector<std::array<int, 4>> group_part(n, {-1, -1, -1, -1});  // by color, groups 1..3
    std::vector<std::vector<int>> small_parts(n);                     // copy parts by color
    for (size_t p = 0; p < mp.parts.size(); ++p) {
        const auto& part = mp.parts[p];
        const int color = part_color[p] - 1;
        if (part.element.group == 0) {
            small_parts[color].push_back(static_cast<int>(p));
        } else {
            if (group_part[color][part.element.group] != -1)
                throw ExtractionError("fp backward: color repeats a large group");
            group_part[color][part.element.group] = static_cast<int>(p);
        }
    }
    for (int c = 0; c < n; ++c) {
        if (small_parts[c].size() != 2)
            throw ExtractionError("fp backward: color " + std::to_string(c + 1) +
                                  " does not cover exactly two small parts");
        for (int g = 1; g <= 3; ++g)
            if (group_part[c][g] == -1)
                throw ExtractionError("fp backward: color " + std::to_string(c + 1) +
                                      " misses group A" + std::to_string(g + 1));
    }

    // auxiliary digraph: one edge per duplicated element, from its copy-1
    // color to its copy-2 color; out-degree = number of copy-1 parts held.
    // Swapping an element's two copies flips its edge; walking a deficit
    // color backwards along unused edges reaches an out-degree-2 color.
    auto out_degree = [&](int color) {
        int d = 0;
        for (int p : small_parts[color])
            if (mp.parts[p].copy == 1) ++d;
        return d;
    };
    std::vector<int> used_element(n, 0);
    int flips = 0;
    for (int c = 0; c < n; ++c) {
        int current = c;
        while (out_degree(current) == 0) {
            if (++flips > n)
                throw std::logic_error("fp backward: copy exchange did not converge");
            int chosen = -1;
            for (int p : small_parts[current])
                if (mp.parts[p].copy == 2 && !used_element[mp.parts[p].element.index])
                    chosen = p;
            if (chosen == -1)
                throw std::logic_error("fp backward: no unused copy-2 part at deficit color");
            const int element = mp.parts[chosen].element.index;
            used_element[element] = 1;
            const int p1 = mp.part_index(ElementRef{0, element}, 1);
            const int p2 = mp.part_index(ElementRef{0, element}, 2);
            std::swap(part_color[p1], part_color[p2]);
            const int previous = part_color[p2] - 1;  // copy-1's former color
            // refresh the bookkeeping for both affected colors
            small_parts[current].erase(
                std::find(small_parts[current].begin(), small_parts[current].end(), p2));
            small_parts[current].push_back(p1);
            small_parts[previous].erase(
                std::find(small_parts[previous].begin(), small_parts[previous].end(), p1));
            small_parts[previous].push_back(p2);
            current = previous;
        }
    }

    std::vector<Quadruple> quads(n);
    for (int c = 0; c < n; ++c) {
        int copy1_part = -1;
        for (int p : small_parts[c])
            if (mp.parts[p].copy == 1) copy1_part = p;
        if (copy1_part == -1)
            throw std::logic_error("fp backward: color still lacks a copy-1 part");
        quads[c][0] = mp.parts[copy1_part].element;
        long long sum = mp.parts[copy1_part].size;
        for (int g = 1; g <= 3; ++g) {
            quads[c][g] = mp.parts[group_part[c][g]].element;
            sum += mp.parts[group_part[c][g]].size;
        }
        if (sum != mp.delta)
            throw ExtractionError("fp backward: quadruple for color " + std::to_string(c + 1) +
                                  " sums to " + std::to_string(sum) + ", expected " +
                                  std::to_string(mp.delta));
    }
    return quads;
}

// ---------------------------------------------------------------------------
// 3-SAT
// ---------------------------------------------------------------------------

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            const int var = std::abs(lit) - 1;
            if ((lit > 0) == assignment[var]) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
    std::string line;
    std::vector<int> literals;
    CnfFormula formula;
    bool have_header = false;
    int line_no = 0;
    int declared_clauses = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string fmt;
            if (have_header || !(ss >> fmt >> formula.num_vars >> declared_clauses) ||
                fmt != "cnf")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p cnf <vars> <clauses>'");
            if (formula.num_vars < 1)
                throw DataError("line " + std::to_string(line_no) + ": need at least 1 variable");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("line " + std::to_string(line_no) + ": clause before header");
        ss.clear();
        ss.str(line);
        int lit;
        while (ss >> lit) {
            if (lit == 0) {
                if (literals.size() != 3)
                    throw DataError("line " + std::to_string(line_no) +
                                    ": clause must have exactly 3 literals");
                formula.clauses.push_back({literals[0], literals[1], literals[2]});
                literals.clear();
            } else {
                if (std::abs(lit) > formula.num_vars)
                    throw DataError("line " + std::to_string(line_no) + ": literal " +
                                    std::to_string(lit) + " out of range");
                literals.push_back(lit);
            }
        }
        if (ss.fail() && !ss.eof())
            throw ParseError("line " + std::to_string(line_no) + ": bad literal");
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!literals.empty()) throw ParseError("unterminated clause at end of input");
    return formula;
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

int SatReduction::u(int var, int k) const { return 4 * var + k; }

int SatReduction::block_a(int var, int j) const {
    const int d = instance.delta;
    return 4 * num_vars + var * 2 * (d - 1) + j;
}

int SatReduction::block_d(int var, int j) const {
    const int d = instance.delta;
    return 4 * num_vars + var * 2 * (d - 1) + (d - 1) + j;
}

int SatReduction::clique_size() const {
    return 4 * num_vars + 2 * (instance.delta - 1) * num_vars;
}

int SatReduction::z(int var, int k) const {
    if (instance.delta == 1) return clique_size() + 4 * var + k;
    return clique_size() + 2 * var + (k == 0 ? 0 : 1);  // only A and D survive
}

int SatReduction::clause_vertex(int j) const {
    return clique_size() + (instance.delta == 1 ? 4 : 2) * num_vars + j;
}

int SatReduction::independent_size() const {
    return (instance.delta == 1 ? 4 : 2) * num_vars + num_clauses;
}

namespace {

Instance make_sat_instance(const CnfFormula& f, int delta, const SatReduction& layout) {
    const int n = f.num_vars;
    const int clique = layout.clique_size();
    const int total = clique + layout.independent_size();
    Graph g(total);

    for (int a = 0; a < clique; ++a)
        for (int b = a + 1; b < clique; ++b) g.add_edge(a, b);

    // non-edges between the clique and the independent set, as vertex pairs
    std::set<std::pair<int, int>> missing;
    const std::vector<int> zs = delta == 1 ? std::vector<int>{0, 1, 2, 3}
                                           : std::vector<int>{0, 3};
    for (int i = 0; i < n; ++i)
        for (int k : zs)
            for (int kp = 0; kp < 4; ++kp)
                if (kp != k) missing.insert({layout.z(i, k), layout.u(i, kp)});
    if (delta >= 2)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < delta - 1; ++j) {
                missing.insert({layout.z(i, 0), layout.block_d(i, j)});
                missing.insert({layout.z(i, 3), layout.block_a(i, j)});
            }
    for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
        const int vj = layout.clause_vertex(j);
        for (int lit : f.clauses[j]) {
            const int i = std::abs(lit) - 1;
            missing.insert({vj, layout.u(i, 0)});
            missing.insert({vj, layout.u(i, lit > 0 ? 1 : 2)});
            if (delta >= 2)
                for (int jj = 0; jj < delta - 1; ++jj) missing.insert({vj, layout.block_a(i, jj)});
        }
    }

    for (int zv = clique; zv < total; ++zv)
        for (int uv = 0; uv < clique; ++uv)
            if (!missing.count({zv, uv})) g.add_edge(zv, uv);

    return Instance(std::move(g), 2 * n, delta);
}

}  // namespace

SatReduction reduce_3sat(const CnfFormula& f, int delta) {
    if (delta < 1) throw ContractError("reduce_3sat: delta must be >= 1");
    if (f.num_vars < 1) throw DataError("reduce_3sat: formula needs at least one variable");
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw DataError("reduce_3sat: literal out of range");

    // layout helpers only need num_vars/num_clauses/delta; build a stub
    // instance first, then the real graph
    SatReduction r{Instance(Graph(0), 2 * f.num_vars, delta), f.num_vars,
                   static_cast<int>(f.clauses.size()), f, {}};
    r.instance = make_sat_instance(f, delta, r);

    static const char* kRole = "ABCD";
    for (int i = 0; i < f.num_vars; ++i) {
        for (int k = 0; k < 4; ++k)
            r.annotations[r.u(i, k)] = "u[" + std::to_string(i + 1) + "]." + kRole[k];
        for (int k : delta == 1 ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{0, 3})
            r.annotations[r.z(i, k)] = "z[" + std::to_string(i + 1) + "]." + kRole[k];
        for (int j = 0; j < delta - 1; ++j) {
            r.annotations[r.block_a(i, j)] =
                "UA[" + std::to_string(i + 1) + "]." + std::to_string(j);
            r.annotations[r.block_d(i, j)] =
                "UD[" + std::to_string(i + 1) + "]." + std::to_string(j);
        }
    }
    for (int j = 0; j < r.num_clauses; ++j)
        r.annotations[r.clause_vertex(j)] = "v[" + std::to_string(j + 1) + "]";
    return r;
}

Coloring witness_sat_forward(const SatReduction& r, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != r.num_vars)
        throw ContractError("sat forward: assignment size mismatch");
    const int delta = r.instance.delta;
    const int total = r.instance.graph.vertex_count();
    Coloring c(total, 0);

    for (int i = 0; i < r.num_vars; ++i) {
        const int low = 2 * i + 1, high = 2 * i + 2;
        c[r.u(i, 0)] = low;
        c[r.u(i, 1)] = assignment[i] ? low : high;
        c[r.u(i, 2)] = assignment[i] ? high : low;
        c[r.u(i, 3)] = high;
        for (int j = 0; j < delta - 1; ++j) {
            c[r.block_a(i, j)] = low;
            c[r.block_d(i, j)] = high;
        }
    }

    std::vector<std::vector<int>> clique_class(2 * r.num_vars + 1);
    for (int v = 0; v < r.clique_size(); ++v) clique_class[c[v]].push_back(v);

    for (int zv = r.clique_size(); zv < total; ++zv) {
        int chosen = 0;
        for (int color = 1; color <= 2 * r.num_vars && !chosen; ++color) {
            bool clear = true;
            for (int uv : clique_class[color])
                if (r.instance.graph.adjacent(zv, uv)) {
                    clear = false;
                    break;
                }
            if (clear) chosen = color;
        }
        if (!chosen) {
            const int j = zv - r.clause_vertex(0);
            if (j >= 0)
                throw WitnessError("sat forward: no color for clause vertex v[" +
                                   std::to_string(j + 1) +
                                   "]; the assignment does not satisfy that clause");
            throw std::logic_error("sat forward: blocker vertex has no color");
        }
        c[zv] = chosen;
    }

    if (!verify_coloring(r.instance, c).valid)
        throw std::logic_error("sat forward: constructed coloring is invalid");
    return c;
}

std::vector<bool> witness_sat_backward(const SatReduction& r, const Coloring& c) {
    if (!verify_coloring(r.instance, c).valid)
        throw ContractError("sat backward: coloring is not valid");

    std::vector<bool> assignment(r.num_vars);
    for (int i = 0; i < r.num_vars; ++i) assignment[i] = c[r.u(i, 0)] == c[r.u(i, 1)];

    if (!r.formula.satisfied_by(assignment))
        throw ExtractionError(
            "sat backward: recovered assignment does not satisfy the formula");
    return assignment;
}

// ---------------------------------------------------------------------------
// 3-Set-Splitting
// ---------------------------------------------------------------------------

SetSplittingInstance parse_set_splitting_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("set-splitting json: ") + e.what());
    }
    SetSplittingInstance ss;
    try {
        ss.universe_size = j.at("universe").get<int>();
        for (const auto& set : j.at("sets")) {
            if (set.size() != 3) throw DataError("set-splitting: sets must have 3 elements");
            std::array<int, 3> s{set[0].get<int>(), set[1].get<int>(), set[2].get<int>()};
            ss.sets.push_back(s);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("set-splitting json: ") + e.what());
    }
    for (const auto& s : ss.sets) {
        for (int x : s)
            if (x < 0 || x >= ss.universe_size)
                throw DataError("set-splitting: element out of range");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw DataError("set-splitting: repeated element in a set");
    }
    return ss;
}

int SetSplitReduction::c1(int set) const { return set; }
int SetSplitReduction::c2(int set) const { return num_sets + set; }
int SetSplitReduction::cstar(int k) const { return 2 * num_sets + k; }
int SetSplitReduction::cstar_size() const { return (instance.chi - 2) * (num_sets + 2); }
int SetSplitReduction::w(int element) const { return 2 * num_sets + cstar_size() + element; }
int SetSplitReduction::z_size() const { return instance.chi * (num_sets + 2); }
int SetSplitReduction::z1(int k) const {
    return 2 * num_sets + cstar_size() + universe_size + k;
}
int SetSplitReduction::z2(int k) const { return z1(k) + z_size(); }

SetSplitReduction reduce_set_splitting(const SetSplittingInstance& ss, int chi) {
    if (chi < 2) throw ContractError("reduce_set_splitting: chi must be >= 2");
    for (const auto& s : ss.sets) {
        for (int x : s)
            if (x < 0 || x >= ss.universe_size)
                throw DataError("reduce_set_splitting: element out of range");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw DataError("reduce_set_splitting: repeated element in a set");
    }

    const int f = static_cast<int>(ss.sets.size());
    SetSplitReduction r{Instance(Graph(0), chi, f + 1), f, ss.universe_size, ss.sets, {}};

    const int total = 2 * f + r.cstar_size() + ss.universe_size + 2 * r.z_size();
    Graph g(total);

    const int clique = 2 * f + r.cstar_size();
    for (int a = 0; a < clique; ++a)
        for (int b = a + 1; b < clique; ++b) g.add_edge(a, b);
    for (int s = 0; s < f; ++s)
        for (int x = 0; x < 3; ++x) {
            g.add_edge(r.c1(s), r.w(ss.sets[s][x]));
            g.add_edge(r.c2(s), r.w(ss.sets[s][x]));
        }
    for (int k = 0; k < r.z_size(); ++k) {
        for (int s = 0; s < f; ++s) {
            g.add_edge(r.c1(s), r.z1(k));
            g.add_edge(r.c2(s), r.z2(k));
        }
    }
    for (int k = 0; k < r.cstar_size(); ++k) {
        for (int x = 0; x < ss.universe_size; ++x) g.add_edge(r.cstar(k), r.w(x));
        for (int j = 0; j < r.z_size(); ++j) {
            g.add_edge(r.cstar(k), r.z1(j));
            g.add_edge(r.cstar(k), r.z2(j));
        }
    }

    r.instance = Instance(std::move(g), chi, f + 1);
    for (int s = 0; s < f; ++s) {
        r.annotations[r.c1(s)] = "C1[" + std::to_string(s) + "]";
        r.annotations[r.c2(s)] = "C2[" + std::to_string(s) + "]";
    }
    for (int k = 0; k < r.cstar_size(); ++k)
        r.annotations[r.cstar(k)] = "C*[" + std::to_string(k) + "]";
    for (int x = 0; x < ss.universe_size; ++x)
        r.annotations[r.w(x)] = "I[" + std::to_string(x) + "]";
    for (int k = 0; k < r.z_size(); ++k) {
        r.annotations[r.z1(k)] = "Z1[" + std::to_string(k) + "]";
        r.annotations[r.z2(k)] = "Z2[" + std::to_string(k) + "]";
    }
    return r;
}

Coloring set_split_coloring(const SetSplitReduction& r, const std::vector<bool>& in_u1) {
    if (static_cast<int>(in_u1.size()) != r.universe_size)
        throw ContractError("set-split coloring: partition size mismatch");
    Coloring c(r.instance.graph.vertex_count(), 0);
    for (int s = 0; s < r.num_sets; ++s) {
        c[r.c1(s)] = 1;
        c[r.c2(s)] = 2;
    }
    for (int k = 0; k < r.z_size(); ++k) {
        c[r.z2(k)] = 1;
        c[r.z1(k)] = 2;
    }
    for (int x = 0; x < r.universe_size; ++x) c[r.w(x)] = in_u1[x] ? 1 : 2;
    // the leftover clique splits equitably into blocks of delta+1
    for (int k = 0; k < r.cstar_size(); ++k) c[r.cstar(k)] = 3 + k / (r.num_sets + 2);
    return c;
}

Coloring witness_ss_forward(const SetSplitReduction& r, const std::vector<bool>& in_u1) {
    Coloring c = set_split_coloring(r, in_u1);
    const VerifyReport report = verify_coloring(r.instance, c);
    if (!report.valid)
        throw WitnessError("ss forward: partition does not split every set (vertex " +
                           std::to_string(*report.violating_vertex) + " reaches deficiency " +
                           std::to_string(report.max_deficiency) + ")");
    return c;
}

std::vector<bool> witness_ss_backward(const SetSplitReduction& r, const Coloring& c) {
    if (!verify_coloring(r.instance, c).valid)
        throw ContractError("ss backward: coloring is not valid");
    if (r.num_sets == 0)
        throw ExtractionError("ss backward: empty family leaves C1's color undefined");

    const int color1 = c[r.c1(0)];
    const int color2 = c[r.c2(0)];
    for (int s = 0; s < r.num_sets; ++s)
        if (c[r.c1(s)] != color1 || c[r.c2(s)] != color2)
            throw ExtractionError("ss backward: C1 or C2 is not monochromatic");
    if (color1 == color2)
        throw ExtractionError("ss backward: C1 and C2 share a color");

    std::vector<bool> in_u1(r.universe_size);
    for (int x = 0; x < r.universe_size; ++x) {
        if (c[r.w(x)] != color1 && c[r.w(x)] != color2)
            throw ExtractionError("ss backward: element vertex uses a C* color");
        in_u1[x] = c[r.w(x)] == color1;
    }
    for (const auto& set : r.sets) {
        bool hit1 = false, hit2 = false;
        for (int x : set) (in_u1[x] ? hit1 : hit2) = true;
        if (!hit1 || !hit2)
            throw ExtractionError("ss backward: recovered partition does not split a set");
    }
    return in_u1;
}

}  // namespace defco
