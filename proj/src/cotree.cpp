#include "defco/cotree.hpp"

#include <algorithm>
#include <sstream>

namespace defco {

int Cotree::add_leaf(int vertex) {
    nodes.push_back(CotreeNode{CotreeKind::kLeaf, vertex, {}});
    return static_cast<int>(nodes.size()) - 1;
}

int Cotree::add_internal(CotreeKind kind, std::vector<int> children) {
    if (kind == CotreeKind::kLeaf || children.size() < 2)
        throw ContractError("cotree: internal node needs a kind and >= 2 children");
    nodes.push_back(CotreeNode{kind, -1, std::move(children)});
    return static_cast<int>(nodes.size()) - 1;
}

int Cotree::leaf_count() const {
    int count = 0;
    for (const auto& node : nodes)
        if (node.kind == CotreeKind::kLeaf) ++count;
    return count;
}

namespace {

// Connected components of g restricted to `verts`; complement components when
// `in_complement` is set.
std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& verts,
                                         bool in_complement) {
    std::vector<int> in_set(g.vertex_count(), 0);
    for (int v : verts) in_set[v] = 1;
    std::vector<int> seen(g.vertex_count(), 0);
    std::vector<std::vector<int>> result;

    for (int start : verts) {
        if (seen[start]) continue;
        std::vector<int> queue{start};
        seen[start] = 1;
        std::vector<int> comp;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            for (int w : verts) {
                if (seen[w]) continue;
                const bool edge = g.adjacent(u, w);
                if (in_complement ? !edge : edge) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

// Any connected co-connected set of >= 2 vertices induces a P4; scan the
// 4-subsets for the 3-edge degree-(1,1,2,2) pattern and order it as a path.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d) {
                    const std::array<int, 4> q{verts[a], verts[b], verts[c], verts[d]};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    int ends[2], mids[2], ne = 0, nm = 0;
                    bool shape_ok = true;
                    for (int i = 0; i < 4; ++i) {
                        if (deg[i] == 1)
                            ends[std::min(ne++, 1)] = i;
                        else if (deg[i] == 2)
                            mids[std::min(nm++, 1)] = i;
                        else
                            shape_ok = false;
                    }
                    if (!shape_ok || ne != 2 || nm != 2) continue;
                    // order: end, its mid neighbor, the other mid, other end
                    const int first = ends[0];
                    const int second = g.adjacent(q[first], q[mids[0]]) ? mids[0] : mids[1];
                    const int third = second == mids[0] ? mids[1] : mids[0];
                    return std::array<int, 4>{q[first], q[second], q[third], q[ends[1]]};
                }
    return std::nullopt;
}

int build_rec(const Graph& g, const std::vector<int>& verts, Cotree& out,
              std::array<int, 4>& p4) {
    if (verts.size() == 1) return out.add_leaf(verts[0]);

    auto comps = components(g, verts, false);
    if (comps.size() > 1) {
        std::vector<int> children;
        for (const auto& comp : comps) {
            int child = build_rec(g, comp, out, p4);
            if (child < 0) return -1;
            children.push_back(child);
        }
        return out.add_internal(CotreeKind::kUnion, std::move(children));
    }

    auto cocomps = components(g, verts, true);
    if (cocomps.size() > 1) {
        std::vector<int> children;
        for (const auto& comp : cocomps) {
            int child = build_rec(g, comp, out, p4);
            if (child < 0) return -1;
            children.push_back(child);
        }
        return out.add_internal(CotreeKind::kJoin, std::move(children));
    }

    auto witness = find_induced_p4(g, verts);
    if (!witness)
        throw std::logic_error("build_cotree: connected co-connected set without a P4");
    p4 = *witness;
    return -1;
}

}  // namespace

CotreeBuild build_cotree(const Graph& g) {
    CotreeBuild result;
    Cotree tree;
    if (g.vertex_count() == 0) {
        result.cotree = std::move(tree);  // empty graph: empty cotree
        return result;
    }
    std::vector<int> verts(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) verts[i] = i;

    std::array<int, 4> p4{-1, -1, -1, -1};
    const int root = build_rec(g, verts, tree, p4);
    if (root < 0) {
        result.p4 = p4;
        return result;
    }
    tree.root = root;
    result.cotree = std::move(tree);
    return result;
}

namespace {

void collect_leaves(const Cotree& t, int node, std::vector<int>& out) {
    const CotreeNode& nd = t.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) {
        out.push_back(nd.vertex);
        return;
    }
    for (int child : nd.children) collect_leaves(t, child, out);
}

void eval_rec(const Cotree& t, int node, Graph& g, std::vector<int>& leaves_out) {
    const CotreeNode& nd = t.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) {
        leaves_out.push_back(nd.vertex);
        return;
    }
    std::vector<std::vector<int>> child_leaves(nd.children.size());
    for (size_t i = 0; i < nd.children.size(); ++i) {
        eval_rec(t, nd.children[i], g, child_leaves[i]);
        leaves_out.insert(leaves_out.end(), child_leaves[i].begin(), child_leaves[i].end());
    }
    if (nd.kind == CotreeKind::kJoin) {
        for (size_t i = 0; i < child_leaves.size(); ++i)
            for (size_t j = i + 1; j < child_leaves.size(); ++j)
                for (int u : child_leaves[i])
                    for (int v : child_leaves[j]) g.add_edge(u, v);
    }
}

}  // namespace

Graph eval_cotree(const Cotree& t) {
    if (t.root < 0) return Graph(0);
    std::vector<int> leaves;
    collect_leaves(t, t.root, leaves);
    const int n = static_cast<int>(leaves.size());

    std::vector<int> seen(n, 0);
    for (int v : leaves) {
        if (v < 0 || v >= n) throw DataError("cotree: leaf id " + std::to_string(v) +
                                             " outside 0.." + std::to_string(n - 1));
        if (seen[v]++) throw DataError("cotree: duplicate leaf id " + std::to_string(v));
    }

    Graph g(n);
    std::vector<int> scratch;
    eval_rec(t, t.root, g, scratch);
    return g;
}

namespace {

int binarize_rec(const Cotree& t, int node, Cotree& out) {
    const CotreeNode& nd = t.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) return out.add_leaf(nd.vertex);
    int acc = binarize_rec(t, nd.children[0], out);
    for (size_t i = 1; i < nd.children.size(); ++i) {
        int next = binarize_rec(t, nd.children[i], out);
        acc = out.add_internal(nd.kind, {acc, next});
    }
    return acc;
}

int omega_rec(const Cotree& t, int node) {
    const CotreeNode& nd = t.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) return 1;
    int result = nd.kind == CotreeKind::kJoin ? 0 : 1;
    for (int child : nd.children) {
        const int w = omega_rec(t, child);
        result = nd.kind == CotreeKind::kJoin ? result + w : std::max(result, w);
    }
    return result;
}

}  // namespace

Cotree binarize(const Cotree& t) {
    Cotree out;
    if (t.root < 0) return out;
    out.root = binarize_rec(t, t.root, out);
    return out;
}

int omega_cotree(const Cotree& t) {
    if (t.root < 0) return 0;
    return omega_rec(t, t.root);
}

namespace {

struct SexprParser {
    const std::string& text;
    size_t pos = 0;

    explicit SexprParser(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string next_atom() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) throw ParseError("cotree: expected atom at offset " + std::to_string(pos));
        return text.substr(start, pos - start);
    }

    int parse_leaf_atom(const std::string& atom, Cotree& out) {
        if (atom.size() < 2 || atom[0] != 'v')
            throw ParseError("cotree: bad atom '" + atom + "'");
        int id = 0;
        try {
            id = std::stoi(atom.substr(1));
        } catch (const std::exception&) {
            throw ParseError("cotree: bad leaf atom '" + atom + "'");
        }
        return out.add_leaf(id);
    }

    int parse_node(Cotree& out) {
        skip_ws();
        if (pos >= text.size()) throw ParseError("cotree: unexpected end of input");
        if (text[pos] != '(') return parse_leaf_atom(next_atom(), out);

        ++pos;  // consume '('
        const std::string head = next_atom();
        CotreeKind kind;
        if (head == "J")
            kind = CotreeKind::kJoin;
        else if (head == "U")
            kind = CotreeKind::kUnion;
        else
            throw ParseError("cotree: unknown operator '" + head + "'");

        std::vector<int> children;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("cotree: missing ')'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            children.push_back(parse_node(out));
        }
        if (children.size() < 2)
            throw ParseError("cotree: operator '" + head + "' needs >= 2 children");
        return out.add_internal(kind, std::move(children));
    }
};

void to_sexpr_rec(const Cotree& t, int node, std::ostringstream& out) {
    const CotreeNode& nd = t.nodes[node];
    if (nd.kind == CotreeKind::kLeaf) {
        out << 'v' << nd.vertex;
        return;
    }
    out << '(' << (nd.kind == CotreeKind::kJoin ? 'J' : 'U');
    for (int child : nd.children) {
        out << ' ';
        to_sexpr_rec(t, child, out);
    }
    out << ')';
}

}  // namespace

Cotree parse_cotree(const std::string& text) {
    Cotree out;
    SexprParser parser(text);
    out.root = parser.parse_node(out);
    parser.skip_ws();
    if (parser.pos != text.size()) throw ParseError("cotree: trailing input");
    eval_cotree(out);  // validates leaf ids 0..n-1, no duplicates
    return out;
}

std::string to_sexpr(const Cotree& t) {
    if (t.root < 0) return "";
    std::ostringstream out;
    to_sexpr_rec(t, t.root, out);
    return out.str();
}

}  // namespace defco
