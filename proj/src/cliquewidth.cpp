#include "trienum/cliquewidth.hpp"

#include "trienum/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace trienum {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0, line = 1, col = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size()) {
            if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at column " + std::to_string(col), line);
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        return text[pos];
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            out += text[pos];
            advance();
        }
        if (out.empty()) fail("expected operation name");
        return out;
    }

    int number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected label");
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            advance();
        }
        return value;
    }
};

struct Parser {
    Lexer lex;
    KExpression expr;

    int parse_node() {
        std::size_t at_line = lex.line, at_col = lex.col;
        std::string op = lex.ident();
        lex.expect('(');
        KExpression::Node node;
        if (op == "v") {
            node.kind = KExpression::Kind::CreateVertex;
            node.label_i = lex.number();
        } else if (op == "u") {
            node.kind = KExpression::Kind::Union;
            node.left = parse_node();
            lex.expect(',');
            node.right = parse_node();
        } else if (op == "eta" || op == "rho") {
            node.kind = op == "eta" ? KExpression::Kind::InsertEdges : KExpression::Kind::Rename;
            node.label_i = lex.number();
            lex.expect(',');
            node.label_j = lex.number();
            lex.expect(',');
            node.left = parse_node();
            if (node.kind == KExpression::Kind::InsertEdges && node.label_i == node.label_j)
                throw ParseError("eta with equal labels at column " + std::to_string(at_col),
                                 at_line);
        } else {
            throw ParseError("unknown operation '" + op + "' at column " + std::to_string(at_col),
                             at_line);
        }
        lex.expect(')');
        bool labels_ok = node.kind == KExpression::Kind::Union ||
                         (node.label_i >= 1 && (node.kind == KExpression::Kind::CreateVertex ||
                                                node.label_j >= 1));
        if (!labels_ok)
            throw ParseError("labels must be >= 1 at column " + std::to_string(at_col), at_line);
        expr.width = std::max({expr.width, node.label_i, node.label_j});
        expr.nodes.push_back(node);
        return static_cast<int>(expr.nodes.size()) - 1;
    }
};

} // namespace

KExpression parse_kexpression(const std::string& text) {
    Parser p{Lexer{text}, {}};
    p.expr.root = p.parse_node();
    if (!p.lex.at_end()) p.lex.fail("trailing input");
    return p.expr;
}

namespace {

// vertex -> current label, for one subexpression
using Labeled = std::vector<std::pair<Vertex, int>>;

Labeled eval_rec(const KExpression& e, int node, int& next_vertex, std::set<Edge>& edges) {
    const auto& nd = e.nodes[node];
    switch (nd.kind) {
    case KExpression::Kind::CreateVertex:
        return {{next_vertex++, nd.label_i}};
    case KExpression::Kind::Union: {
        Labeled lhs = eval_rec(e, nd.left, next_vertex, edges);
        Labeled rhs = eval_rec(e, nd.right, next_vertex, edges);
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        return lhs;
    }
    case KExpression::Kind::InsertEdges: {
        Labeled sub = eval_rec(e, nd.left, next_vertex, edges);
        for (auto [x, lx] : sub)
            for (auto [y, ly] : sub)
                if (x < y && ((lx == nd.label_i && ly == nd.label_j) ||
                              (lx == nd.label_j && ly == nd.label_i)))
                    edges.insert({x, y}); // re-inserting an existing pair is a no-op
        return sub;
    }
    case KExpression::Kind::Rename: {
        Labeled sub = eval_rec(e, nd.left, next_vertex, edges);
        for (auto& [v, l] : sub)
            if (l == nd.label_i) l = nd.label_j;
        return sub;
    }
    }
    return {};
}

} // namespace

Graph eval_kexpression(const KExpression& e) {
    std::set<Edge> edges;
    int next_vertex = 0;
    eval_rec(e, e.root, next_vertex, edges);
    return Graph::from_edges(next_vertex, {edges.begin(), edges.end()});
}

namespace {

struct DecompBuilder {
    const KExpression& expr;
    Decomposition decomp;
    int next_vertex = 0;
    std::vector<std::map<Vertex, int>> labels; // per decomp node, vertex -> label

    // Groups a node's vertices by their (now final) label into twin classes.
    void finalize(int idx) {
        auto& node = decomp.nodes[idx];
        std::map<int, std::vector<Vertex>> by_label;
        for (Vertex v : node.vertices) by_label[labels[idx].at(v)].push_back(v);
        int max_vertex = node.vertices.back();
        node.class_of.assign(max_vertex + 1, -1);
        for (auto& [label, members] : by_label) {
            std::sort(members.begin(), members.end());
            for (Vertex v : members) node.class_of[v] = static_cast<int>(node.classes.size());
            node.classes.push_back(members);
        }
        if (static_cast<int>(node.classes.size()) > expr.width)
            throw PreconditionError("twin-class count exceeds expression width");
        auto map_child = [&](int child, std::vector<int>& out) {
            if (child < 0) return;
            const auto& cn = decomp.nodes[child];
            out.resize(cn.classes.size());
            for (std::size_t c = 0; c < cn.classes.size(); ++c)
                out[c] = node.class_of[cn.classes[c].front()];
        };
        map_child(node.left, node.child_class_map_left);
        map_child(node.right, node.child_class_map_right);
    }

    int walk(int enode) {
        const auto& nd = expr.nodes[enode];
        switch (nd.kind) {
        case KExpression::Kind::CreateVertex: {
            DecompNode leaf;
            Vertex v = next_vertex++;
            leaf.vertices = {v};
            decomp.nodes.push_back(std::move(leaf));
            labels.push_back({{v, nd.label_i}});
            return static_cast<int>(decomp.nodes.size()) - 1;
        }
        case KExpression::Kind::Union: {
            int l = walk(nd.left);
            int r = walk(nd.right);
            // children's fold chains are complete here; snapshot their classes
            finalize(l);
            finalize(r);
            DecompNode inner;
            inner.left = l;
            inner.right = r;
            std::map<Vertex, int> merged = labels[l];
            merged.insert(labels[r].begin(), labels[r].end());
            inner.vertices.reserve(merged.size());
            for (const auto& [v, lab] : merged) inner.vertices.push_back(v);
            decomp.nodes.push_back(std::move(inner));
            labels.push_back(std::move(merged));
            return static_cast<int>(decomp.nodes.size()) - 1;
        }
        case KExpression::Kind::InsertEdges:
            return walk(nd.left); // edges do not move labels; fold into child
        case KExpression::Kind::Rename: {
            int c = walk(nd.left);
            for (auto& [v, lab] : labels[c])
                if (lab == nd.label_i) lab = nd.label_j;
            return c;
        }
        }
        return -1;
    }
};

} // namespace

Decomposition binarize_decomposition(const KExpression& e) {
    DecompBuilder builder{e, {}, 0, {}};
    builder.decomp.root = builder.walk(e.root);
    builder.finalize(builder.decomp.root);
    return builder.decomp;
}

namespace {

struct CwDp {
    const Graph& g;
    Decomposition& decomp;
    bool verify_twin_property;
    TriangleSet triangles;

    // All-or-nothing cross-sibling edge test: one representative pair decides.
    bool cross_edge(const std::vector<Vertex>& qa, const std::vector<Vertex>& qb) const {
        bool present = g.has_edge(qa.front(), qb.front());
        if (verify_twin_property) {
            for (Vertex x : qa)
                for (Vertex y : qb)
                    if (g.has_edge(x, y) != present)
                        throw PreconditionError("twin-class property violated");
        }
        return present;
    }

    void run(int idx) {
        auto& node = decomp.nodes[idx];
        if (node.left < 0) return; // leaf: empty edge sets, no triangles
        run(node.left);
        run(node.right);
        auto& lhs = decomp.nodes[node.left];
        auto& rhs = decomp.nodes[node.right];
        const int hl = static_cast<int>(lhs.classes.size());
        const int hr = static_cast<int>(rhs.classes.size());

        // F_{u,a,w,b} for all sibling class pairs
        std::vector<std::vector<bool>> cross(hl, std::vector<bool>(hr, false));
        for (int a = 0; a < hl; ++a)
            for (int b = 0; b < hr; ++b) cross[a][b] = cross_edge(lhs.classes[a], rhs.classes[b]);

        // E^v_{i,j}: children's sets mapped through the class containment
        // maps, plus the cross-sibling complete class-pair sets.
        auto lift = [&](const DecompNode& child, const std::vector<int>& cmap) {
            for (const auto& [key, edges] : child.edge_sets) {
                int i = cmap[key.first], j = cmap[key.second];
                bool flip = i > j;
                if (flip) std::swap(i, j);
                auto& dst = node.edge_sets[{i, j}];
                for (auto [x, y] : edges) dst.emplace_back(flip ? y : x, flip ? x : y);
            }
        };
        lift(lhs, node.child_class_map_left);
        lift(rhs, node.child_class_map_right);
        for (int a = 0; a < hl; ++a)
            for (int b = 0; b < hr; ++b) {
                if (!cross[a][b]) continue;
                int i = node.child_class_map_left[a];
                int j = node.child_class_map_right[b];
                bool flip = i > j;
                auto& dst = node.edge_sets[{std::min(i, j), std::max(i, j)}];
                for (Vertex x : lhs.classes[a])
                    for (Vertex y : rhs.classes[b])
                        dst.emplace_back(flip ? y : x, flip ? x : y);
            }

        // LT_{x,x,y}: two vertices from one child joined by a stored edge,
        // third from a class of the sibling connected to both.
        auto new_triangles = [&](const DecompNode& two, const DecompNode& one, bool two_is_left) {
            const int h2 = static_cast<int>(two.classes.size());
            const int h1 = static_cast<int>(one.classes.size());
            for (int o = 0; o < h2; ++o)
                for (int p = o; p < h2; ++p) {
                    auto it = two.edge_sets.find({o, p});
                    if (it == two.edge_sets.end()) continue;
                    for (int q = 0; q < h1; ++q) {
                        bool fo = two_is_left ? cross[o][q] : cross[q][o];
                        bool fp = two_is_left ? cross[p][q] : cross[q][p];
                        if (!fo || !fp) continue;
                        for (auto [a, b] : it->second)
                            for (Vertex c : one.classes[q]) triangles.add(Triangle::of(a, b, c));
                    }
                }
        };
        new_triangles(lhs, rhs, true);
        new_triangles(rhs, lhs, false);
    }
};

} // namespace

TriangleSet cw_enumerate(const KExpression& e, bool verify_twin_property) {
    Graph g = eval_kexpression(e);
    Decomposition decomp = binarize_decomposition(e);
    CwDp dp{g, decomp, verify_twin_property, {}};
    dp.run(decomp.root);
    dp.triangles.canonicalize(); // each triangle found once, at the LCA
    return dp.triangles;
}

namespace {

int cotree_to_kexpr(const Cotree& t, int node, KExpression& e,
                    std::vector<Vertex>* leaf_to_host) {
    const auto& nd = t.nodes[node];
    auto push = [&](KExpression::Node n) {
        e.nodes.push_back(n);
        return static_cast<int>(e.nodes.size()) - 1;
    };
    if (nd.kind == Cotree::Kind::Leaf) {
        if (leaf_to_host) leaf_to_host->push_back(nd.vertex);
        return push({KExpression::Kind::CreateVertex, 1, 0, -1, -1});
    }
    int lhs = cotree_to_kexpr(t, nd.left, e, leaf_to_host);
    int rhs = cotree_to_kexpr(t, nd.right, e, leaf_to_host);
    if (nd.kind == Cotree::Kind::Union)
        return push({KExpression::Kind::Union, 0, 0, lhs, rhs});
    // join = rho(2,1, eta(1,2, u(lhs, rho(1,2,rhs))))
    int relabeled = push({KExpression::Kind::Rename, 1, 2, rhs, -1});
    int both = push({KExpression::Kind::Union, 0, 0, lhs, relabeled});
    int joined = push({KExpression::Kind::InsertEdges, 1, 2, both, -1});
    return push({KExpression::Kind::Rename, 2, 1, joined, -1});
}

} // namespace

KExpression kexpression_from_cograph(const Graph& g, std::vector<Vertex>* leaf_to_host) {
    auto cotree = build_cotree(g);
    if (!cotree.is_cograph)
        throw NotCographError("graph has an induced P4; no cotree exists");
    KExpression e;
    if (g.vertex_count() == 0) throw NotCographError("empty graph has no k-expression");
    e.root = cotree_to_kexpr(cotree.tree, cotree.tree.root, e, leaf_to_host);
    for (const auto& nd : e.nodes)
        e.width = std::max({e.width, nd.label_i, nd.label_j});
    return e;
}

} // namespace trienum
