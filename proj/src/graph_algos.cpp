#include "trienum/graph_algos.hpp"

#include "trienum/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace trienum {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    DegeneracyOrdering out;
    out.order.reserve(n);
    std::vector<bool> peeled(n, false);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        out.degeneracy = std::max(out.degeneracy, d);
        out.order.push_back(v);
        peeled[v] = true;
        for (Vertex w : g.neighbors(v)) {
            if (peeled[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return out;
}

bool is_d_degenerate(const Graph& g, int d) {
    if (g.vertex_count() == 0) return true;
    return degeneracy_ordering(g).degeneracy <= d;
}

std::vector<Edge> feedback_edge_set(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::set<Edge> tree;
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::queue<Vertex> bfs;
        bfs.push(root);
        visited[root] = true;
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : g.neighbors(v)) {
                if (visited[w]) continue;
                visited[w] = true;
                tree.insert({std::min(v, w), std::max(v, w)});
                bfs.push(w);
            }
        }
    }
    std::vector<Edge> out;
    for (Edge e : g.edges())
        if (!tree.count(e)) out.push_back(e);
    return out;
}

std::vector<Vertex> spanning_forest_parents(const Graph& g, const std::vector<Edge>& F) {
    const int n = g.vertex_count();
    std::set<Edge> excluded(F.begin(), F.end());
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> visited(n, false);
    long long tree_edges = 0;
    int components = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        ++components;
        std::queue<Vertex> bfs;
        bfs.push(root);
        visited[root] = true;
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : g.neighbors(v)) {
                if (visited[w] || excluded.count({std::min(v, w), std::max(v, w)})) continue;
                visited[w] = true;
                parent[w] = v;
                ++tree_edges;
                bfs.push(w);
            }
        }
    }
    if (tree_edges != g.edge_count() - static_cast<long long>(excluded.size()))
        throw NotFeedbackSetError("graph minus F still contains a cycle");
    (void)components;
    return parent;
}

DeletionSet greedy_ddeg_deletion_set(const Graph& g, int d) {
    DeletionSet out;
    out.target = TargetClass::DDegenerate;
    out.d = d;
    const int n = g.vertex_count();
    std::vector<bool> gone(n, false);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    auto remaining = [&] {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v]) keep.push_back(v);
        return keep;
    };
    while (!is_d_degenerate(g.induced_subgraph(remaining()), d)) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] > deg[best])) best = v;
        gone[best] = true;
        out.vertices.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!gone[w]) --deg[w];
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

std::vector<std::vector<Vertex>> modules_wrt(const Graph& g, const std::vector<Vertex>& D) {
    const int n = g.vertex_count();
    std::vector<bool> in_d(n, false);
    for (Vertex v : D) in_d[v] = true;
    for (auto [u, v] : g.edges())
        if (!in_d[u] && !in_d[v])
            throw EdgeOutsideDError("edge with no endpoint in D");
    std::map<std::vector<Vertex>, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        std::vector<Vertex> sig(g.neighbors(v).begin(), g.neighbors(v).end());
        parts[sig].push_back(v);
    }
    std::vector<std::vector<Vertex>> out;
    out.reserve(parts.size());
    for (auto& [sig, members] : parts) out.push_back(std::move(members));
    // deterministic order: by representative (each part is ascending already)
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

PeoResult perfect_elimination_ordering(const Graph& g) {
    const int n = g.vertex_count();
    PeoResult res;
    // Maximum cardinality search; the reverse visit order is the candidate PEO.
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::set<std::pair<int, Vertex>> queue; // (-weight, id) ascending
    for (Vertex v = 0; v < n; ++v) queue.insert({0, v});
    std::vector<Vertex> visit;
    visit.reserve(n);
    while (!queue.empty()) {
        auto [negw, v] = *queue.begin();
        queue.erase(queue.begin());
        visited[v] = true;
        visit.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (visited[w]) continue;
            queue.erase({-weight[w], w});
            ++weight[w];
            queue.insert({-weight[w], w});
        }
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());
    // Verification pass is the sole chordality judge.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (Vertex v : order) {
        Vertex pivot = -1;
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] <= pos[v]) continue;
            later.push_back(w);
            if (pivot < 0 || pos[w] < pos[pivot]) pivot = w;
        }
        for (Vertex w : later) {
            if (w == pivot) continue;
            if (!g.has_edge(pivot, w)) {
                res.chordal = false;
                res.failed_vertex = v;
                res.missing_edge = {pivot, w};
                return res;
            }
        }
    }
    res.chordal = true;
    res.order = std::move(order);
    return res;
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    BipartitionResult res;
    res.side.assign(n, -1);
    std::vector<Vertex> parent(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (res.side[root] >= 0) continue;
        res.side[root] = 0;
        std::queue<Vertex> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : g.neighbors(v)) {
                if (res.side[w] < 0) {
                    res.side[w] = 1 - res.side[v];
                    parent[w] = v;
                    bfs.push(w);
                } else if (res.side[w] == res.side[v]) {
                    // Walk both BFS branches up to the meeting point.
                    std::vector<Vertex> pv{v}, pw{w};
                    auto depth = [&](Vertex x) {
                        int d = 0;
                        for (Vertex y = x; parent[y] >= 0; y = parent[y]) ++d;
                        return d;
                    };
                    Vertex a = v, b = w;
                    int da = depth(a), db = depth(b);
                    while (da > db) { a = parent[a]; pv.push_back(a); --da; }
                    while (db > da) { b = parent[b]; pw.push_back(b); --db; }
                    while (a != b) {
                        a = parent[a]; pv.push_back(a);
                        b = parent[b]; pw.push_back(b);
                    }
                    res.odd_cycle.assign(pv.begin(), pv.end());
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

namespace {

std::vector<std::vector<Vertex>> components_of(const std::vector<Vertex>& verts,
                                               const std::vector<std::vector<Vertex>>& adj) {
    std::map<Vertex, int> comp;
    std::vector<std::vector<Vertex>> out;
    for (Vertex root : verts) {
        if (comp.count(root)) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> bfs;
        bfs.push(root);
        comp[root] = c;
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            out[c].push_back(v);
            for (Vertex w : adj[v]) {
                if (comp.count(w)) continue;
                comp[w] = c;
                bfs.push(w);
            }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

struct CotreeBuilder {
    const Graph& g;
    Cotree tree;
    std::array<Vertex, 4> p4{-1, -1, -1, -1};
    bool failed = false;

    int leaf(Vertex v) {
        tree.nodes.push_back({Cotree::Kind::Leaf, v, -1, -1});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int inner(Cotree::Kind kind, int l, int r) {
        tree.nodes.push_back({kind, -1, l, r});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int chain(Cotree::Kind kind, const std::vector<int>& parts) {
        int acc = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) acc = inner(kind, acc, parts[i]);
        return acc;
    }

    int build(const std::vector<Vertex>& verts) {
        if (verts.size() == 1) return leaf(verts[0]);
        std::vector<std::vector<Vertex>> adj(g.vertex_count()), coadj(g.vertex_count());
        std::set<Vertex> inside(verts.begin(), verts.end());
        for (Vertex u : verts)
            for (Vertex v : verts) {
                if (u >= v) continue;
                if (g.has_edge(u, v)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                } else {
                    coadj[u].push_back(v);
                    coadj[v].push_back(u);
                }
            }
        auto comps = components_of(verts, adj);
        if (comps.size() > 1) {
            std::vector<int> parts;
            for (const auto& c : comps) {
                parts.push_back(build(c));
                if (failed) return -1;
            }
            return chain(Cotree::Kind::Union, parts);
        }
        auto cocomps = components_of(verts, coadj);
        if (cocomps.size() > 1) {
            std::vector<int> parts;
            for (const auto& c : cocomps) {
                parts.push_back(build(c));
                if (failed) return -1;
            }
            return chain(Cotree::Kind::Join, parts);
        }
        // connected and co-connected with >= 2 vertices: holds an induced P4
        auto witness = find_induced_p4(g.induced_subgraph(verts));
        failed = true;
        if (witness) {
            for (int i = 0; i < 4; ++i) p4[i] = verts[(*witness)[i]];
        }
        return -1;
    }
};

} // namespace

CotreeResult build_cotree(const Graph& g) {
    CotreeResult res;
    if (g.vertex_count() == 0) {
        res.is_cograph = true;
        return res;
    }
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    CotreeBuilder builder{g, {}};
    int root = builder.build(all);
    if (builder.failed) {
        res.is_cograph = false;
        res.p4 = builder.p4;
        return res;
    }
    res.is_cograph = true;
    res.tree = std::move(builder.tree);
    res.tree.root = root;
    return res;
}

namespace {

std::vector<Vertex> eval_cotree_rec(const Cotree& t, int node, std::set<Edge>& edges) {
    const auto& nd = t.nodes[node];
    if (nd.kind == Cotree::Kind::Leaf) return {nd.vertex};
    auto lhs = eval_cotree_rec(t, nd.left, edges);
    auto rhs = eval_cotree_rec(t, nd.right, edges);
    if (nd.kind == Cotree::Kind::Join)
        for (Vertex u : lhs)
            for (Vertex v : rhs) edges.insert({std::min(u, v), std::max(u, v)});
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
}

} // namespace

Graph eval_cotree(const Cotree& t, int vertex_count) {
    std::set<Edge> edges;
    if (t.root >= 0) eval_cotree_rec(t, t.root, edges);
    return Graph::from_edges(vertex_count, {edges.begin(), edges.end()});
}

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 2000)
        throw UnsupportedError("induced-P4 scan refuses graphs with more than 2000 vertices");
    for (Vertex b = 0; b < n; ++b) {
        for (Vertex c : g.neighbors(b)) {
            for (Vertex a : g.neighbors(b)) {
                if (a == c || g.has_edge(a, c)) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d == a || d == b || g.has_edge(d, b) || g.has_edge(a, d)) continue;
                    return std::array<Vertex, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

DeletionSet cograph_deletion_set(const Graph& g) {
    DeletionSet out;
    out.target = TargetClass::Cograph;
    const int n = g.vertex_count();
    std::vector<bool> gone(n, false);
    while (true) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v]) keep.push_back(v);
        auto p4 = find_induced_p4(g.induced_subgraph(keep));
        if (!p4) break;
        for (Vertex local : *p4) {
            gone[keep[local]] = true;
            out.vertices.push_back(keep[local]);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

bool is_acyclic(const Graph& g) { return feedback_edge_set(g).empty(); }

int connected_component_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> visited(n, false);
    int count = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        ++count;
        std::queue<Vertex> bfs;
        bfs.push(root);
        visited[root] = true;
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : g.neighbors(v))
                if (!visited[w]) {
                    visited[w] = true;
                    bfs.push(w);
                }
        }
    }
    return count;
}

} // namespace trienum
