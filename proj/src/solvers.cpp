#include "trienum/solvers.hpp"

#include "trienum/errors.hpp"
#include "trienum/kernels.hpp"
#include "trienum/oracle.hpp"

#include <algorithm>

namespace trienum {

TriangleSet solve_degeneracy(const Graph& g) {
    auto ordering = degeneracy_ordering(g);
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ordering.order[i]] = i;
    std::vector<std::vector<Vertex>> later(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) later[v].push_back(w);
    TriangleSet out;
    std::vector<bool> marked(n, false);
    for (Vertex v : ordering.order) {
        for (Vertex u : later[v]) marked[u] = true;
        for (Vertex u : later[v])
            for (Vertex w : later[u])
                if (marked[w]) out.add(Triangle::of(v, u, w));
        for (Vertex u : later[v]) marked[u] = false;
    }
    out.canonicalize();
    return out;
}

namespace {

TriangleSet expand_all(const EnumAdviceKernel& kernel) {
    TriangleSet out;
    const TriangleSet kernel_triangles = enumerate_edge_intersect(kernel.kernel_graph);
    for (const Triangle& kt : kernel_triangles.items())
        for (const Triangle& t : expand(kernel, kt)) out.add(t);
    out.canonicalize(); // disjointness of expansions makes duplicates impossible
    return out;
}

} // namespace

TriangleSet solve_fes(const Graph& g) { return expand_all(fes_kernelize(g)); }

TriangleSet solve_dtdd(const Graph& g, const DeletionSet& D) {
    return expand_all(dtdd_kernelize(g, D));
}

TriangleSet solve_dtdd_maxdeg(const Graph& g, const DeletionSet& D) {
    if (D.target != TargetClass::DDegenerate)
        throw NotDeletionSetError("deletion set is not tagged d-degenerate");
    auto [rest, keep] = g.remove_vertices(D.vertices);
    if (!is_d_degenerate(rest, D.d))
        throw NotDeletionSetError("g - D is not " + std::to_string(D.d) + "-degenerate");

    TriangleSet out;
    // Step 1: triangles avoiding D entirely.
    const TriangleSet rest_triangles = solve_degeneracy(rest);
    for (const Triangle& t : rest_triangles.items())
        out.add(Triangle::of(keep[t.a], keep[t.b], keep[t.c]));

    // Step 2: order <_a puts D (ascending) before everything else; scan
    // neighbor pairs of each u in D and keep {u,v,w} iff {v,w} is an edge
    // and u <_a v <_a w.
    const int n = g.vertex_count();
    std::vector<int> rank(n);
    {
        std::vector<bool> in_d(n, false);
        for (Vertex v : D.vertices) in_d[v] = true;
        int next = 0;
        for (Vertex v : D.vertices) rank[v] = next++;
        for (Vertex v = 0; v < n; ++v)
            if (!in_d[v]) rank[v] = next++;
    }
    for (Vertex u : D.vertices) {
        auto adj = g.neighbors(u);
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j) {
                Vertex v = adj[i], w = adj[j];
                if (rank[v] > rank[w]) std::swap(v, w);
                if (rank[u] < rank[v] && g.has_edge(v, w)) out.add(Triangle::of(u, v, w));
            }
    }
    out.canonicalize();
    return out;
}

TriangleSet triangles_touching(const Graph& g, const std::vector<Vertex>& K) {
    const int n = g.vertex_count();
    std::vector<int> k_rank(n, -1); // fixed order <=_a: ascending id inside K
    {
        std::vector<Vertex> sorted_k = K;
        std::sort(sorted_k.begin(), sorted_k.end());
        for (std::size_t i = 0; i < sorted_k.size(); ++i) k_rank[sorted_k[i]] = static_cast<int>(i);
    }
    TriangleSet out;
    std::vector<bool> marked(n, false);
    auto edges = g.edges();
    for (Vertex v = 0; v < n; ++v) {
        if (k_rank[v] < 0) continue;
        for (Vertex w : g.neighbors(v)) marked[w] = true;
        for (auto [u, w] : edges) {
            if (!marked[u] || !marked[w]) continue;
            if (k_rank[u] >= 0 && k_rank[u] < k_rank[v]) continue;
            if (k_rank[w] >= 0 && k_rank[w] < k_rank[v]) continue;
            out.add(Triangle::of(v, u, w));
        }
        for (Vertex w : g.neighbors(v)) marked[w] = false;
    }
    out.canonicalize();
    return out;
}

TriangleSet solve_with_deletion_set(const Graph& g, const std::vector<Vertex>& K,
                                    const ClassSolver& inner) {
    TriangleSet out = triangles_touching(g, K);
    auto [rest, keep] = g.remove_vertices(K);
    const TriangleSet inner_triangles = inner(rest, keep);
    for (const Triangle& t : inner_triangles.items()) out.add(t);
    out.canonicalize(); // the two phases partition the output
    return out;
}

TriangleSet solve_bipartite_deletion(const Graph& g, const DeletionSet& K) {
    return solve_with_deletion_set(
        g, K.vertices, [](const Graph& rest, const std::vector<Vertex>&) {
            auto part = bipartition(rest);
            if (!part.bipartite) {
                std::string cycle;
                for (Vertex v : part.odd_cycle) cycle += " " + std::to_string(v);
                throw NotBipartiteError("g - K has an odd cycle:" + cycle);
            }
            return TriangleSet{}; // bipartite graphs are triangle-free
        });
}

TriangleSet solve_chordal_deletion(const Graph& g, const DeletionSet& K) {
    return solve_with_deletion_set(
        g, K.vertices, [](const Graph& rest, const std::vector<Vertex>& keep) {
            auto peo = perfect_elimination_ordering(rest);
            if (!peo.chordal)
                throw NotChordalError("g - K is not chordal; vertex " +
                                      std::to_string(peo.failed_vertex) +
                                      " has non-adjacent later neighbors");
            const int n = rest.vertex_count();
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[peo.order[i]] = i;
            TriangleSet out;
            // Lazy deletion: "later in the PEO" stands in for physically
            // removing processed vertices.
            for (Vertex v : peo.order) {
                std::vector<Vertex> later;
                for (Vertex w : rest.neighbors(v))
                    if (pos[w] > pos[v]) later.push_back(w);
                for (std::size_t i = 0; i < later.size(); ++i)
                    for (std::size_t j = i + 1; j < later.size(); ++j)
                        out.add(Triangle::of(keep[v], keep[later[i]], keep[later[j]]));
            }
            return out;
        });
}

TriangleSet solve_cograph(const Graph& g) {
    auto K = cograph_deletion_set(g);
    return solve_with_deletion_set(
        g, K.vertices, [](const Graph& rest, const std::vector<Vertex>& keep) {
            auto cotree = build_cotree(rest);
            if (!cotree.is_cograph)
                throw NotCographError("remainder after P4 removal is not a cograph");
            TriangleSet local = cotree_dp(cotree.tree, rest);
            TriangleSet out;
            for (const Triangle& t : local.items())
                out.add(Triangle::of(keep[t.a], keep[t.b], keep[t.c]));
            out.canonicalize();
            return out;
        });
}

namespace {

struct CotreeDpState {
    const Cotree& tree;
    TriangleSet triangles;

    struct Part {
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;
    };

    Part run(int node) {
        const auto& nd = tree.nodes[node];
        if (nd.kind == Cotree::Kind::Leaf) return {{nd.vertex}, {}};
        Part lhs = run(nd.left);
        Part rhs = run(nd.right);
        if (nd.kind == Cotree::Kind::Join) {
            // new triangles: a vertex of one side with an edge of the other
            for (Vertex x : lhs.vertices)
                for (auto [y, z] : rhs.edges) triangles.add(Triangle::of(x, y, z));
            for (Vertex x : rhs.vertices)
                for (auto [y, z] : lhs.edges) triangles.add(Triangle::of(x, y, z));
            for (Vertex x : lhs.vertices)
                for (Vertex y : rhs.vertices)
                    lhs.edges.emplace_back(std::min(x, y), std::max(x, y));
        }
        lhs.vertices.insert(lhs.vertices.end(), rhs.vertices.begin(), rhs.vertices.end());
        lhs.edges.insert(lhs.edges.end(), rhs.edges.begin(), rhs.edges.end());
        return lhs;
    }
};

} // namespace

TriangleSet cotree_dp(const Cotree& t, const Graph& g) {
    if (eval_cotree(t, g.vertex_count()) != g)
        throw TreeGraphMismatchError("cotree does not evaluate to the given graph");
    if (t.root < 0) return {};
    CotreeDpState state{t, {}};
    auto root = state.run(t.root);
    if (root.edges.size() != static_cast<std::size_t>(g.edge_count()))
        throw TreeGraphMismatchError("cotree edge count mismatch");
    state.triangles.canonicalize(); // LCA attribution forbids duplicates
    return state.triangles;
}

} // namespace trienum
