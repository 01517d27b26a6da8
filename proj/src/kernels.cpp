#include "trienum/kernels.hpp"

#include "trienum/errors.hpp"
#include "trienum/solvers.hpp"

#include <algorithm>
#include <set>

namespace trienum {

TriangleSet lemma_festri(const Graph& g, const std::vector<Edge>& F) {
    auto parent = spanning_forest_parents(g, F); // validates that g - F is a forest
    std::set<Edge> in_f(F.begin(), F.end());
    auto is_f = [&](Vertex u, Vertex v) {
        return in_f.count({std::min(u, v), std::max(u, v)}) != 0;
    };
    TriangleSet out;

    // Exactly two feedback edges: the third edge is a tree edge {w, p(w)}.
    std::vector<bool> marked(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbors(v))
            if (is_f(v, w)) marked[w] = true;
        for (Vertex w : g.neighbors(v))
            if (marked[w] && parent[w] >= 0 && marked[parent[w]])
                out.add(Triangle::of(v, w, parent[w]));
        for (Vertex w : g.neighbors(v)) marked[w] = false;
    }

    // Exactly one feedback edge {u,v}: both tree edges climb the forest.
    for (auto [u, v] : F) {
        if (parent[u] >= 0 && parent[u] == parent[v])
            out.add(Triangle::of(u, v, parent[u]));
        if (parent[u] >= 0 && parent[parent[u]] == v)
            out.add(Triangle::of(u, parent[u], v));
        if (parent[v] >= 0 && parent[parent[v]] == u)
            out.add(Triangle::of(v, parent[v], u));
    }

    out.canonicalize(); // throws if the scheme ever double-lists
    return out;
}

namespace {

/// Builds a kernel graph over the given input-graph ids (ascending) plus,
/// when with_sentinel_edges dictates, a fresh triangle on ids n, n+1, n+2.
struct KernelAssembler {
    std::vector<Vertex> orig_of;
    std::vector<Edge> edges; // in kernel ids
    std::map<Vertex, Vertex> kernel_id;

    void add_vertices(const std::vector<Vertex>& originals) {
        for (Vertex v : originals) {
            kernel_id[v] = static_cast<Vertex>(orig_of.size());
            orig_of.push_back(v);
        }
    }

    void add_edge(Vertex u, Vertex v) { // input-graph ids
        edges.emplace_back(kernel_id.at(u), kernel_id.at(v));
    }

    std::optional<Triangle> add_sentinel(int input_n, bool with_edges) {
        Vertex base = static_cast<Vertex>(orig_of.size());
        for (int i = 0; i < 3; ++i) orig_of.push_back(input_n + i);
        if (!with_edges) return std::nullopt;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
        return Triangle{base, base + 1, base + 2};
    }

    Graph finish() const {
        Graph g = Graph::from_edges(static_cast<int>(orig_of.size()), edges);
        std::vector<long long> labels(orig_of.begin(), orig_of.end());
        g.set_labels(labels);
        return g;
    }
};

void check_ddeg_deletion_set(const Graph& g, const DeletionSet& D) {
    if (D.target != TargetClass::DDegenerate)
        throw NotDeletionSetError("deletion set is not tagged d-degenerate");
    auto [rest, keep] = g.remove_vertices(D.vertices);
    if (!is_d_degenerate(rest, D.d))
        throw NotDeletionSetError("g - D is not " + std::to_string(D.d) + "-degenerate");
}

} // namespace

EnumAdviceKernel fes_kernelize(const Graph& g) {
    auto F = feedback_edge_set(g);
    EnumAdviceKernel kernel;
    kernel.kind = KernelKind::Fes;
    kernel.param_in = static_cast<int>(F.size());
    kernel.fes_advice.outside_triangles = lemma_festri(g, F);

    std::set<Vertex> endpoint_set;
    for (auto [u, v] : F) {
        endpoint_set.insert(u);
        endpoint_set.insert(v);
    }
    KernelAssembler asmb;
    asmb.add_vertices({endpoint_set.begin(), endpoint_set.end()});
    for (auto [u, v] : F) asmb.add_edge(u, v);
    kernel.core_vertex_count = static_cast<int>(asmb.orig_of.size());
    if (!kernel.fes_advice.outside_triangles.empty())
        kernel.sentinel = asmb.add_sentinel(g.vertex_count(), true);
    kernel.kernel_graph = asmb.finish();
    kernel.orig_of = asmb.orig_of;
    // k' is recomputed on the kernel graph, not copied from the input.
    kernel.param_out = static_cast<int>(feedback_edge_set(kernel.kernel_graph).size());
    return kernel;
}

EnumAdviceKernel dtdd_maxdeg_kernelize(const Graph& g, const DeletionSet& D) {
    check_ddeg_deletion_set(g, D);
    EnumAdviceKernel kernel;
    kernel.kind = KernelKind::DtddMaxdeg;
    kernel.param_in = static_cast<int>(D.vertices.size());

    std::vector<bool> in_d(g.vertex_count(), false);
    for (Vertex v : D.vertices) in_d[v] = true;
    auto has_d_neighbor = [&](Vertex v) {
        for (Vertex w : g.neighbors(v))
            if (in_d[w]) return true;
        return false;
    };

    // Step 1 of the two-phase solver only: triangles of g - D where some
    // vertex has no neighbor in D go to the advice.
    auto [rest, keep] = g.remove_vertices(D.vertices);
    const TriangleSet rest_triangles = solve_degeneracy(rest);
    for (const Triangle& t : rest_triangles.items()) {
        Triangle orig = Triangle::of(keep[t.a], keep[t.b], keep[t.c]);
        if (!has_d_neighbor(orig.a) || !has_d_neighbor(orig.b) || !has_d_neighbor(orig.c))
            kernel.dtdd_advice.t1.add(orig);
    }
    kernel.dtdd_advice.t1.canonicalize();

    // Kernel: subgraph induced by D and all neighbors of D.
    std::set<Vertex> core(D.vertices.begin(), D.vertices.end());
    for (Vertex v : D.vertices)
        for (Vertex w : g.neighbors(v)) core.insert(w);
    std::vector<Vertex> core_vec(core.begin(), core.end());
    KernelAssembler asmb;
    asmb.add_vertices(core_vec);
    for (Vertex u : core_vec)
        for (Vertex v : g.neighbors(u))
            if (u < v && core.count(v)) asmb.add_edge(u, v);
    kernel.core_vertex_count = static_cast<int>(core_vec.size());
    if (!kernel.dtdd_advice.t1.empty())
        kernel.sentinel = asmb.add_sentinel(g.vertex_count(), true);
    else
        asmb.add_sentinel(g.vertex_count(), false);
    kernel.dtdd_advice.sentinel_ids = {g.vertex_count(), g.vertex_count() + 1,
                                       g.vertex_count() + 2};
    kernel.kernel_graph = asmb.finish();
    kernel.orig_of = asmb.orig_of;
    kernel.param_out = kernel.param_in;
    return kernel;
}

EnumAdviceKernel dtdd_kernelize(const Graph& g, const DeletionSet& D) {
    if (D.vertices.size() > 20)
        throw ParameterTooLargeError(
            "dtdd kernel refuses |D| > 20; the 2^|D| bound would explode");
    check_ddeg_deletion_set(g, D);
    EnumAdviceKernel kernel;
    kernel.kind = KernelKind::Dtdd;
    kernel.param_in = static_cast<int>(D.vertices.size());

    std::vector<bool> in_d(g.vertex_count(), false);
    for (Vertex v : D.vertices) in_d[v] = true;

    // T1, part one: triangles entirely inside g - D.
    auto [rest, keep] = g.remove_vertices(D.vertices);
    const TriangleSet rest_triangles = solve_degeneracy(rest);
    for (const Triangle& t : rest_triangles.items())
        kernel.dtdd_advice.t1.add(Triangle::of(keep[t.a], keep[t.b], keep[t.c]));

    // T1, part two: exactly one vertex in D, found along the degeneracy
    // ordering of g - D (each pair {u,w} visited once, at the earlier vertex).
    auto ordering = degeneracy_ordering(rest);
    std::vector<int> pos(rest.vertex_count());
    for (std::size_t i = 0; i < ordering.order.size(); ++i) pos[ordering.order[i]] = static_cast<int>(i);
    std::vector<int> local_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local_id[keep[i]] = static_cast<int>(i);
    for (Vertex v : D.vertices) {
        for (Vertex u : g.neighbors(v)) {
            if (in_d[u]) continue;
            int lu = local_id[u];
            for (Vertex lw : rest.neighbors(lu)) {
                if (pos[lw] <= pos[lu]) continue;
                Vertex w = keep[lw];
                if (g.has_edge(v, w)) kernel.dtdd_advice.t1.add(Triangle::of(v, u, w));
            }
        }
    }
    kernel.dtdd_advice.t1.canonicalize();

    // Drop edges with no endpoint in D, then group V - D by D-neighborhood.
    std::vector<Edge> reduced_edges;
    for (auto [u, v] : g.edges())
        if (in_d[u] || in_d[v]) reduced_edges.emplace_back(u, v);
    Graph reduced = Graph::from_edges(g.vertex_count(), reduced_edges);
    auto parts = modules_wrt(reduced, D.vertices);

    std::vector<Vertex> core = D.vertices;
    for (const auto& part : parts) {
        Vertex rep = part.front();
        core.push_back(rep);
        kernel.dtdd_advice.module_map[rep] = part;
    }
    std::sort(core.begin(), core.end());
    std::set<Vertex> core_set(core.begin(), core.end());
    KernelAssembler asmb;
    asmb.add_vertices(core);
    for (Vertex u : core)
        for (Vertex v : reduced.neighbors(u))
            if (u < v && core_set.count(v)) asmb.add_edge(u, v);
    kernel.core_vertex_count = static_cast<int>(core.size());
    kernel.sentinel = asmb.add_sentinel(g.vertex_count(), !kernel.dtdd_advice.t1.empty());
    kernel.dtdd_advice.sentinel_ids = {g.vertex_count(), g.vertex_count() + 1,
                                       g.vertex_count() + 2};
    kernel.kernel_graph = asmb.finish();
    kernel.orig_of = asmb.orig_of;
    kernel.param_out = kernel.param_in + 2; // D' = D + {a, b} deletes every edge
    return kernel;
}

std::vector<Triangle> expand(const EnumAdviceKernel& k, Triangle kernel_triangle) {
    if (k.is_sentinel(kernel_triangle)) {
        const auto& advice = k.kind == KernelKind::Fes
                                 ? k.fes_advice.outside_triangles
                                 : k.dtdd_advice.t1;
        return advice.items();
    }
    Triangle orig = Triangle::of(k.orig_of[kernel_triangle.a],
                                 k.orig_of[kernel_triangle.b],
                                 k.orig_of[kernel_triangle.c]);
    if (k.kind != KernelKind::Dtdd) return {orig};
    // Cartesian product over the module map; M(x) = {x} on D.
    auto members = [&](Vertex x) -> std::vector<Vertex> {
        auto it = k.dtdd_advice.module_map.find(x);
        if (it == k.dtdd_advice.module_map.end()) return {x};
        return it->second;
    };
    std::vector<Triangle> out;
    for (Vertex a : members(orig.a))
        for (Vertex b : members(orig.b))
            for (Vertex c : members(orig.c)) out.push_back(Triangle::of(a, b, c));
    return out;
}

} // namespace trienum
