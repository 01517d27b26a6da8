#include "trienum/hardness.hpp"

#include "trienum/oracle.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace trienum {

GpGadget build_gp_gadget(const Graph& g) {
    const int n = g.vertex_count();
    GpGadget gg;
    gg.input_n = n;
    std::vector<Edge> edges;
    // cross-copy images of every original edge
    for (auto [x, y] : g.edges())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                Vertex a = i * n + x, b = j * n + y;
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
    // apices joined to their copy, plus the cross l_i - r_j ring
    for (int i = 0; i < 3; ++i) {
        gg.apex_l[i] = 3 * n + i;
        gg.apex_r[i] = 3 * n + 3 + i;
        for (Vertex v = 0; v < n; ++v) {
            edges.emplace_back(i * n + v, gg.apex_l[i]);
            edges.emplace_back(i * n + v, gg.apex_r[i]);
        }
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                Vertex a = gg.apex_l[i], b = gg.apex_r[j];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    gg.g_prime = Graph::from_edges(3 * n + 6, edges);
    return gg;
}

namespace {

int eccentricity(const Graph& g, Vertex src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> bfs;
    bfs.push(src);
    dist[src] = 0;
    int ecc = 0;
    while (!bfs.empty()) {
        Vertex v = bfs.front();
        bfs.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                ecc = std::max(ecc, dist[w]);
                bfs.push(w);
            }
    }
    for (int d : dist)
        if (d < 0) return -1; // disconnected: diameter undefined (cannot occur here)
    return ecc;
}

} // namespace

GadgetReport verify_gadget(const GpGadget& gg, const Graph& g) {
    const Graph& gp = gg.g_prime;
    const int n = g.vertex_count();
    GadgetReport rep;

    rep.size_exact = gp.vertex_count() == 3 * n + 6 &&
                     gp.edge_count() == 6 * g.edge_count() + 6LL * n + 6;

    rep.triangle_equiv =
        enumerate_edge_intersect(g).empty() == enumerate_edge_intersect(gp).empty();

    // L dominates: every vertex is in L or adjacent to some l_i.
    rep.dominating_ok = true;
    for (Vertex v = 0; v < gp.vertex_count(); ++v) {
        bool dominated = false;
        for (Vertex l : gg.apex_l)
            if (v == l || gp.has_edge(v, l)) dominated = true;
        if (!dominated) rep.dominating_ok = false;
    }

    // the construction's coloring: copy i gets color i; l_i, r_i the next one
    std::vector<int> color(gp.vertex_count());
    for (int i = 0; i < 3; ++i) {
        for (Vertex v = 0; v < n; ++v) color[i * n + v] = i;
        color[gg.apex_l[i]] = (i + 1) % 3;
        color[gg.apex_r[i]] = (i + 1) % 3;
    }
    rep.coloring_ok = true;
    for (auto [u, v] : gp.edges())
        if (color[u] == color[v]) rep.coloring_ok = false;

    rep.diameter = 0;
    for (Vertex v = 0; v < gp.vertex_count(); ++v)
        rep.diameter = std::max(rep.diameter, eccentricity(gp, v));
    return rep;
}

std::string GadgetReport::to_text() const {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::string out;
    out += std::string("triangle_equiv: ") + yn(triangle_equiv) + "\n";
    out += std::string("dominating_ok: ") + yn(dominating_ok) + "\n";
    out += std::string("coloring_ok: ") + yn(coloring_ok) + "\n";
    out += "diameter: " + std::to_string(diameter) + "\n";
    out += std::string("size_exact: ") + yn(size_exact) + "\n";
    return out;
}

} // namespace trienum
