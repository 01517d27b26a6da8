// Shared test helpers: random and structured graph generators plus slow,
// independent reference implementations used to cross-check the library.
#ifndef TRIENUM_TESTUTIL_HPP
#define TRIENUM_TESTUTIL_HPP

#include "trienum/graph.hpp"
#include "trienum/cliquewidth.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace testutil {

using trienum::Edge;
using trienum::Graph;
using trienum::Vertex;

inline Graph gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> prev(0, v - 1);
        Vertex u = prev(rng);
        edges.push_back({u, v});
    }
    return edges;
}

/// Random tree plus `extra` uniformly chosen non-tree chords.
inline Graph tree_plus_chords(int n, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto edges = random_tree_edges(n, rng);
    std::set<Edge> have(edges.begin(), edges.end());
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    int added = 0;
    while (added < extra) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (have.insert({u, v}).second) {
            edges.push_back({u, v});
            ++added;
        }
    }
    return Graph::from_edges(n, edges);
}

/// Hub 0 joined to a cycle 1..n-1.
inline Graph wheel(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    for (Vertex v = 1; v + 1 < n; ++v) edges.push_back({v, v + 1});
    if (n > 3) edges.push_back({1, n - 1});
    return Graph::from_edges(n, edges);
}

/// Random cograph via a random cotree over n leaves.
inline Graph random_cograph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> groups(n);
    for (Vertex v = 0; v < n; ++v) groups[v] = {v};
    std::vector<Edge> edges;
    std::bernoulli_distribution join(0.5);
    while (groups.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (join(rng))
            for (Vertex u : groups[i])
                for (Vertex v : groups[j])
                    edges.push_back({std::min(u, v), std::max(u, v)});
        groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
        groups.erase(groups.begin() + static_cast<long>(j));
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(n, edges);
}

/// Random interval graph (chordal): n intervals with random endpoints.
inline Graph random_interval_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> point(0, 3 * n);
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [a, b] : iv) {
        a = point(rng);
        b = point(rng);
        if (a > b) std::swap(a, b);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

/// Complete bipartite (a, b) plus one apex adjacent to everything.
inline Graph apex_over_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
    Vertex apex = a + b;
    for (Vertex v = 0; v < apex; ++v) edges.push_back({v, apex});
    return Graph::from_edges(a + b + 1, edges);
}

/// d-degenerate construction: vertex v >= 1 attaches to min(v, back) random
/// earlier vertices. Then `planted` extra vertices with arbitrary edges form
/// the deletion set D (returned as the last `planted` ids).
inline Graph degenerate_plus_planted(int n, int back, int planted, double p_plant,
                                     std::uint64_t seed, std::vector<Vertex>* D_out) {
    std::mt19937_64 rng(seed);
    std::set<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> prev(0, v - 1);
        int want = std::min<int>(v, back);
        while (static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) {
                   return e.second == v;
               })) < want)
            edges.insert({prev(rng), v});
    }
    std::bernoulli_distribution coin(p_plant);
    std::vector<Vertex> D;
    for (int i = 0; i < planted; ++i) {
        Vertex d = n + i;
        D.push_back(d);
        for (Vertex v = 0; v < d; ++v)
            if (coin(rng)) edges.insert({v, d});
    }
    if (D_out) *D_out = D;
    return Graph::from_edges(n + planted, {edges.begin(), edges.end()});
}

/// Independent degeneracy oracle: repeatedly recompute all degrees from
/// scratch and remove a minimum-degree vertex; the answer is the running max.
inline int slow_degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_deg = n + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (Vertex w : g.neighbors(v)) deg += alive[w];
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        best = std::max(best, pick_deg);
        alive[pick] = false;
    }
    return best;
}

/// Independent chordality check via brute-force simplicial elimination.
inline bool slow_is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            std::vector<Vertex> nb;
            for (Vertex w : g.neighbors(v))
                if (alive[w]) nb.push_back(w);
            bool simplicial = true;
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j)
                    if (!g.has_edge(nb[i], nb[j])) simplicial = false;
            if (simplicial) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = false;
    }
    return true;
}

/// Brute-force induced-P4 existence over all ordered 4-tuples.
inline bool slow_has_p4(const Graph& g) {
    int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                        !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d))
                        return true;
                }
    return false;
}

/// Random syntactically valid k-expression text with at most max_leaves
/// leaves and labels in 1..width.
inline std::string random_kexpression_text(int max_leaves, int width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> lab(1, width);
    std::ostringstream out;
    // recursive builder over a leaf budget
    auto build = [&](auto&& self, int budget) -> void {
        std::uniform_int_distribution<int> op(0, 3);
        int o = budget <= 1 ? 0 : op(rng);
        switch (o) {
        case 0:
            out << "v(" << lab(rng) << ")";
            break;
        case 1: {
            std::uniform_int_distribution<int> split(1, budget - 1);
            int left = split(rng);
            out << "u(";
            self(self, left);
            out << ",";
            self(self, budget - left);
            out << ")";
            break;
        }
        case 2: {
            int i = lab(rng), j = lab(rng);
            while (j == i) j = lab(rng);
            out << "eta(" << i << "," << j << ",";
            self(self, budget);
            out << ")";
            break;
        }
        default:
            out << "rho(" << lab(rng) << "," << lab(rng) << ",";
            self(self, budget);
            out << ")";
            break;
        }
    };
    std::uniform_int_distribution<int> leaves(1, max_leaves);
    build(build, leaves(rng));
    return out.str();
}

} // namespace testutil

#endif
