#include "trienum/oracle.hpp"

#include "trienum/errors.hpp"

#include <algorithm>

namespace trienum {

TriangleSet enumerate_triples(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 500)
        throw UnsupportedError("brute-force triple oracle refuses graphs with more than 500 vertices");
    TriangleSet out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c)
                if (g.has_edge(a, c) && g.has_edge(b, c)) out.add({a, b, c});
        }
    out.canonicalize();
    return out;
}

TriangleSet enumerate_edge_intersect(const Graph& g) {
    TriangleSet out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto adj_u = g.neighbors(u);
        for (Vertex v : adj_u) {
            if (v <= u) continue;
            auto adj_v = g.neighbors(v);
            // canonical emission: w > v > u, one triangle per emission
            auto iu = std::upper_bound(adj_u.begin(), adj_u.end(), v);
            auto iv = std::upper_bound(adj_v.begin(), adj_v.end(), v);
            while (iu != adj_u.end() && iv != adj_v.end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else {
                    out.add({u, v, *iu});
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    out.canonicalize();
    return out;
}

} // namespace trienum
