#ifndef TRIENUM_SOLVERS_HPP
#define TRIENUM_SOLVERS_HPP

#include "trienum/graph.hpp"
#include "trienum/graph_algos.hpp"

#include <functional>

namespace trienum {

/// Degeneracy-ordering enumeration: for each vertex, intersect the lists of
/// later neighbors pairwise via marking. O(m * d).
TriangleSet solve_degeneracy(const Graph& g);

/// Feedback-edge pipeline: kernelize, enumerate the kernel by edge
/// intersection, expand each kernel triangle.
TriangleSet solve_fes(const Graph& g);

/// Twin-class kernel pipeline. Requires g - D to be d-degenerate and
/// |D| <= 20.
TriangleSet solve_dtdd(const Graph& g, const DeletionSet& D);

/// Two-phase solver: triangles of g - D via the degeneracy solver, then a
/// neighbor-pair scan of each vertex of D under an order putting D first.
TriangleSet solve_dtdd_maxdeg(const Graph& g, const DeletionSet& D);

/// All triangles with at least one vertex in K, each once. Marking scan over
/// all edges for each v in K, deduplicated by the rule that the listing
/// vertex precedes every other triangle vertex inside K.
TriangleSet triangles_touching(const Graph& g, const std::vector<Vertex>& K);

/// Inner solvers take (g - K, map back to g ids) and return triangles in
/// g ids.
using ClassSolver =
    std::function<TriangleSet(const Graph& rest, const std::vector<Vertex>& keep)>;

/// triangles_touching(g, K) plus inner(g - K); the two parts are disjoint.
TriangleSet solve_with_deletion_set(const Graph& g, const std::vector<Vertex>& K,
                                    const ClassSolver& inner);

/// g - K must be bipartite (verified by 2-coloring; throws NotBipartiteError
/// with an odd-cycle witness). The remainder contributes nothing.
TriangleSet solve_bipartite_deletion(const Graph& g, const DeletionSet& K);

/// g - K must be chordal. Inner enumeration walks a perfect elimination
/// ordering, emitting each vertex with every pair of its later neighbors.
TriangleSet solve_chordal_deletion(const Graph& g, const DeletionSet& K);

/// Computes its own deletion set by repeated induced-P4 removal, then runs
/// the cotree dynamic program on the remainder.
TriangleSet solve_cograph(const Graph& g);

/// Bottom-up cotree DP: join nodes add vertex-of-one-side x edge-of-other
/// triangles; each triangle appears once, at the least common ancestor.
/// Throws TreeGraphMismatchError if t does not evaluate to g.
TriangleSet cotree_dp(const Cotree& t, const Graph& g);

} // namespace trienum

#endif
