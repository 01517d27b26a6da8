#ifndef TRIENUM_ORACLE_HPP
#define TRIENUM_ORACLE_HPP

#include "trienum/graph.hpp"

namespace trienum {

/// Exhaustive check of all C(n,3) vertex triples. The reference oracle.
/// Refuses graphs with more than 500 vertices.
TriangleSet enumerate_triples(const Graph& g);

/// For each edge {u,v} with u < v, emits {u,v,w} for every w > v in the
/// sorted intersection of adj(u) and adj(v).
TriangleSet enumerate_edge_intersect(const Graph& g);

} // namespace trienum

#endif
