#ifndef TRIENUM_GRAPH_ALGOS_HPP
#define TRIENUM_GRAPH_ALGOS_HPP

#include "trienum/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace trienum {

struct DegeneracyOrdering {
    std::vector<Vertex> order; // peeling order
    int degeneracy = 0;
};

/// Min-degree peeling with smallest-id tie-break. The reported degeneracy is
/// the maximum later-neighbor count over the ordering.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

bool is_d_degenerate(const Graph& g, int d);

/// Non-forest edges of a breadth-first spanning forest; size is m - n + c.
std::vector<Edge> feedback_edge_set(const Graph& g);

/// Rooted BFS spanning forest of g minus the edge set F. parent[v] = -1 for
/// roots. Throws NotFeedbackSetError if g - F still has a cycle.
std::vector<Vertex> spanning_forest_parents(const Graph& g, const std::vector<Edge>& F);

enum class TargetClass { DDegenerate, Bipartite, Chordal, Cograph };

struct DeletionSet {
    std::vector<Vertex> vertices;
    TargetClass target = TargetClass::DDegenerate;
    int d = 0; // meaningful for DDegenerate only
};

/// Repeatedly removes a maximum-degree vertex (smallest-id tie-break) until
/// the remainder is d-degenerate. Heuristic; quality affects runtime only.
DeletionSet greedy_ddeg_deletion_set(const Graph& g, int d);

/// Partition of V minus D by identical neighborhoods inside D. Requires every
/// edge of g to have an endpoint in D (throws EdgeOutsideDError otherwise).
/// Each part is ascending; the representative is the smallest id.
std::vector<std::vector<Vertex>> modules_wrt(const Graph& g, const std::vector<Vertex>& D);

struct PeoResult {
    bool chordal = false;
    std::vector<Vertex> order;         // valid iff chordal
    Vertex failed_vertex = -1;         // witness otherwise
    std::array<Vertex, 2> missing_edge{-1, -1};
};

/// Maximum cardinality search plus an explicit verification pass; the
/// verification alone judges chordality.
PeoResult perfect_elimination_ordering(const Graph& g);

struct BipartitionResult {
    bool bipartite = false;
    std::vector<int> side;          // 0/1 per vertex iff bipartite
    std::vector<Vertex> odd_cycle;  // witness otherwise
};

BipartitionResult bipartition(const Graph& g);

/// Rooted binary cotree. Leaves carry vertex ids of the host graph.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        Vertex vertex = -1; // leaves only
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;
};

struct CotreeResult {
    bool is_cograph = false;
    Cotree tree;
    std::array<Vertex, 4> p4{-1, -1, -1, -1}; // induced path witness otherwise
};

/// Recursive complement-connectivity construction; multi-way unions and joins
/// are rebalanced into binary chains.
CotreeResult build_cotree(const Graph& g);

/// Evaluates union/join semantics back into a Graph on the same vertex ids.
Graph eval_cotree(const Cotree& t, int vertex_count);

/// First induced P4 (path a-b-c-d) in ascending scan order, or nullopt.
/// Throws UnsupportedError for n > 2000.
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);

/// Repeatedly deletes all four vertices of an induced P4; |K| <= 4 * optimum.
DeletionSet cograph_deletion_set(const Graph& g);

bool is_acyclic(const Graph& g);
int connected_component_count(const Graph& g);

} // namespace trienum

#endif
