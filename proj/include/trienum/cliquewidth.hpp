#ifndef TRIENUM_CLIQUEWIDTH_HPP
#define TRIENUM_CLIQUEWIDTH_HPP

#include "trienum/graph.hpp"
#include "trienum/graph_algos.hpp"

#include <map>
#include <string>
#include <vector>

namespace trienum {

/// AST of the four clique-width operations, prefix notation:
///   v(i)          create a vertex labeled i
///   u(E1,E2)      disjoint union
///   eta(i,j,E)    insert all edges between labels i and j (i != j)
///   rho(i,j,E)    rename label i to j
struct KExpression {
    enum class Kind { CreateVertex, Union, InsertEdges, Rename };
    struct Node {
        Kind kind = Kind::CreateVertex;
        int label_i = 0, label_j = 0; // labels for v/eta/rho
        int left = -1, right = -1;    // children (right used by Union only)
    };
    std::vector<Node> nodes;
    int root = -1;
    int width = 0; // maximum label used
};

/// Whitespace-insensitive, `#` comments. Throws ParseError (with position)
/// on syntax errors and on eta with i == j.
KExpression parse_kexpression(const std::string& text);

/// Vertices are numbered in leaf order. Repeated eta over an existing pair
/// adds nothing; the graph stays simple.
Graph eval_kexpression(const KExpression& e);

/// Node of the binarized decomposition tree: unary eta/rho chains are folded
/// into their child, so only leaves and union nodes remain.
struct DecompNode {
    int left = -1, right = -1;                     // -1 for leaves
    std::vector<Vertex> vertices;                  // V_v, ascending
    std::vector<int> class_of;                     // vertex -> twin class (dense, 0-based)
    std::vector<std::vector<Vertex>> classes;      // twin classes Q_v(0..h_v-1)
    std::vector<int> child_class_map_left;         // child class -> own class
    std::vector<int> child_class_map_right;
    std::map<std::pair<int, int>, std::vector<Edge>> edge_sets; // E^v_{i,j}, i <= j
};

struct Decomposition {
    std::vector<DecompNode> nodes;
    int root = -1;
};

/// Builds the decomposition with twin classes grouped by expression label.
/// Asserts h_v <= width(e) at every node.
Decomposition binarize_decomposition(const KExpression& e);

/// The twin-class dynamic program. With verify_twin_property, every
/// cross-sibling class pair is checked pairwise against G instead of probing
/// one representative pair (test mode).
TriangleSet cw_enumerate(const KExpression& e, bool verify_twin_property = false);

/// Cotree-derived 2-expression for cographs (convenience converter).
/// leaf_to_host, when given, receives the host vertex id of each leaf in
/// leaf order. Throws NotCographError otherwise.
KExpression kexpression_from_cograph(const Graph& g,
                                     std::vector<Vertex>* leaf_to_host = nullptr);

} // namespace trienum

#endif
