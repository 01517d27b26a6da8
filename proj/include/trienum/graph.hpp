#ifndef TRIENUM_GRAPH_HPP
#define TRIENUM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trienum {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // always stored with first < second

/// Immutable simple undirected graph with dense vertex ids 0..n-1 and
/// strictly ascending adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Builds from a dense edge list. Throws PreconditionError on self-loops,
    /// duplicate edges, or out-of-range endpoints.
    static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    long long edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    std::vector<Edge> edges() const;

    /// External label of a dense id (defaults to the id itself).
    long long label(Vertex v) const;
    const std::vector<long long>& labels() const { return labels_; }
    void set_labels(std::vector<long long> labels);

    /// Induced subgraph on `keep` (dense-renumbered in the order given,
    /// which must be ascending); labels are carried over.
    Graph induced_subgraph(const std::vector<Vertex>& keep) const;

    /// Copy of the graph without the given vertex set, plus the map from
    /// new ids back to old ids.
    std::pair<Graph, std::vector<Vertex>> remove_vertices(const std::vector<Vertex>& del) const;

    bool operator==(const Graph& other) const {
        return adjacency_ == other.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<long long> labels_;
    long long edge_count_ = 0;
};

/// Canonical vertex triple a < b < c.
struct Triangle {
    Vertex a = 0, b = 0, c = 0;

    static Triangle of(Vertex x, Vertex y, Vertex z);

    auto operator<=>(const Triangle&) const = default;
};

/// Ordered duplicate-free sequence of triangles.
class TriangleSet {
public:
    TriangleSet() = default;
    explicit TriangleSet(std::vector<Triangle> triangles);

    void add(Triangle t) { triangles_.push_back(t); }
    /// Sorts and asserts uniqueness. Throws on duplicates.
    void canonicalize();

    std::size_t size() const { return triangles_.size(); }
    bool empty() const { return triangles_.empty(); }
    const std::vector<Triangle>& items() const& { return triangles_; }
    // ranged-for over a temporary set must not dangle
    std::vector<Triangle> items() && { return std::move(triangles_); }
    bool contains(Triangle t) const;

    bool operator==(const TriangleSet&) const = default;

private:
    std::vector<Triangle> triangles_;
};

/// Parses the `u v` per line edge-list format. `#` comments and blank lines
/// are skipped. Labels are remapped to dense ids in first-appearance order.
/// Throws ParseError on self-loops, duplicate edges, or malformed lines.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Emits edges `u v` with u < v in ascending lexicographic order, using
/// original labels.
std::string serialize_edge_list(const Graph& g);

/// One `a b c` line per triangle using original labels, ascending within
/// the triple. With `sorted`, lines are additionally lexicographically
/// sorted (numeric component-wise) for diffable output.
std::string format_triangles(const TriangleSet& ts, const Graph& g, bool sorted);

} // namespace trienum

#endif
