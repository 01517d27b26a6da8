#include "trienum/graph.hpp"

#include "trienum/errors.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace trienum {

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= vertex_count)
            throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop");
        if (!seen.insert({u, v}).second) throw PreconditionError("duplicate edge");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    g.edge_count_ = static_cast<long long>(seen.size());
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

long long Graph::label(Vertex v) const {
    if (static_cast<std::size_t>(v) < labels_.size()) return labels_[v];
    return v;
}

void Graph::set_labels(std::vector<long long> labels) { labels_ = std::move(labels); }

Graph Graph::induced_subgraph(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> id(vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (Vertex u : keep)
        for (Vertex v : adjacency_[u])
            if (u < v && id[v] >= 0) es.emplace_back(id[u], id[v]);
    Graph g = from_edges(static_cast<int>(keep.size()), es);
    std::vector<long long> lab(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) lab[i] = label(keep[i]);
    g.set_labels(std::move(lab));
    return g;
}

std::pair<Graph, std::vector<Vertex>> Graph::remove_vertices(const std::vector<Vertex>& del) const {
    std::vector<bool> gone(vertex_count(), false);
    for (Vertex v : del) gone[v] = true;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return {induced_subgraph(keep), keep};
}

Triangle Triangle::of(Vertex x, Vertex y, Vertex z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return Triangle{x, y, z};
}

TriangleSet::TriangleSet(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    canonicalize();
}

void TriangleSet::canonicalize() {
    std::sort(triangles_.begin(), triangles_.end());
    if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        throw PreconditionError("duplicate triangle in TriangleSet");
}

bool TriangleSet::contains(Triangle t) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::map<long long, Vertex> dense;
    std::vector<long long> labels;
    std::set<Edge> seen;
    std::string line;
    std::size_t lineno = 0;
    auto intern = [&](long long lab) {
        auto [it, fresh] = dense.try_emplace(lab, static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(lab);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0)
            throw ParseError("malformed edge line", lineno);
        if (a == b) throw ParseError("self-loop", lineno);
        Vertex u = intern(a), v = intern(b);
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) throw ParseError("duplicate edge", lineno);
        edges.push_back(e);
    }
    Graph g = Graph::from_edges(static_cast<int>(labels.size()), edges);
    g.set_labels(std::move(labels));
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::vector<std::pair<long long, long long>> lines;
    for (auto [u, v] : g.edges()) {
        long long a = g.label(u), b = g.label(v);
        if (a > b) std::swap(a, b);
        lines.emplace_back(a, b);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (auto [a, b] : lines) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

std::string format_triangles(const TriangleSet& ts, const Graph& g, bool sorted) {
    std::vector<std::array<long long, 3>> rows;
    rows.reserve(ts.size());
    for (const Triangle& t : ts.items()) {
        std::array<long long, 3> row{g.label(t.a), g.label(t.b), g.label(t.c)};
        std::sort(row.begin(), row.end());
        rows.push_back(row);
    }
    if (sorted) std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& r : rows)
        out += std::to_string(r[0]) + " " + std::to_string(r[1]) + " " +
               std::to_string(r[2]) + "\n";
    return out;
}

} // namespace trienum
