#ifndef TRIENUM_KERNELS_HPP
#define TRIENUM_KERNELS_HPP

#include "trienum/graph.hpp"
#include "trienum/graph_algos.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace trienum {

/// Triangles destroyed by the feedback-edge reduction, in input-graph ids.
struct FesAdvice {
    TriangleSet outside_triangles; // triangles with >= 1 non-feedback edge
};

/// Advice of the distance-to-d-degenerate kernel, in input-graph ids.
struct DtddAdvice {
    TriangleSet t1;                                  // triangles with <= 1 vertex in D
    std::map<Vertex, std::vector<Vertex>> module_map; // representative -> part
    std::array<Vertex, 3> sentinel_ids{-1, -1, -1};   // fresh ids n, n+1, n+2
};

enum class KernelKind { Fes, DtddMaxdeg, Dtdd };

/// Kernel graph plus advice. Kernel vertices keep their input-graph ids via
/// orig_of; the three fresh sentinel vertices sit at ids n, n+1, n+2.
struct EnumAdviceKernel {
    KernelKind kind = KernelKind::Fes;
    Graph kernel_graph;               // dense ids 0..n_I-1
    std::vector<Vertex> orig_of;      // kernel id -> input-graph id (or fresh id)
    int param_in = 0;
    int param_out = 0;
    std::optional<Triangle> sentinel; // marker triangle, in kernel ids
    int core_vertex_count = 0;        // kernel vertices excluding sentinels

    FesAdvice fes_advice;   // Fes only
    DtddAdvice dtdd_advice; // Dtdd / DtddMaxdeg (t1 doubles as the triangle advice)

    /// Convenience: all triangles of the kernel graph expanded (used by the
    /// solvers and the axiom tests).
    bool is_sentinel(Triangle kernel_triangle) const {
        return sentinel && *sentinel == kernel_triangle;
    }
};

/// All triangles of g with at least one edge outside the feedback edge set F,
/// each exactly once, via the rooted-forest parent scheme. At most 2|F| of
/// them. Throws NotFeedbackSetError if g - F has a cycle.
TriangleSet lemma_festri(const Graph& g, const std::vector<Edge>& F);

/// Feedback-edge kernel: endpoints and edges of F plus a fresh sentinel
/// triangle iff the advice is nonempty. |V_I| <= 2k+3 and |E_I| <= k+3.
EnumAdviceKernel fes_kernelize(const Graph& g);

/// Kernel on D and the neighbors of D; advice holds the triangles of g - D
/// in which some vertex has no neighbor in D. Core size <= |D| * (max degree
/// in D + 1) vertices. A sentinel triangle marks a nonempty advice.
EnumAdviceKernel dtdd_maxdeg_kernelize(const Graph& g, const DeletionSet& D);

/// Twin-class kernel: D, one representative per module of V - D (grouped by
/// D-neighborhood), and a sentinel triple. At most |D| + 2^|D| + 3 vertices.
/// Refuses |D| > 20.
EnumAdviceKernel dtdd_kernelize(const Graph& g, const DeletionSet& D);

/// Expansion function f: sentinel -> advice triangles, anything else -> the
/// triangle itself (FES / maxdeg) or the cartesian product over the module
/// map (dtdd). Input triangle is in kernel ids; output in input-graph ids.
std::vector<Triangle> expand(const EnumAdviceKernel& k, Triangle kernel_triangle);

} // namespace trienum

#endif
