#ifndef TRIENUM_HARDNESS_HPP
#define TRIENUM_HARDNESS_HPP

#include "trienum/graph.hpp"

#include <array>
#include <string>

namespace trienum {

/// Triangle-preserving gadget with domination number, chromatic number, and
/// diameter all at most 3. Layout: copy i of vertex v at i*n + v (i = 0,1,2),
/// then apices l1..l3 at 3n..3n+2 and r1..r3 at 3n+3..3n+5.
struct GpGadget {
    Graph g_prime;
    int input_n = 0;
    std::array<Vertex, 3> apex_l{};
    std::array<Vertex, 3> apex_r{};

    Vertex copy(int copy_index, Vertex original) const { return copy_index * input_n + original; }
};

/// |V'| = 3n + 6 and |E'| = 6m + 6n + 6, always.
GpGadget build_gp_gadget(const Graph& g);

/// Witness-based bound checks plus the triangle equivalence, each verified
/// mechanically on the constructed gadget.
struct GadgetReport {
    bool triangle_equiv = false; // input has a triangle <=> gadget has one
    bool dominating_ok = false;  // L = {l1,l2,l3} dominates V'
    bool coloring_ok = false;    // the construction's 3-coloring is proper
    int diameter = 0;            // exact, via all-pairs BFS
    bool size_exact = false;     // |V'| and |E'| match the formulas

    std::string to_text() const;
};

GadgetReport verify_gadget(const GpGadget& gg, const Graph& g);

} // namespace trienum

#endif
