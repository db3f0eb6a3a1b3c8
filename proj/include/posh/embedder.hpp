#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posh/drawing.hpp"
#include "posh/plane_graph.hpp"
#include "posh/pointset.hpp"

namespace posh {

// Spine order v_1..v_n; the special edge is v_n v_1. With parallel edges,
// `edges` names the cycle edges: edges[j] joins v_{j+1} and v_{j+2}, the last
// one is the special edge. Left empty, the first matching edge is used.
struct HamiltonianOrder {
    std::vector<VertexId> order;
    std::vector<EdgeId> edges = {};

    HamiltonianOrder reversed() const;
};

struct SideAssignment {
    std::vector<char> inside;  // per vertex: 1 for V_I, 0 for V_O
    bool mirrored = false;     // the rotation had to be mirrored to run counter-clockwise

    std::vector<VertexId> inner_vertices() const;
    std::vector<VertexId> outer_vertices() const;
};

struct OneSidedCheck {
    std::optional<SideAssignment> sides;
    int violation_step = 0;  // 1-based j of the first failing vertex, 0 if none
    std::string detail;
    bool ok() const { return sides.has_value(); }
};

// Rotation test: at each v_j the two cycle edges must be consecutive among the
// edges to v_1..v_{j+1}. Throws PreconditionError if the order is not a
// Hamiltonian cycle of pg or the special edge is not on the outer face.
OneSidedCheck check_one_sided(const PlaneGraph& pg, const HamiltonianOrder& ho);

// Every order (all starts, both directions) that is a one-sided Hamiltonian
// cycle of pg, found by depth-first search over Hamiltonian paths; stops
// after `limit` orders.
std::vector<HamiltonianOrder> one_sided_orders(const PlaneGraph& pg, std::size_t limit = SIZE_MAX);

struct EmbedOptions {
    // per-step checks of the inductive invariants (prefix plane, outer walks);
    // default: on for n <= 100
    std::optional<bool> step_checks;
    // visibility of later columns from the boundary paths; default: n <= 16
    std::optional<bool> visibility_checks;
};

// Places v_i on p_i (V_I) or q_i (V_O) and certifies the drawing of sub, a
// spanning subgraph of pg's graph (edges matched by endpoints). Throws
// InvariantError naming the step if an invariant breaks.
Drawing embed_on_hn(const PlaneGraph& pg, const MultiGraph& sub, const HamiltonianOrder& ho,
                    const SideAssignment& sa, const PointSet& ps, const EmbedOptions& opt = {});

// Point of H_n assigned to each vertex by the rule above.
std::vector<PointRef> placement_refs(const HamiltonianOrder& ho, const SideAssignment& sa);

}  // namespace posh
