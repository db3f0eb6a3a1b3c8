#pragma once

#include <map>
#include <vector>

#include "posh/drawing.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"
#include "posh/pointset.hpp"

namespace posh {

// Simple plane supergraph on the same vertices whose faces are all
// triangles (n >= 3). Edge ids of pg are kept, added edges follow, and the
// rotation restricted to pg's edges is pg's. Components are joined through
// their outer faces first.
PlaneGraph triangulate(const PlaneGraph& pg);

// Primal edges dual to a perfect matching of the dual of a triangulation
// (Edmonds' algorithm). Throws InvariantError if the matching is not perfect.
std::vector<EdgeId> dual_perfect_matching(const PlaneGraph& triangulation);

// What became of an input edge: kept whole as `first`, or split at `bend`
// into first (u side) and second (v side).
struct EdgeImage {
    EdgeId first = -1;
    VertexId bend = -1;
    EdgeId second = -1;
};

struct SubdivisionPlan {
    std::vector<EdgeId> edges;   // input edges to subdivide, sorted
    PlaneGraph subdivided;       // input vertices first, bend vertices after
    std::vector<EdgeImage> image;  // per input edge
    int triangulation_edges = 0;   // 0 when no triangulation was needed
    int matched_edges = 0;         // primal edges dual to the matching
};

// Subdividing every edge of a triangulation that is dual to a perfect
// matching of its faces leaves only quadrilateral faces, so the subdivided
// triangulation is bipartite; only the input's own edges are kept in the
// plan. Bipartite inputs and n < 3 get an empty plan. Requires a simple
// plane graph.
SubdivisionPlan bipartize_by_subdivision(const PlaneGraph& pg);

struct OneBendDrawing {
    SubdivisionPlan plan;
    Drawing drawing;  // on the input graph, one bend on each planned edge
    std::vector<PointRef> vertex_points;
    std::map<EdgeId, PointRef> bend_points;
    int chain_size = 0;    // k of the H_k actually used
    int chain_budget = 0;  // 2n - 2
    int point_budget = 0;  // |H_{2n-2}| = 4n - 6
};

// Plan, bipartite pipeline on the subdivided graph, drawing on H_{n+|plan|},
// then the bend vertices become bends. Certified with the bend-aware
// verifier. Throws NonPlanarError / DomainError on bad input.
OneBendDrawing one_bend_drawing(const MultiGraph& g);

}  // namespace posh
