#pragma once

#include <string>
#include <vector>

#include "posh/bipartite.hpp"
#include "posh/book.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"

namespace posh {

// side[v] is 0 for X and 1 for Y.
struct CutPartition {
    std::vector<char> side;
};

struct MatchingPlan {
    std::vector<EdgeId> edges;  // sorted
};

int cut_size(const MultiGraph& g, const CutPartition& cut);
// No single vertex can switch sides and enlarge the cut.
bool locally_maximal(const MultiGraph& g, const CutPartition& cut);
// Edges inside X or inside Y.
MatchingPlan monochromatic_edges(const MultiGraph& g, const CutPartition& cut);
// Contracting the edges yields a bipartite multigraph (no odd cycle survives).
bool contracts_to_bipartite(const MultiGraph& g, const MatchingPlan& m);
bool is_matching(const MultiGraph& g, const MatchingPlan& m);

// Maximum cut: exhaustive for n <= exhaustive_limit, otherwise vertex-move
// local search from a BFS colouring. The matching is the set of edges left
// inside a side. Throws DomainError above degree 3 or on loops/parallels.
std::pair<CutPartition, MatchingPlan> maxcut_matching(const MultiGraph& g, int exhaustive_limit = 20);

// Every minimum-size edge set whose contraction is bipartite (n <= 20 only).
std::vector<MatchingPlan> minimum_matchings(const MultiGraph& g);

// Simple cycles of length k (3 or 4) with at least one vertex strictly inside,
// inside meaning the side away from the component's outer face. Each cycle is
// listed by its vertices in order. Components that are a K4 are skipped: all
// their faces are triangles, so one of them always encloses a vertex.
std::vector<std::vector<VertexId>> separating_cycles(const PlaneGraph& pg, int k);
// Separating 4-cycles with two edges in m.
std::vector<std::vector<VertexId>> covered_separating_quads(const PlaneGraph& pg, const MatchingPlan& m);

struct RepairResult {
    PlaneGraph plane;
    MatchingPlan matching;
    int triangle_moves = 0;
    int quad_reflections = 0;
    int matching_exchanges = 0;
    int outer_face_changes = 0;
    int separating_triangles_before = 0;
    int covered_quads_before = 0;
};

// Re-embeds until no separating triangle remains and m covers no separating
// 4-cycle, keeping the abstract graph and |m|. Each move reverses rotations on
// a few vertices (or swaps two matching edges) and must lower
// (#separating triangles, #covered quads); the outer face of each component is
// re-chosen after every move. Throws InvariantError when stuck.
RepairResult repair_embedding(const PlaneGraph& pg, const MatchingPlan& m);

// B = D / M. Vertex b of B is the G vertex kept[b]; a contracted vertex
// keeps the lower endpoint of its matching edge.
struct Contraction {
    PlaneGraph multigraph;
    std::vector<VertexId> image;    // G vertex -> B vertex
    std::vector<VertexId> kept;     // B vertex -> G vertex
    std::vector<EdgeId> g_edge;     // B edge -> G edge
    std::vector<EdgeId> matched;    // B vertex -> matching edge or -1
    // per B dart: 1 if it leaves the absorbed endpoint of a contracted vertex
    std::vector<char> from_absorbed;
};

// Rotation of a contracted vertex: the kept endpoint's darts after the
// matching edge, then the absorbed endpoint's. Throws InvariantError if B is
// not bipartite or has a separating 2-cycle.
Contraction contract(const PlaneGraph& pg, const MatchingPlan& m);

// Pairs of parallel edges enclosing a vertex.
std::vector<std::pair<EdgeId, EdgeId>> separating_two_cycles(const PlaneGraph& b);

// Alternating layout of the simple support with the parallel copies nested
// next to their representative; the book rotation equals b's.
BookEmbedding book_embed_bipartite_multigraph(const PlaneGraph& b);

enum class SplitKind { Local, Far, Double, K4 };
std::string to_string(SplitKind k);

struct SplitAction {
    SplitKind kind;
    std::vector<VertexId> vertices;  // G ids of the endpoints created
    bool searched = false;           // placement came from the exhaustive fallback
    bool rotation_relaxed = false;   // rotation was only kept at unsplit vertices
};

struct SubcubicTrace {
    CutPartition cut;
    MatchingPlan initial_matching;
    RepairResult repair;
    int separating_triangles_after = -1;
    int covered_quads_after = -1;
    Contraction contraction;
    bool contraction_bipartite = false;
    BookEmbedding bipartite_layout;  // on B, B's vertex ids
    int leaves = 0;
    bool degree_four_after_leaves = false;
    std::vector<SplitAction> script;
    bool one_sided_after_each_split = true;
    BookEmbedding final_layout;       // G plus leaves; leaves have ids >= n
    std::vector<EdgeId> final_g_edge;  // per edge of final_layout: G edge or -1
};

// Full pipeline for planar graphs of maximum degree 3: the certificate is
// on G's own vertices (v -> v).
PoshCertificate subcubic_posh(const MultiGraph& g, SubcubicTrace* trace = nullptr);

}  // namespace posh
