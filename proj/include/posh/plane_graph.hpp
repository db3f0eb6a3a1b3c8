#pragma once

#include <span>
#include <vector>

#include "posh/graph.hpp"

namespace posh {

// Rotation system of a multigraph. rotation(v) lists the darts leaving v in
// counter-clockwise order. The face to the left of dart d continues with
// face_next(d) = ccw_prev(twin(d)). outer_darts holds one dart per component
// with edges; its left face is that component's outer face.
class PlaneGraph {
  public:
    PlaneGraph() = default;
    PlaneGraph(MultiGraph g, std::vector<std::vector<Dart>> rotation, std::vector<Dart> outer = {});

    const MultiGraph& graph() const { return g_; }
    int num_vertices() const { return g_.num_vertices(); }
    int num_edges() const { return g_.num_edges(); }
    VertexId tail(Dart d) const { return g_.tail(d); }
    VertexId head(Dart d) const { return g_.head(d); }

    std::span<const Dart> rotation(VertexId v) const { return rot_.at(v); }
    Dart ccw_next(Dart d) const;
    Dart ccw_prev(Dart d) const;
    Dart face_next(Dart d) const { return ccw_prev(twin(d)); }
    int position(Dart d) const { return pos_.at(d); }

    const std::vector<Dart>& outer_darts() const { return outer_; }
    void set_outer(std::vector<Dart> outer) { outer_ = std::move(outer); }

    // Mutators keep the rotation well formed; callers fix the outer darts.
    VertexId add_vertex();
    // New edge u-v; u->v goes right after after_u in u's rotation (after_u = -1
    // only when u has no darts), likewise for v. Returns the new edge id.
    EdgeId insert_edge(VertexId u, Dart after_u, VertexId v, Dart after_v);
    // Moves d (leaving tail(d)) to sit right after `after` around the same vertex.
    void move_dart(Dart d, Dart after);
    void set_rotation(VertexId v, std::vector<Dart> darts);

    PlaneGraph mirrored() const;

  private:
    void reindex(VertexId v);

    MultiGraph g_;
    std::vector<std::vector<Dart>> rot_;
    std::vector<int> pos_;
    std::vector<Dart> outer_;
};

struct FaceSet {
    std::vector<std::vector<Dart>> walks;
    std::vector<int> face_of;  // dart -> walk index
    int outer = -1;            // walk of the first outer dart, -1 without edges
};

// Traces every face; throws StructuralError if the rotation is malformed or
// Euler's relation fails on some component.
FaceSet faces(const PlaneGraph& pg);

// Face counted the way Euler's relation wants it: all outer walks of different
// components are the same face.
int euler_face_count(const PlaneGraph& pg, const FaceSet& fs);

// Restriction to kept vertices and edges (an edge survives only with both
// endpoints). Ids are renumbered in increasing order; the maps send old ids to
// new ones (-1 when dropped). Outer darts are recomputed by default.
struct PlaneRestriction {
    PlaneGraph pg;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};
PlaneRestriction restrict_plane(const PlaneGraph& pg, const std::vector<char>& keep_vertex,
                                const std::vector<char>& keep_edge);

// Simple plane graph from its facial cycles, each listed counter-clockwise
// (face on the left of v_i -> v_{i+1}). The face at index outer becomes the
// outer face.
PlaneGraph plane_from_faces(int n, const std::vector<std::vector<VertexId>>& face_cycles, int outer);

// Picks, per component, the longest face (ties: smallest dart) as outer face.
std::vector<Dart> default_outer_darts(const PlaneGraph& pg);

}  // namespace posh
