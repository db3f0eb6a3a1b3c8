#pragma once

#include <map>
#include <optional>
#include <vector>

#include "posh/exact.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"

namespace posh {

struct Drawing {
    std::vector<std::optional<RatPoint>> placement;  // by vertex id
    std::map<EdgeId, std::vector<RatPoint>> bends;   // interior polyline points
    bool certified = false;
};

struct SegmentRef {
    EdgeId edge;
    int segment;  // index along the polyline
    friend bool operator==(const SegmentRef&, const SegmentRef&) = default;
};

struct CertifiedReport {
    std::vector<std::pair<SegmentRef, SegmentRef>> crossings;
    // pairs of vertex ids (or -1 - edge id for bend points) sharing a location
    std::vector<std::pair<int, int>> coincident;
    int segments = 0;
    bool crossing_free() const { return crossings.empty() && coincident.empty(); }
};

// Exact pairwise check of every edge segment. Throws StructuralError when a
// vertex is unplaced or an edge is a loop.
CertifiedReport verify_drawing(const MultiGraph& g, const Drawing& d);

// Rotation system read off a straight-line placement (angular order around each
// vertex); the outer face is the one left of the lowest-leftmost vertex.
PlaneGraph embedding_of_drawing(const MultiGraph& g, const std::vector<IntPoint>& pts);

}  // namespace posh
