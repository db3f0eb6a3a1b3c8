#pragma once

#include <vector>

#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"

namespace posh {

// Any planar embedding of g, outer faces chosen by default_outer_darts.
// Throws NonPlanarError carrying the edges of a Kuratowski subdivision.
PlaneGraph planar_embed(const MultiGraph& g);

struct TwoColoring {
    std::vector<int> color;  // 0 = black, 1 = white
    std::vector<VertexId> black;
    std::vector<VertexId> white;
};

// The lowest vertex of each component is black. Throws NotBipartiteError
// with an odd cycle.
TwoColoring two_coloring(const MultiGraph& g);

}  // namespace posh
