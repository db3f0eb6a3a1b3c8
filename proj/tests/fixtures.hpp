#pragma once

#include <utility>
#include <vector>

#include "posh/drawing.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"

namespace fixtures {

using namespace posh;

inline MultiGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline PlaneGraph plane_from_coords(const MultiGraph& g, const std::vector<std::pair<long, long>>& xy) {
    std::vector<IntPoint> pts;
    for (auto [x, y] : xy) pts.push_back({BigInt(x), BigInt(y)});
    return embedding_of_drawing(g, pts);
}

// K4: outer triangle 0,1,2 and 3 in the middle
inline PlaneGraph k4_plane() {
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    return plane_from_coords(g, {{0, 0}, {4, 0}, {2, 4}, {2, 1}});
}

inline MultiGraph cycle_graph(int n) {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline MultiGraph path_graph(int n) {
    MultiGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline MultiGraph complete_graph(int n) {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline MultiGraph star_graph(int leaves) {
    MultiGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline MultiGraph grid_graph(int rows, int cols) {
    MultiGraph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

inline PlaneGraph grid_plane(int rows, int cols) {
    std::vector<std::pair<long, long>> xy;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) xy.push_back({c, r});
    return plane_from_coords(grid_graph(rows, cols), xy);
}

// convex polygon: vertices on a parabola in x order
inline PlaneGraph cycle_plane(int n) {
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i < n; ++i) pts.push_back({i, i * i});
    return plane_from_coords(cycle_graph(n), pts);
}

inline MultiGraph prism_graph() {
    return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline MultiGraph cube_graph() {
    return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                          {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline MultiGraph petersen_graph() {
    return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// 6-cycle 0..5 with hub 6 inside on the even corners and hub 7 outside on the
// odd ones; the face 1,0,5,7 is outer
inline PlaneGraph pseudo_double_wheel() {
    return plane_from_faces(8,
                            {{6, 0, 1, 2}, {6, 2, 3, 4}, {6, 4, 5, 0}, {3, 2, 1, 7}, {5, 4, 3, 7}, {1, 0, 5, 7}}, 5);
}

}  // namespace fixtures
