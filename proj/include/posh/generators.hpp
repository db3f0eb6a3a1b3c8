#pragma once

#include <cstdint>
#include <random>

#include "posh/plane_graph.hpp"

namespace posh {

using Rng = std::mt19937_64;

// Uniform-ish index in [0, k); plain modulo keeps sequences identical across
// standard libraries.
inline int pick(Rng& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }
inline bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

// Stacked triangulation on n >= 3 vertices shuffled by random diagonal flips;
// the outer face is a random face.
PlaneGraph random_triangulation(int n, Rng& rng);

// Triangulation with every edge dropped with probability 1 - keep.
PlaneGraph random_planar(int n, double keep, Rng& rng);

// Quadrangulation grown from C4 by inserting a vertex into a face and joining
// it to two opposite corners, then edges dropped with probability 1 - keep.
PlaneGraph random_bipartite_plane(int n, double keep, Rng& rng);

// Cubic plane graph grown from K4 (two edges of a face subdivided and joined);
// odd n loses one vertex; then edges dropped with probability 1 - keep.
PlaneGraph random_subcubic_plane(int n, double keep, Rng& rng);

}  // namespace posh
