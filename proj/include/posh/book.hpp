#pragma once

#include <string>
#include <vector>

#include "posh/embedder.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"

namespace posh {

enum class Page : unsigned char { Spine, Upper, Lower };

// Vertices on a horizontal spine, every edge either a spine segment between
// neighbouring vertices or a half-circle on one of two pages. Parallel arcs
// on one page are ordered by nest (larger = further out).
struct BookEmbedding {
    MultiGraph graph;
    std::vector<VertexId> spine;  // left to right
    std::vector<Page> page;       // per edge
    std::vector<int> nest;        // per edge

    std::vector<int> positions() const;  // vertex -> index on the spine
};

// Pairs of same-page arcs whose endpoints interleave, plus malformed spine
// edges (reported as (e, e)).
std::vector<std::pair<EdgeId, EdgeId>> book_conflicts(const BookEmbedding& b);

// Every vertex has all edges to earlier vertices on the spine or on one page.
// Returns the offending vertices.
std::vector<VertexId> one_sidedness_violations(const BookEmbedding& b);

// Rotation system of the book drawing; dart ids follow b.graph.
std::vector<std::vector<Dart>> book_rotation(const BookEmbedding& b);
// Plane graph of the drawing; the outer face of each component is the one
// holding the leftward ray at its leftmost vertex.
PlaneGraph book_plane(const BookEmbedding& b);

// Supergraph with the spine as Hamiltonian cycle: arcs between spine
// neighbours move onto the spine, missing spine edges are added, and the
// closing edge v_n v_1 becomes the outermost upper arc when missing. Edge ids
// of b.graph are kept; new edges follow.
struct BookPosh {
    BookEmbedding book;  // completed layout
    PlaneGraph plane;
    HamiltonianOrder order;
};
BookPosh book_to_posh(const BookEmbedding& b);

// Throws InvariantError naming the first problem.
void validate_book(const BookEmbedding& b, const std::string& stage);

// Layout restricted to kept vertices and edges; ids renumbered in order.
BookEmbedding restrict_book(const BookEmbedding& b, const std::vector<char>& keep_vertex,
                            const std::vector<char>& keep_edge);

}  // namespace posh
