#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posh/book.hpp"
#include "posh/embedder.hpp"
#include "posh/plane_graph.hpp"

namespace posh {

// A plane graph whose faces are all simple 4-cycles, with poles s and t: the
// two black vertices of the outer face. Vertices and edges of the graph it was
// grown from keep their ids; everything else was added.
struct Quadrangulation {
    PlaneGraph plane;
    std::vector<int> color;  // 0 black, 1 white
    VertexId s = -1, t = -1;
    int original_vertices = 0;
    int original_edges = 0;
};

// Faces of degree > 4 are cut by chords w_i w_{i+3}; faces that visit a vertex
// twice get a new vertex across the repeated corner. Components are joined by
// edges between outer vertices first. Needs a simple bipartite plane graph
// with at least 2 vertices.
Quadrangulation augment_to_quadrangulation(const PlaneGraph& pg);

// Throws InvariantError if some face is not a simple 4-cycle, the coloring is
// improper or the poles are wrong.
void validate_quadrangulation(const Quadrangulation& q);

// head[e]: the endpoint edge e points to.
struct TwoOrientation {
    std::vector<VertexId> head;
};

// Matching of edges to two out-slots per vertex other than s and t.
TwoOrientation compute_2orientation(const Quadrangulation& q);
void validate_2orientation(const Quadrangulation& q, const TwoOrientation& o);

enum class TreeColor : unsigned char { Red, Blue };

struct SeparatingDecomposition {
    TwoOrientation orientation;
    std::vector<TreeColor> color;  // per edge
};

// Colors the given 2-orientation: edges at s are red, at t blue, and around
// a white vertex each color interval starts (counter-clockwise) with its
// outgoing edge, around a black vertex it ends with it.
SeparatingDecomposition derive_separating_decomposition(const Quadrangulation& q, const TwoOrientation& o);

// Empty when every condition holds (poles, intervals, both trees), else the
// first failure.
std::string check_separating_decomposition(const Quadrangulation& q, const SeparatingDecomposition& sd);

// Spine s..t from a walk of the red tree; red edges on the upper page, blue
// on the lower, edges between spine neighbours on the spine. Validated:
// crossing-free pages, alternating trees, rotation equal to q's.
BookEmbedding equatorial_spine(const Quadrangulation& q, const SeparatingDecomposition& sd);

// Neighbours of v in one tree all to the left or all to the right.
std::vector<VertexId> non_alternating_vertices(const BookEmbedding& b, const std::vector<TreeColor>& color);

// A spanning supergraph with a one-sided Hamiltonian cycle. Input vertex v is
// vertex_of[v] of plane.
struct PoshCertificate {
    PlaneGraph plane;
    HamiltonianOrder order;
    SideAssignment sides;
    std::vector<VertexId> vertex_of;
    BookEmbedding book;  // completed layout the certificate was read from
};

bool is_star(const MultiGraph& g);
// Centre first, leaves in rotation order, all arcs on the upper page.
BookEmbedding star_book(const PlaneGraph& star);

struct BipartiteTrace {
    std::optional<Quadrangulation> quadrangulation;
    std::optional<TwoOrientation> orientation;
    std::optional<SeparatingDecomposition> decomposition;
    BookEmbedding spine;  // layout before completion
    bool star = false;
};

// Full pipeline. With compact set, the layout is restricted to the input's
// own vertices before the cycle is closed, so the certificate has exactly
// the input's vertex count; otherwise it spans the quadrangulation.
PoshCertificate bipartite_posh(const PlaneGraph& pg, bool compact = false, BipartiteTrace* trace = nullptr);

// Layout of a bipartite plane graph (star or quadrangulation route) whose
// rotation matches pg's; vertex ids follow pg.
BookEmbedding bipartite_book(const PlaneGraph& pg, BipartiteTrace* trace = nullptr);

// Certificate read from a one-sided layout: close the cycle, run the
// checker, and keep the first `keep_vertices` vertices as the input.
PoshCertificate certificate_from_book(const BookEmbedding& b, int keep_vertices);

struct CertifiedDrawing {
    Drawing drawing;               // indexed by input vertex
    std::vector<PointRef> points;  // point of H_n per input vertex
    int chain_size = 0;            // n of the H_n used
};

// Places g (vertex v at vertex_of[v]) via embed_on_hn and certifies the result.
CertifiedDrawing draw_certificate(const PoshCertificate& c, const MultiGraph& g, const EmbedOptions& opt = {});

}  // namespace posh
