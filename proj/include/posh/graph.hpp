#pragma once

#include <optional>
#include <span>
#include <vector>

namespace posh {

using VertexId = int;
using EdgeId = int;

// A dart is an edge with a direction: 2e runs u->v, 2e+1 runs v->u.
using Dart = int;

constexpr EdgeId edge_of(Dart d) { return d >> 1; }
constexpr Dart twin(Dart d) { return d ^ 1; }
constexpr Dart dart_from(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }

struct Edge {
    VertexId u;
    VertexId v;
};

class MultiGraph {
  public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : incident_(n) {}

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);

    int num_vertices() const { return static_cast<int>(incident_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(incident_.at(v).size()); }
    int max_degree() const;

    VertexId other(EdgeId e, VertexId v) const;
    VertexId tail(Dart d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
    VertexId head(Dart d) const { return (d & 1) ? edges_[d >> 1].u : edges_[d >> 1].v; }
    // dart of e leaving v
    Dart dart_out(EdgeId e, VertexId v) const { return edges_[e].u == v ? 2 * e : 2 * e + 1; }

    bool has_loops() const;
    bool is_simple() const;
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;

    // Connected component index per vertex, plus component count.
    std::vector<int> components(int* count = nullptr) const;

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

// Subgraph induced by an edge subset on the same vertex set; edge ids renumbered
// in increasing order of the kept ids.
MultiGraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> keep);

}  // namespace posh
