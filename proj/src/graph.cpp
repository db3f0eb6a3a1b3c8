#include "posh/graph.hpp"

#include <algorithm>
#include <string>

#include "posh/errors.hpp"

namespace posh {

VertexId MultiGraph::add_vertex() {
    incident_.emplace_back();
    return num_vertices() - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw StructuralError("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v));
    EdgeId e = num_edges();
    edges_.push_back({u, v});
    incident_[u].push_back(e);
    if (u != v) incident_[v].push_back(e);
    return e;
}

int MultiGraph::max_degree() const {
    int d = 0;
    for (const auto& inc : incident_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

VertexId MultiGraph::other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw StructuralError("vertex " + std::to_string(v) + " not on edge " + std::to_string(e));
}

bool MultiGraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool MultiGraph::is_simple() const {
    if (has_loops()) return false;
    std::vector<int> seen(num_vertices(), -1);
    for (VertexId v = 0; v < num_vertices(); ++v) {
        for (EdgeId e : incident_[v]) {
            VertexId w = other(e, v);
            if (seen[w] == v) return false;
            seen[w] = v;
        }
    }
    return true;
}

std::optional<EdgeId> MultiGraph::find_edge(VertexId u, VertexId v) const {
    const auto& inc = incident_.at(u).size() <= incident_.at(v).size() ? incident_[u] : incident_[v];
    for (EdgeId e : inc) {
        const Edge& ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
    }
    return std::nullopt;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident_.at(v)) out.push_back(other(e, v));
    return out;
}

std::vector<int> MultiGraph::components(int* count) const {
    std::vector<int> comp(num_vertices(), -1);
    int c = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < num_vertices(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : incident_[v]) {
                VertexId w = other(e, v);
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

MultiGraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> keep) {
    std::vector<EdgeId> ids(keep.begin(), keep.end());
    std::sort(ids.begin(), ids.end());
    MultiGraph h(g.num_vertices());
    for (EdgeId e : ids) h.add_edge(g.edge(e).u, g.edge(e).v);
    return h;
}

}  // namespace posh
