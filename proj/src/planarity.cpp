#include "posh/planarity.hpp"

#include <algorithm>
#include <iterator>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "posh/errors.hpp"

namespace posh {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

}  // namespace

PlaneGraph planar_embed(const MultiGraph& g) {
    if (g.has_loops()) throw DomainError("planar_embed: loops are not supported");
    const int n = g.num_vertices();
    BGraph bg(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);
    auto eidx = boost::get(boost::edge_index, bg);

    std::vector<std::vector<BEdge>> emb(n);
    auto emb_map = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = emb_map);
    if (!planar) {
        std::vector<BEdge> kur;
        boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                            boost::boyer_myrvold_params::kuratowski_subgraph =
                                                std::back_inserter(kur));
        std::vector<int> witness;
        for (const BEdge& be : kur) witness.push_back(eidx[be]);
        std::sort(witness.begin(), witness.end());
        throw NonPlanarError("graph is not planar", std::move(witness));
    }

    std::vector<std::vector<Dart>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        for (const BEdge& be : emb[v]) rot[v].push_back(g.dart_out(eidx[be], v));
    }
    PlaneGraph pg(g, std::move(rot));
    faces(pg);  // Euler check
    return pg;
}

TwoColoring two_coloring(const MultiGraph& g) {
    const int n = g.num_vertices();
    TwoColoring tc;
    tc.color.assign(n, -1);
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<int> depth(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (tc.color[s] != -1) continue;
        tc.color[s] = 0;
        std::vector<VertexId> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other(e, v);
                if (tc.color[w] == -1) {
                    tc.color[w] = 1 - tc.color[v];
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (tc.color[w] == tc.color[v]) {
                    // climb both BFS paths to their meeting point
                    std::vector<VertexId> left{v}, right{w};
                    VertexId a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = g.other(parent_edge[a], a);
                            left.push_back(a);
                        } else {
                            b = g.other(parent_edge[b], b);
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    // cycle: v .. meet .. w (then back to v along e)
                    std::vector<VertexId> cycle = left;
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    throw NotBipartiteError("graph is not bipartite", std::move(cycle));
                }
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) (tc.color[v] == 0 ? tc.black : tc.white).push_back(v);
    return tc;
}

}  // namespace posh
