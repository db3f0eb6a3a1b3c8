#include "posh/onebend.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "posh/bipartite.hpp"
#include "posh/errors.hpp"
#include "posh/planarity.hpp"

namespace posh {

namespace {

// Joins every component to the first one through both outer faces.
void connect_components(PlaneGraph& pg) {
    const MultiGraph& g = pg.graph();
    if (g.num_edges() == 0) pg.insert_edge(0, -1, 1, -1);
    int count = 0;
    auto comp = pg.graph().components(&count);
    if (count == 1) return;
    std::vector<Dart> outer_of(count, -1);
    for (Dart d : default_outer_darts(pg)) outer_of[comp[pg.tail(d)]] = d;
    const Dart hub = outer_of[comp[pg.tail(2 * 0)]];  // edge 0 lies in the main component
    const int main = comp[pg.tail(hub)];
    std::vector<char> joined(count, 0);
    joined[main] = 1;
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
        const int c = comp[v];
        if (joined[c]) continue;
        joined[c] = 1;
        const Dart anchor = outer_of[c];
        const VertexId w = anchor == -1 ? v : pg.tail(anchor);
        // both darts go into their outer faces, so the new edge stays outside
        pg.insert_edge(pg.tail(hub), hub, w, anchor);
    }
    pg.set_outer({hub});
}

}  // namespace

PlaneGraph triangulate(const PlaneGraph& pg) {
    if (pg.num_vertices() < 3) throw DomainError("triangulate: need n >= 3");
    if (!pg.graph().is_simple()) throw DomainError("triangulate: simple graphs only");
    PlaneGraph t = pg;
    connect_components(t);
    for (;;) {
        const FaceSet fs = faces(t);
        bool changed = false;
        for (const auto& walk : fs.walks) {
            const int k = static_cast<int>(walk.size());
            if (k <= 3) continue;
            for (int i = 0; i < k; ++i) {
                const VertexId a = t.tail(walk[i]), b = t.tail(walk[(i + 2) % k]);
                if (a == b || t.graph().find_edge(a, b)) continue;
                t.insert_edge(a, walk[i], b, walk[(i + 2) % k]);
                changed = true;
                break;
            }
            if (!changed) throw InvariantError("triangulate: face of length " + std::to_string(k) + " has no chord");
            break;  // walks are stale now
        }
        if (!changed) break;
    }
    t.set_outer(default_outer_darts(t));
    const int n = t.num_vertices();
    if (t.num_edges() != 3 * n - 6) throw InvariantError("triangulate: edge count is not 3n - 6");
    return t;
}

std::vector<EdgeId> dual_perfect_matching(const PlaneGraph& tri) {
    const FaceSet fs = faces(tri);
    const int f = static_cast<int>(fs.walks.size());
    for (const auto& w : fs.walks)
        if (w.size() != 3) throw PreconditionError("dual matching: not a triangulation");
    using Dual = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Dual dual(f);
    for (EdgeId e = 0; e < tri.num_edges(); ++e) boost::add_edge(fs.face_of[2 * e], fs.face_of[2 * e + 1], dual);
    std::vector<boost::graph_traits<Dual>::vertex_descriptor> mate(f);
    boost::edmonds_maximum_cardinality_matching(dual, &mate[0]);
    std::vector<EdgeId> out;
    std::vector<char> used(f, 0);
    for (EdgeId e = 0; e < tri.num_edges(); ++e) {
        const int a = fs.face_of[2 * e], b = fs.face_of[2 * e + 1];
        if (used[a] || used[b] || static_cast<int>(mate[a]) != b) continue;
        used[a] = used[b] = 1;
        out.push_back(e);
    }
    if (static_cast<int>(out.size()) * 2 != f) throw InvariantError("dual matching is not perfect");
    return out;
}

SubdivisionPlan bipartize_by_subdivision(const PlaneGraph& pg) {
    const MultiGraph& g = pg.graph();
    if (!g.is_simple()) throw DomainError("subdivision plan: simple graphs only");
    const int n = g.num_vertices(), m = g.num_edges();
    SubdivisionPlan plan;
    bool bipartite = true;
    try {
        two_coloring(g);
    } catch (const NotBipartiteError&) {
        bipartite = false;
    }
    if (!bipartite) {
        const PlaneGraph tri = triangulate(pg);
        plan.triangulation_edges = tri.num_edges();
        const auto matched = dual_perfect_matching(tri);
        plan.matched_edges = static_cast<int>(matched.size());
        for (EdgeId e : matched)
            if (e < m) plan.edges.push_back(e);
        std::sort(plan.edges.begin(), plan.edges.end());
    }

    // rebuild with each planned edge split at a new vertex
    std::vector<char> split(m, 0);
    for (EdgeId e : plan.edges) split[e] = 1;
    MultiGraph h(n);
    plan.image.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        const Edge ed = g.edge(e);
        if (!split[e]) {
            plan.image[e].first = h.add_edge(ed.u, ed.v);
            continue;
        }
        const VertexId b = h.add_vertex();
        plan.image[e] = {h.add_edge(ed.u, b), b, h.add_edge(b, ed.v)};
    }
    // dart of the image leaving the input endpoint
    auto image_dart = [&](Dart d) {
        const EdgeImage& im = plan.image[edge_of(d)];
        if (im.bend < 0) return dart_from(im.first, d & 1);
        return (d & 1) ? dart_from(im.second, true) : dart_from(im.first, false);
    };
    std::vector<std::vector<Dart>> rot(h.num_vertices());
    for (VertexId v = 0; v < n; ++v)
        for (Dart d : pg.rotation(v)) rot[v].push_back(image_dart(d));
    for (EdgeId e : plan.edges) {
        const EdgeImage& im = plan.image[e];
        rot[im.bend] = {dart_from(im.first, true), dart_from(im.second, false)};
    }
    std::vector<Dart> outer;
    for (Dart d : pg.outer_darts()) outer.push_back(image_dart(d));
    plan.subdivided = PlaneGraph(std::move(h), std::move(rot), std::move(outer));
    faces(plan.subdivided);
    two_coloring(plan.subdivided.graph());  // throws if the plan failed
    if (n >= 3 && static_cast<int>(plan.edges.size()) > n - 2) throw InvariantError("subdivision plan exceeds n - 2");
    return plan;
}

OneBendDrawing one_bend_drawing(const MultiGraph& g) {
    if (!g.is_simple()) throw DomainError("one-bend drawing: simple graphs only");
    const int n = g.num_vertices();
    OneBendDrawing out;
    out.chain_budget = std::max(2, 2 * n - 2);
    out.point_budget = 2 * out.chain_budget - 2;
    out.plan = bipartize_by_subdivision(planar_embed(g));
    const PlaneGraph& sub = out.plan.subdivided;

    const PoshCertificate cert = bipartite_posh(sub, true);
    const CertifiedDrawing cd = draw_certificate(cert, sub.graph());
    out.chain_size = cd.chain_size;
    if (out.chain_size > out.chain_budget) throw InvariantError("one-bend drawing: chain exceeds H_{2n-2}");

    out.drawing.placement.assign(cd.drawing.placement.begin(), cd.drawing.placement.begin() + n);
    out.vertex_points.assign(cd.points.begin(), cd.points.begin() + n);
    for (EdgeId e : out.plan.edges) {
        const VertexId b = out.plan.image[e].bend;
        out.drawing.bends[e] = {*cd.drawing.placement[b]};
        out.bend_points[e] = cd.points[b];
    }
    out.drawing.certified = verify_drawing(g, out.drawing).crossing_free();
    if (!out.drawing.certified) throw InvariantError("one-bend drawing: crossings after merging bends");
    return out;
}

}  // namespace posh
