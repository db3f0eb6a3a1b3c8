#include "posh/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "posh/errors.hpp"

namespace posh {

PlaneGraph::PlaneGraph(MultiGraph g, std::vector<std::vector<Dart>> rotation, std::vector<Dart> outer)
    : g_(std::move(g)), rot_(std::move(rotation)), outer_(std::move(outer)) {
    if (static_cast<int>(rot_.size()) != g_.num_vertices())
        throw StructuralError("rotation has wrong number of vertices");
    pos_.assign(2 * g_.num_edges(), -1);
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        int expected = 0;
        for (EdgeId e : g_.incident(v)) expected += g_.edge(e).u == g_.edge(e).v ? 2 : 1;
        if (static_cast<int>(rot_[v].size()) != expected)
            throw StructuralError("rotation at vertex " + std::to_string(v) + " has " +
                                  std::to_string(rot_[v].size()) + " darts, degree is " +
                                  std::to_string(expected));
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            Dart d = rot_[v][i];
            if (d < 0 || d >= 2 * g_.num_edges() || g_.tail(d) != v || pos_[d] != -1)
                throw StructuralError("bad dart " + std::to_string(d) + " in rotation of " +
                                      std::to_string(v));
            pos_[d] = i;
        }
    }
    if (outer_.empty() && g_.num_edges() > 0) outer_ = default_outer_darts(*this);
}

Dart PlaneGraph::ccw_next(Dart d) const {
    const auto& r = rot_[g_.tail(d)];
    int i = pos_[d] + 1;
    return r[i == static_cast<int>(r.size()) ? 0 : i];
}

Dart PlaneGraph::ccw_prev(Dart d) const {
    const auto& r = rot_[g_.tail(d)];
    int i = pos_[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
}

void PlaneGraph::reindex(VertexId v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos_[rot_[v][i]] = i;
}

VertexId PlaneGraph::add_vertex() {
    rot_.emplace_back();
    return g_.add_vertex();
}

EdgeId PlaneGraph::insert_edge(VertexId u, Dart after_u, VertexId v, Dart after_v) {
    if (u == v) throw StructuralError("insert_edge: loops are not supported");
    auto check_anchor = [&](VertexId x, Dart after) {
        if (after == -1 ? !rot_[x].empty() : g_.tail(after) != x)
            throw StructuralError("insert_edge: anchor dart does not leave vertex " + std::to_string(x));
    };
    check_anchor(u, after_u);
    check_anchor(v, after_v);
    EdgeId e = g_.add_edge(u, v);
    pos_.resize(2 * g_.num_edges(), -1);
    auto place = [&](VertexId x, Dart after, Dart d) {
        auto& r = rot_[x];
        auto it = after == -1 ? r.end() : r.begin() + pos_[after] + 1;
        r.insert(it, d);
        reindex(x);
    };
    place(u, after_u, 2 * e);
    place(v, after_v, 2 * e + 1);
    return e;
}

void PlaneGraph::move_dart(Dart d, Dart after) {
    VertexId v = g_.tail(d);
    if (g_.tail(after) != v || after == d) throw StructuralError("move_dart: bad anchor");
    auto& r = rot_[v];
    r.erase(r.begin() + pos_[d]);
    reindex(v);
    r.insert(r.begin() + pos_[after] + 1, d);
    reindex(v);
}

void PlaneGraph::set_rotation(VertexId v, std::vector<Dart> darts) {
    auto sorted_new = darts;
    auto sorted_old = rot_.at(v);
    std::sort(sorted_new.begin(), sorted_new.end());
    std::sort(sorted_old.begin(), sorted_old.end());
    if (sorted_new != sorted_old) throw StructuralError("set_rotation: dart set changed");
    rot_[v] = std::move(darts);
    reindex(v);
}

PlaneGraph PlaneGraph::mirrored() const {
    auto rot = rot_;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    std::vector<Dart> outer;
    for (Dart d : outer_) outer.push_back(twin(d));
    return PlaneGraph(g_, std::move(rot), std::move(outer));
}

namespace {

FaceSet trace_walks(const PlaneGraph& pg) {
    const MultiGraph& g = pg.graph();
    FaceSet fs;
    fs.face_of.assign(2 * g.num_edges(), -1);
    for (Dart d0 = 0; d0 < 2 * g.num_edges(); ++d0) {
        if (fs.face_of[d0] != -1) continue;
        int id = static_cast<int>(fs.walks.size());
        std::vector<Dart> walk;
        Dart d = d0;
        do {
            if (fs.face_of[d] != -1) throw StructuralError("face tracing does not close");
            fs.face_of[d] = id;
            walk.push_back(d);
            d = pg.face_next(d);
        } while (d != d0);
        fs.walks.push_back(std::move(walk));
    }
    return fs;
}

}  // namespace

FaceSet faces(const PlaneGraph& pg) {
    const MultiGraph& g = pg.graph();
    FaceSet fs = trace_walks(pg);
    // Euler per component: V_k - E_k + F_k = 2 for every component with edges.
    int ncomp = 0;
    auto comp = g.components(&ncomp);
    std::vector<long> vcount(ncomp), ecount(ncomp), fcount(ncomp);
    for (VertexId v = 0; v < g.num_vertices(); ++v) ++vcount[comp[v]];
    for (EdgeId e = 0; e < g.num_edges(); ++e) ++ecount[comp[g.edge(e).u]];
    for (const auto& w : fs.walks) ++fcount[comp[g.tail(w.front())]];
    for (int c = 0; c < ncomp; ++c) {
        if (ecount[c] == 0) continue;
        if (vcount[c] - ecount[c] + fcount[c] != 2)
            throw StructuralError("Euler relation fails on a component: V=" + std::to_string(vcount[c]) +
                                  " E=" + std::to_string(ecount[c]) + " F=" + std::to_string(fcount[c]));
    }
    if (!pg.outer_darts().empty()) fs.outer = fs.face_of.at(pg.outer_darts().front());
    return fs;
}

int euler_face_count(const PlaneGraph& pg, const FaceSet& fs) {
    int comps_with_edges = 0;
    int ncomp = 0;
    auto comp = pg.graph().components(&ncomp);
    std::vector<char> has_edge(ncomp, 0);
    for (const Edge& e : pg.graph().edges()) has_edge[comp[e.u]] = 1;
    for (char c : has_edge) comps_with_edges += c;
    return static_cast<int>(fs.walks.size()) - comps_with_edges + 1;
}

std::vector<Dart> default_outer_darts(const PlaneGraph& pg) {
    const MultiGraph& g = pg.graph();
    FaceSet fs = trace_walks(pg);
    int ncomp = 0;
    auto comp = g.components(&ncomp);
    std::vector<int> best(ncomp, -1);
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
        int c = comp[g.tail(fs.walks[f].front())];
        if (best[c] == -1 || fs.walks[f].size() > fs.walks[best[c]].size()) best[c] = f;
    }
    std::vector<Dart> out;
    for (int f : best)
        if (f != -1) out.push_back(*std::min_element(fs.walks[f].begin(), fs.walks[f].end()));
    return out;
}

}  // namespace posh

namespace posh {

PlaneRestriction restrict_plane(const PlaneGraph& pg, const std::vector<char>& keep_vertex,
                                const std::vector<char>& keep_edge) {
    const MultiGraph& g = pg.graph();
    PlaneRestriction r;
    r.vertex_map.assign(g.num_vertices(), -1);
    r.edge_map.assign(g.num_edges(), -1);
    int nv = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (keep_vertex.at(v)) r.vertex_map[v] = nv++;
    MultiGraph h(nv);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (keep_edge.at(e) && r.vertex_map[ed.u] != -1 && r.vertex_map[ed.v] != -1)
            r.edge_map[e] = h.add_edge(r.vertex_map[ed.u], r.vertex_map[ed.v]);
    }
    std::vector<std::vector<Dart>> rot(nv);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (r.vertex_map[v] == -1) continue;
        for (Dart d : pg.rotation(v)) {
            EdgeId ne = r.edge_map[edge_of(d)];
            if (ne != -1) rot[r.vertex_map[v]].push_back(2 * ne + (d & 1));
        }
    }
    r.pg = PlaneGraph(std::move(h), std::move(rot));
    return r;
}

PlaneGraph plane_from_faces(int n, const std::vector<std::vector<VertexId>>& face_cycles, int outer) {
    MultiGraph g(n);
    std::map<std::pair<VertexId, VertexId>, Dart> dart;
    std::set<std::pair<VertexId, VertexId>> listed;
    for (const auto& f : face_cycles)
        for (size_t i = 0; i < f.size(); ++i) {
            VertexId a = f[i], b = f[(i + 1) % f.size()];
            if (a == b || !listed.insert({a, b}).second) throw StructuralError("plane_from_faces: dart listed twice");
            if (!dart.count({b, a})) {
                EdgeId e = g.add_edge(a, b);
                dart[{a, b}] = 2 * e;
                dart[{b, a}] = 2 * e + 1;
            }
        }
    // ccw_next(a -> b) = a -> prev, where prev precedes a on the face left of a -> b
    std::vector<Dart> next(2 * g.num_edges(), -1);
    for (const auto& f : face_cycles) {
        const size_t k = f.size();
        for (size_t i = 0; i < k; ++i) {
            VertexId a = f[i], b = f[(i + 1) % k], p = f[(i + k - 1) % k];
            next[dart.at({a, b})] = dart.at({a, p});
        }
    }
    std::vector<std::vector<Dart>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        Dart start = g.dart_out(g.incident(v)[0], v);
        Dart d = start;
        do {
            rot[v].push_back(d);
            d = next.at(d);
            if (d == -1 || rot[v].size() > static_cast<size_t>(g.degree(v)))
                throw StructuralError("plane_from_faces: faces do not close around a vertex");
        } while (d != start);
    }
    const auto& of = face_cycles.at(outer);
    return PlaneGraph(std::move(g), std::move(rot), {dart.at({of[0], of[1]})});
}

}  // namespace posh
