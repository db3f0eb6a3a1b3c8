#include "posh/embedder.hpp"

#include <algorithm>
#include <string>

#include "posh/errors.hpp"

namespace posh {

std::vector<VertexId> SideAssignment::inner_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(inside.size()); ++v)
        if (inside[v]) out.push_back(v);
    return out;
}

std::vector<VertexId> SideAssignment::outer_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(inside.size()); ++v)
        if (!inside[v]) out.push_back(v);
    return out;
}

HamiltonianOrder HamiltonianOrder::reversed() const {
    HamiltonianOrder r{{order.rbegin(), order.rend()}};
    if (!edges.empty()) {
        r.edges.assign(edges.rbegin() + 1, edges.rend());
        r.edges.push_back(edges.back());
    }
    return r;
}

namespace {

struct CycleEdges {
    std::vector<EdgeId> path;  // path[j] joins order[j] and order[j+1]
    EdgeId special = -1;       // order[n-1] - order[0]
};

CycleEdges cycle_edges(const MultiGraph& g, const HamiltonianOrder& ho) {
    const int n = static_cast<int>(ho.order.size());
    if (n != g.num_vertices())
        throw PreconditionError("order has " + std::to_string(n) + " entries, graph has " +
                                std::to_string(g.num_vertices()) + " vertices");
    std::vector<char> seen(n, 0);
    for (VertexId v : ho.order) {
        if (v < 0 || v >= n || seen[v]) throw PreconditionError("order is not a permutation");
        seen[v] = 1;
    }
    CycleEdges ce;
    if (!ho.edges.empty()) {
        if (static_cast<int>(ho.edges.size()) != n) throw PreconditionError("cycle edge list has the wrong length");
        for (int j = 0; j < n; ++j) {
            const Edge& ed = g.edge(ho.edges[j]);
            const VertexId a = ho.order[j], b = ho.order[(j + 1) % n];
            if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
                throw PreconditionError("cycle edge " + std::to_string(ho.edges[j]) + " does not join its vertices");
        }
        ce.path.assign(ho.edges.begin(), ho.edges.end() - 1);
        ce.special = n == 2 ? ce.path[0] : ho.edges.back();
        return ce;
    }
    for (int j = 0; j + 1 < n; ++j) {
        auto e = g.find_edge(ho.order[j], ho.order[j + 1]);
        if (!e)
            throw PreconditionError("order is not a Hamiltonian path: no edge " + std::to_string(ho.order[j]) +
                                    "-" + std::to_string(ho.order[j + 1]));
        ce.path.push_back(*e);
    }
    if (n >= 3) {
        auto e = g.find_edge(ho.order[n - 1], ho.order[0]);
        if (!e) throw PreconditionError("special edge v_n v_1 is missing");
        ce.special = *e;
    } else if (n == 2) {
        ce.special = ce.path[0];
    }
    return ce;
}

}  // namespace

OneSidedCheck check_one_sided(const PlaneGraph& pg_in, const HamiltonianOrder& ho) {
    const MultiGraph& g = pg_in.graph();
    const int n = g.num_vertices();
    CycleEdges ce = cycle_edges(g, ho);
    OneSidedCheck res;
    SideAssignment sa;
    sa.inside.assign(n, 0);
    if (n <= 2) {
        res.sides = sa;
        return res;
    }

    FaceSet fs = faces(pg_in);
    const VertexId v1 = ho.order.front();
    const Dart d1n = g.dart_out(ce.special, v1);
    int outer = -1;
    for (Dart d : pg_in.outer_darts())
        if (fs.face_of[d] == fs.face_of[d1n] || fs.face_of[d] == fs.face_of[twin(d1n)]) outer = fs.face_of[d];
    if (outer == -1) throw PreconditionError("special edge is not on the outer face");
    sa.mirrored = fs.face_of[d1n] != outer;
    const PlaneGraph pg = sa.mirrored ? pg_in.mirrored() : pg_in;

    std::vector<int> pos(n);
    for (int j = 0; j < n; ++j) pos[ho.order[j]] = j;

    for (int j = 1; j < n; ++j) {
        const VertexId v = ho.order[j];
        const Dart prev = g.dart_out(ce.path[j - 1], v);
        const Dart next = g.dart_out(j + 1 < n ? ce.path[j] : ce.special, v);
        const int limit = j + 1 < n ? j + 1 : n - 1;  // induced on v_1..v_{j+1}
        bool in_any = false, out_any = false, in_back = false;
        bool inside_arc = true;
        Dart d = pg.ccw_next(next);
        for (size_t step = 0; step + 1 < pg.rotation(v).size(); ++step, d = pg.ccw_next(d)) {
            if (d == prev) {
                inside_arc = false;
                continue;
            }
            const int p = pos[g.head(d)];
            if (p > limit) continue;
            if (inside_arc) {
                in_any = true;
                if (p < j - 1) in_back = true;
            } else {
                out_any = true;
            }
        }
        if (in_any && out_any) {
            res.violation_step = j + 1;
            res.detail = "vertex " + std::to_string(v) + " has earlier neighbours on both sides of the cycle";
            return res;
        }
        sa.inside[v] = in_back ? 1 : 0;
    }
    res.sides = sa;
    return res;
}

std::vector<PointRef> placement_refs(const HamiltonianOrder& ho, const SideAssignment& sa) {
    std::vector<PointRef> refs(ho.order.size(), PointRef{0, true});
    for (int j = 0; j < static_cast<int>(ho.order.size()); ++j) {
        VertexId v = ho.order[j];
        refs[v] = PointRef{j + 1, j < 2 || sa.inside.at(v) != 0};
    }
    return refs;
}

namespace {

// Internal state of the incremental placement, used only by the step checks.
struct EmbedState {
    const PlaneGraph& pg;
    const std::vector<IntPoint>& pt;
    int i = 0;                               // number of placed vertices
    std::vector<char> present;               // edge of G_i
    std::vector<std::vector<Dart>> geo_rot;  // angular order per vertex
    std::vector<int> geo_pos;
    std::vector<VertexId> left_path, right_path;  // boundary v_1 .. v_i above, v_i .. v_1 below

    EmbedState(const PlaneGraph& p, const std::vector<IntPoint>& points) : pg(p), pt(points) {
        present.assign(pg.num_edges(), 0);
        geo_rot.resize(pg.num_vertices());
        geo_pos.assign(2 * pg.num_edges(), -1);
    }

    const MultiGraph& g() const { return pg.graph(); }

    void insert_geo(Dart d) {
        const IntPoint& o = pt[g().tail(d)];
        const IntPoint& h = pt[g().head(d)];
        BigInt dx = h.x - o.x, dy = h.y - o.y;
        auto& r = geo_rot[g().tail(d)];
        auto it = std::lower_bound(r.begin(), r.end(), d, [&](Dart a, Dart) {
            const IntPoint& ha = pt[g().head(a)];
            return angle_less(ha.x - o.x, ha.y - o.y, dx, dy);
        });
        r.insert(it, d);
        for (int k = 0; k < static_cast<int>(r.size()); ++k) geo_pos[r[k]] = k;
    }

    Dart geo_face_next(Dart d) const {
        Dart t = twin(d);
        const auto& r = geo_rot[g().tail(t)];
        int k = geo_pos[t];
        return r[k == 0 ? r.size() - 1 : k - 1];
    }

    Dart comb_face_next(Dart d) const {
        Dart t = twin(d);
        Dart c = pg.ccw_prev(t);
        while (!present[edge_of(c)]) c = pg.ccw_prev(c);
        return c;
    }

    std::vector<Dart> walk(Dart start, bool geometric) const {
        std::vector<Dart> w;
        Dart d = start;
        do {
            w.push_back(d);
            d = geometric ? geo_face_next(d) : comb_face_next(d);
            if (w.size() > 2 * present.size() + 2) throw InvariantError("face walk does not close");
        } while (d != start);
        return w;
    }
};

std::string step_msg(int i, const std::string& what) { return "embed step " + std::to_string(i) + ": " + what; }

}  // namespace

Drawing embed_on_hn(const PlaneGraph& pg_in, const MultiGraph& sub, const HamiltonianOrder& ho,
                    const SideAssignment& sa, const PointSet& ps, const EmbedOptions& opt) {
    const MultiGraph& g = pg_in.graph();
    const int n = g.num_vertices();
    if (ps.n() < n) throw PreconditionError("point set too small for the graph");
    if (sub.num_vertices() != n) throw PreconditionError("subgraph must span the same vertex set");
    if (static_cast<int>(sa.inside.size()) != n) throw PreconditionError("side assignment has wrong size");
    CycleEdges ce = cycle_edges(g, ho);
    {
        // sub's edges must be edges of the supergraph (as endpoint multisets)
        std::vector<int> avail(g.num_edges(), 1);
        for (const Edge& e : sub.edges()) {
            bool found = false;
            for (EdgeId f : g.incident(e.u)) {
                if (avail[f] && g.other(f, e.u) == e.v) {
                    avail[f] = 0;
                    found = true;
                    break;
                }
            }
            if (!found) throw PreconditionError("subgraph edge missing from the supergraph");
        }
    }

    const PlaneGraph pg = sa.mirrored ? pg_in.mirrored() : pg_in;
    auto refs = placement_refs(ho, sa);
    std::vector<IntPoint> pt(n);
    for (VertexId v = 0; v < n; ++v) pt[v] = ps.at(refs[v]);
    std::vector<int> pos(n);
    for (int j = 0; j < n; ++j) pos[ho.order[j]] = j;

    const bool steps = opt.step_checks.value_or(n <= 100);
    const bool vis = steps && opt.visibility_checks.value_or(n <= 16);
    if (steps && n >= 2) {
        EmbedState st(pg, pt);
        const VertexId v1 = ho.order[0];
        const Dart special_out = g.dart_out(ce.special, v1);
        std::vector<EdgeId> placed_edges;
        for (int i = 1; i <= n; ++i) {
            st.i = i;
            const VertexId vi = ho.order[i - 1];
            std::vector<EdgeId> fresh;
            for (EdgeId e : g.incident(vi))
                if (pos[g.other(e, vi)] < i - 1) fresh.push_back(e);
            // Property 1: the new edges do not cross the drawing so far
            for (EdgeId e : fresh) {
                for (EdgeId f : placed_edges)
                    if (segments_conflict(pt[g.edge(e).u], pt[g.edge(e).v], pt[g.edge(f).u], pt[g.edge(f).v]))
                        throw InvariantError(step_msg(i, "edge " + std::to_string(e) + " crosses edge " +
                                                             std::to_string(f)));
                for (EdgeId f : fresh)
                    if (f < e && segments_conflict(pt[g.edge(e).u], pt[g.edge(e).v], pt[g.edge(f).u],
                                                   pt[g.edge(f).v]))
                        throw InvariantError(step_msg(i, "new edges cross"));
            }
            for (EdgeId e : fresh) {
                st.present[e] = 1;
                st.insert_geo(2 * e);
                st.insert_geo(2 * e + 1);
                placed_edges.push_back(e);
            }
            if (i < 2) continue;
            // Property 2: outer walks agree
            Dart comb_start = special_out;
            while (!st.present[edge_of(comb_start)]) comb_start = pg.ccw_prev(comb_start);
            // v_1 is leftmost, so the outer face holds the ray pointing left:
            // it lies left of the last dart below angle pi
            const auto& gr = st.geo_rot[v1];
            Dart geo_start = gr.back();
            for (Dart d : gr) {
                const IntPoint& h = pt[g.head(d)];
                if (h.y > pt[v1].y || (h.y == pt[v1].y && h.x > pt[v1].x)) geo_start = d;
            }
            auto wc = st.walk(comb_start, false);
            auto wg = st.walk(geo_start, true);
            auto it = std::find(wc.begin(), wc.end(), wg.front());
            bool same = wc.size() == wg.size() && it != wc.end();
            if (same) {
                std::rotate(wc.begin(), it, wc.end());
                same = wc == wg;
            }
            // Once v_n is in, a vertex of V_O at q_n routes the special edge below
            // everything: the drawn outer face can differ, the sphere embedding
            // may not.
            if (!same && i == n) {
                same = true;
                for (VertexId v = 0; v < n && same; ++v) {
                    const auto& geo = st.geo_rot[v];
                    std::vector<Dart> comb(pg.rotation(v).begin(), pg.rotation(v).end());
                    auto at = geo.empty() ? comb.end() : std::find(comb.begin(), comb.end(), geo.front());
                    if (comb.size() != geo.size() || (at == comb.end() && !geo.empty())) {
                        same = false;
                        break;
                    }
                    if (!geo.empty()) std::rotate(comb.begin(), at, comb.end());
                    same = comb == geo;
                }
            }
            if (!same) throw InvariantError(step_msg(i, "outer walk of the drawing differs from the plane graph"));
            // Property 3: boundary vertices see the later columns
            if (vis && i < n) {
                auto& left = st.left_path;
                auto& right = st.right_path;
                left.assign(1, v1);
                right.clear();
                bool on_left = true;
                for (Dart d : wg) {
                    VertexId h = g.head(d);
                    (on_left ? left : right).push_back(h);
                    if (h == vi) on_left = false;
                }
                auto sees = [&](VertexId u, const IntPoint& target) {
                    for (EdgeId f : placed_edges)
                        if (segments_conflict(pt[u], target, pt[g.edge(f).u], pt[g.edge(f).v])) return false;
                    return true;
                };
                for (int j = i + 1; j <= n; ++j) {
                    for (VertexId u : left)
                        if (!sees(u, ps.p(j)))
                            throw InvariantError(step_msg(i, "vertex " + std::to_string(u) + " cannot see p" +
                                                                 std::to_string(j)));
                    for (VertexId u : right)
                        if (!sees(u, ps.q(j)))
                            throw InvariantError(step_msg(i, "vertex " + std::to_string(u) + " cannot see q" +
                                                                 std::to_string(j)));
                }
            }
        }
    }

    Drawing dr;
    dr.placement.resize(n);
    for (VertexId v = 0; v < n; ++v) dr.placement[v] = to_rational(pt[v]);
    auto rep = verify_drawing(sub, dr);
    if (!rep.crossing_free()) {
        const auto& c = rep.crossings.empty() ? std::pair<SegmentRef, SegmentRef>{} : rep.crossings.front();
        int step = 0;
        for (EdgeId e : {c.first.edge, c.second.edge}) {
            step = std::max({step, pos[sub.edge(e).u] + 1, pos[sub.edge(e).v] + 1});
        }
        throw InvariantError(step_msg(step, "final drawing is not crossing-free"));
    }
    dr.certified = true;
    return dr;
}

}  // namespace posh

namespace posh {

std::vector<HamiltonianOrder> one_sided_orders(const PlaneGraph& pg, std::size_t limit) {
    const MultiGraph& g = pg.graph();
    const int n = g.num_vertices();
    std::vector<HamiltonianOrder> out;
    if (n < 3) return out;
    std::vector<VertexId> path;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= limit) return;
        const VertexId last = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (!g.find_edge(last, path.front())) return;
            try {
                if (check_one_sided(pg, HamiltonianOrder{path}).ok()) out.push_back(HamiltonianOrder{path});
            } catch (const PreconditionError&) {
                // closing edge not on the outer face
            }
            return;
        }
        auto next = g.neighbors(last);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (VertexId w : next) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        used[s] = 1;
        path = {s};
        rec(rec);
        used[s] = 0;
    }
    return out;
}

}  // namespace posh
