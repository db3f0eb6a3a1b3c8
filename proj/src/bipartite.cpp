#include "posh/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "posh/errors.hpp"
#include "posh/planarity.hpp"

namespace posh {

namespace {

// Joins every component to the one holding vertex 0 by an edge through both
// outer faces. Returns the outer dart of the result (-1 without edges).
Dart connect_components(PlaneGraph& q) {
    const MultiGraph& g0 = q.graph();
    int ncomp = 0;
    auto comp = g0.components(&ncomp);
    // outer dart per component, -1 for isolated vertices
    std::vector<Dart> outer_of(ncomp, -1);
    std::vector<VertexId> rep(ncomp, -1);
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        if (rep[comp[v]] == -1) rep[comp[v]] = v;
    for (Dart d : q.outer_darts()) outer_of[comp[q.tail(d)]] = d;
    for (Dart d : default_outer_darts(q))
        if (outer_of[comp[q.tail(d)]] == -1) outer_of[comp[q.tail(d)]] = d;

    const int main = comp[0];
    Dart main_outer = outer_of[main];
    for (int c = 0; c < ncomp; ++c) {
        if (c == main) continue;
        const Dart other = outer_of[c];
        const VertexId x = other == -1 ? rep[c] : q.tail(other);
        const VertexId y = main_outer == -1 ? 0 : q.tail(main_outer);
        const EdgeId e = q.insert_edge(y, main_outer, x, other);
        if (main_outer == -1) main_outer = other == -1 ? dart_from(e, false) : other;
    }
    return main_outer;
}

// One augmentation step on the first face that is not a simple 4-cycle.
// Returns false when every face is already fine.
bool fix_one_face(PlaneGraph& q) {
    const FaceSet fs = faces(q);
    for (const auto& walk : fs.walks) {
        const int k = static_cast<int>(walk.size());
        std::vector<VertexId> w(k);
        for (int i = 0; i < k; ++i) w[i] = q.tail(walk[i]);
        auto at = [&](int i) { return w[((i % k) + k) % k]; };
        std::vector<int> count(q.num_vertices(), 0);
        for (VertexId v : w) ++count[v];
        const bool simple = std::all_of(w.begin(), w.end(), [&](VertexId v) { return count[v] == 1; });
        if (k == 4 && simple) continue;

        if (k == 2) {
            const VertexId z = q.add_vertex();
            q.insert_edge(w[0], walk[0], z, -1);
            return true;
        }
        for (int i = 0; i < k && k >= 6; ++i) {
            const VertexId a = at(i), b = at(i + 3);
            // walks alternate colours, so only these two coincidences can happen
            if (a == at(i + 2) || b == at(i + 1)) continue;
            if (q.graph().find_edge(a, b)) continue;
            q.insert_edge(a, walk[i], b, walk[(i + 3) % k]);
            return true;
        }
        for (int i = 0; i < k; ++i) {
            if (count[w[i]] < 2) continue;
            const VertexId before = at(i - 1), after = at(i + 1);
            if (before == after) continue;  // only a leaf turns back, and leaves occur once
            const VertexId z = q.add_vertex();
            const EdgeId e = q.insert_edge(before, walk[((i - 1) % k + k) % k], z, -1);
            q.insert_edge(after, walk[(i + 1) % k], z, dart_from(e, true));
            return true;
        }
        throw InvariantError("augment: face of length " + std::to_string(k) + " has neither a chord nor a repeated corner");
    }
    return false;
}

std::vector<VertexId> outer_face_vertices(const PlaneGraph& pg) {
    const FaceSet fs = faces(pg);
    std::vector<VertexId> out;
    if (fs.outer < 0) return out;
    for (Dart d : fs.walks[fs.outer]) out.push_back(pg.tail(d));
    return out;
}

// Outgoing darts of v under o, in rotation order.
std::vector<Dart> out_darts(const PlaneGraph& pg, const TwoOrientation& o, VertexId v) {
    std::vector<Dart> out;
    for (Dart d : pg.rotation(v))
        if (o.head[edge_of(d)] != v) out.push_back(d);
    return out;
}

// Index (0/1) of the out-edge whose colour interval holds position p at v. A
// white vertex's interval starts with its out-edge counter-clockwise, a black
// vertex's ends with it.
int interval_of(int p, int pa, int pb, int deg, bool white) {
    auto ccw_dist = [deg](int from, int to) { return ((to - from) % deg + deg) % deg; };
    if (white) return ccw_dist(pa, p) < ccw_dist(pa, pb) ? 0 : 1;
    // black: interval of a is (pb, pa]
    return ccw_dist(pb, p) != 0 && ccw_dist(pb, p) <= ccw_dist(pb, pa) ? 0 : 1;
}

bool same_cycle(std::span<const Dart> a, std::span<const Dart> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b[0]);
    if (it == a.end()) return false;
    const size_t off = static_cast<size_t>(it - a.begin());
    for (size_t i = 0; i < b.size(); ++i)
        if (a[(off + i) % a.size()] != b[i]) return false;
    return true;
}

bool reaches_root(const PlaneGraph& pg, const SeparatingDecomposition& sd, TreeColor c, VertexId root,
                  VertexId skip, std::string& why) {
    const int n = pg.num_vertices();
    std::vector<VertexId> parent(n, -1);
    for (EdgeId e = 0; e < pg.num_edges(); ++e) {
        if (sd.color[e] != c) continue;
        const Edge& ed = pg.graph().edge(e);
        const VertexId h = sd.orientation.head[e];
        const VertexId t = h == ed.u ? ed.v : ed.u;
        if (parent[t] != -1) {
            why = "vertex " + std::to_string(t) + " has two outgoing edges of one colour";
            return false;
        }
        parent[t] = h;
    }
    const char* name = c == TreeColor::Red ? "red" : "blue";
    for (VertexId v = 0; v < n; ++v) {
        if (v == skip || v == root) continue;
        VertexId x = v;
        for (int steps = 0; x != root; ++steps) {
            if (x == -1 || x == skip || steps > n) {
                why = std::string(name) + " path from " + std::to_string(v) + " does not reach its root";
                return false;
            }
            x = parent[x];
        }
    }
    if (parent[root] != -1 || parent[skip] != -1) {
        why = std::string("a pole has an outgoing ") + name + " edge";
        return false;
    }
    return true;
}

}  // namespace

Quadrangulation augment_to_quadrangulation(const PlaneGraph& pg) {
    if (pg.num_vertices() < 2) throw PreconditionError("augment: need at least 2 vertices");
    if (!pg.graph().is_simple()) throw PreconditionError("augment: graph must be simple");
    two_coloring(pg.graph());  // throws on odd cycles

    Quadrangulation q;
    q.plane = pg;
    q.original_vertices = pg.num_vertices();
    q.original_edges = pg.num_edges();
    Dart outer = connect_components(q.plane);
    q.plane.set_outer({outer});
    while (fix_one_face(q.plane)) {
    }

    q.color = two_coloring(q.plane.graph()).color;
    std::vector<VertexId> black;
    for (VertexId v : outer_face_vertices(q.plane))
        if (q.color[v] == 0) black.push_back(v);
    std::sort(black.begin(), black.end());
    if (black.size() != 2) throw InvariantError("augment: outer face does not have two black corners");
    q.s = black[0];
    q.t = black[1];
    validate_quadrangulation(q);
    return q;
}

void validate_quadrangulation(const Quadrangulation& q) {
    const MultiGraph& g = q.plane.graph();
    if (!g.is_simple()) throw InvariantError("quadrangulation: not simple");
    if (q.plane.outer_darts().size() != 1) throw InvariantError("quadrangulation: not connected");
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (q.color.at(g.edge(e).u) == q.color.at(g.edge(e).v))
            throw InvariantError("quadrangulation: edge " + std::to_string(e) + " joins equal colours");
    const FaceSet fs = faces(q.plane);
    for (const auto& walk : fs.walks) {
        std::vector<VertexId> w;
        for (Dart d : walk) w.push_back(q.plane.tail(d));
        std::sort(w.begin(), w.end());
        if (w.size() != 4 || std::adjacent_find(w.begin(), w.end()) != w.end())
            throw InvariantError("quadrangulation: a face is not a simple 4-cycle");
    }
    if (q.s == q.t || q.color.at(q.s) != 0 || q.color.at(q.t) != 0)
        throw InvariantError("quadrangulation: poles must be distinct black vertices");
    auto outer = outer_face_vertices(q.plane);
    if (std::count(outer.begin(), outer.end(), q.s) != 1 || std::count(outer.begin(), outer.end(), q.t) != 1)
        throw InvariantError("quadrangulation: poles must lie on the outer face");
}

TwoOrientation compute_2orientation(const Quadrangulation& q) {
    const MultiGraph& g = q.plane.graph();
    const int n = g.num_vertices(), m = g.num_edges();
    TwoOrientation o;
    o.head.assign(m, -1);
    std::vector<VertexId> tail(m, -1);
    std::vector<std::vector<EdgeId>> owned(n);
    auto is_pole = [&](VertexId v) { return v == q.s || v == q.t; };

    std::vector<char> seen;
    // Kuhn-style augmenting path: give e a slot at one of its non-pole ends
    std::function<bool(EdgeId)> place = [&](EdgeId e) {
        for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
            if (is_pole(v) || seen[v] || v == tail[e]) continue;
            seen[v] = 1;
            if (owned[v].size() < 2) {
                owned[v].push_back(e);
                tail[e] = v;
                return true;
            }
            for (EdgeId& f : owned[v]) {
                if (place(f)) {
                    f = e;
                    tail[e] = v;
                    return true;
                }
            }
        }
        return false;
    };
    for (EdgeId e = 0; e < m; ++e) {
        seen.assign(n, 0);
        if (!place(e)) throw InvariantError("2-orientation: edge " + std::to_string(e) + " cannot be oriented");
    }
    for (EdgeId e = 0; e < m; ++e) o.head[e] = g.other(e, tail[e]);
    validate_2orientation(q, o);
    return o;
}

void validate_2orientation(const Quadrangulation& q, const TwoOrientation& o) {
    const MultiGraph& g = q.plane.graph();
    if (static_cast<int>(o.head.size()) != g.num_edges()) throw InvariantError("2-orientation: wrong size");
    std::vector<int> out(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (o.head[e] != ed.u && o.head[e] != ed.v) throw InvariantError("2-orientation: head is not an endpoint");
        ++out[o.head[e] == ed.u ? ed.v : ed.u];
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const int want = (v == q.s || v == q.t) ? 0 : 2;
        if (out[v] != want)
            throw InvariantError("2-orientation: vertex " + std::to_string(v) + " has out-degree " +
                                 std::to_string(out[v]));
    }
}

SeparatingDecomposition derive_separating_decomposition(const Quadrangulation& q, const TwoOrientation& o) {
    validate_2orientation(q, o);
    const PlaneGraph& pg = q.plane;
    const MultiGraph& g = pg.graph();
    const int n = g.num_vertices(), m = g.num_edges();
    std::vector<std::vector<Dart>> outs(n);
    for (VertexId v = 0; v < n; ++v) outs[v] = out_darts(pg, o, v);

    // bit[v]: index in outs[v] of the red out-edge. Every edge u->v ties bit[u]
    // to bit[v] (or fixes bit[u] when v is a pole).
    struct Tie {
        VertexId to;
        int parity;
    };
    std::vector<std::vector<Tie>> ties(n);
    std::vector<int> bit(n, -1);
    std::deque<VertexId> queue;
    auto fix = [&](VertexId v, int b) {
        if (bit[v] == -1) {
            bit[v] = b;
            queue.push_back(v);
        } else if (bit[v] != b) {
            throw InvariantError("separating decomposition: inconsistent colour at vertex " + std::to_string(v));
        }
    };
    for (EdgeId e = 0; e < m; ++e) {
        const VertexId h = o.head[e], t = g.other(e, h);
        const Dart dt = g.dart_out(e, t);
        const int iu = outs[t][0] == dt ? 0 : 1;
        if (h == q.s) {
            fix(t, iu);
            continue;
        }
        if (h == q.t) {
            fix(t, 1 - iu);
            continue;
        }
        const int deg = g.degree(h);
        const int j = interval_of(pg.position(g.dart_out(e, h)), pg.position(outs[h][0]), pg.position(outs[h][1]),
                                  deg, q.color[h] == 1);
        // e red <=> bit[t] == iu <=> bit[h] == j
        ties[t].push_back({h, iu ^ j});
        ties[h].push_back({t, iu ^ j});
    }
    auto drain = [&] {
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const Tie& tie : ties[v]) fix(tie.to, bit[v] ^ tie.parity);
        }
    };
    drain();
    for (VertexId v = 0; v < n; ++v) {
        if (bit[v] != -1 || v == q.s || v == q.t) continue;
        fix(v, 0);
        drain();
    }

    SeparatingDecomposition sd;
    sd.orientation = o;
    sd.color.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        const VertexId t = g.other(e, o.head[e]);
        const int iu = outs[t][0] == g.dart_out(e, t) ? 0 : 1;
        sd.color[e] = bit[t] == iu ? TreeColor::Red : TreeColor::Blue;
    }
    if (auto why = check_separating_decomposition(q, sd); !why.empty())
        throw InvariantError("separating decomposition: " + why);
    return sd;
}

std::string check_separating_decomposition(const Quadrangulation& q, const SeparatingDecomposition& sd) {
    const PlaneGraph& pg = q.plane;
    const MultiGraph& g = pg.graph();
    try {
        validate_2orientation(q, sd.orientation);
    } catch (const InvariantError& e) {
        return e.what();
    }
    if (static_cast<int>(sd.color.size()) != g.num_edges()) return "colour vector has the wrong size";
    const auto& head = sd.orientation.head;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        for (VertexId p : {q.s, q.t}) {
            if (ed.u != p && ed.v != p) continue;
            if (head[e] != p) return "edge " + std::to_string(e) + " leaves a pole";
            if (sd.color[e] != (p == q.s ? TreeColor::Red : TreeColor::Blue))
                return "edge " + std::to_string(e) + " at a pole has the wrong colour";
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v == q.s || v == q.t) continue;
        auto rot = pg.rotation(v);
        const int deg = static_cast<int>(rot.size());
        // rotate so that rot starts a colour run
        int start = -1;
        for (int i = 0; i < deg; ++i)
            if (sd.color[edge_of(rot[i])] != sd.color[edge_of(rot[(i + deg - 1) % deg])]) start = i;
        const std::string at = " at vertex " + std::to_string(v);
        if (start == -1) return "only one colour" + at;
        int runs = 0;
        for (int i = 0; i < deg; ++i) {
            const int a = (start + i) % deg;
            const int prev = (a + deg - 1) % deg, next = (a + 1) % deg;
            const bool first = sd.color[edge_of(rot[a])] != sd.color[edge_of(rot[prev])];
            const bool last = sd.color[edge_of(rot[a])] != sd.color[edge_of(rot[next])];
            runs += first;
            const bool out = head[edge_of(rot[a])] != v;
            const bool want_out = q.color[v] == 1 ? first : last;
            if (out != want_out) return "interval condition fails" + at;
        }
        if (runs != 2) return "colours do not form two intervals" + at;
    }
    std::string why;
    if (!reaches_root(pg, sd, TreeColor::Red, q.s, q.t, why)) return why;
    if (!reaches_root(pg, sd, TreeColor::Blue, q.t, q.s, why)) return why;
    return {};
}

std::vector<VertexId> non_alternating_vertices(const BookEmbedding& b, const std::vector<TreeColor>& color) {
    const auto pos = b.positions();
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < b.graph.num_vertices(); ++v) {
        bool left[2] = {false, false}, right[2] = {false, false};
        for (EdgeId e : b.graph.incident(v)) {
            const int c = color.at(e) == TreeColor::Red ? 0 : 1;
            (pos[b.graph.other(e, v)] < pos[v] ? left : right)[c] = true;
        }
        if ((left[0] && right[0]) || (left[1] && right[1])) bad.push_back(v);
    }
    return bad;
}

BookEmbedding equatorial_spine(const Quadrangulation& q, const SeparatingDecomposition& sd) {
    if (auto why = check_separating_decomposition(q, sd); !why.empty())
        throw PreconditionError("equatorial spine: " + why);
    const PlaneGraph& pg = q.plane;
    const MultiGraph& g = pg.graph();
    const int n = g.num_vertices();
    const auto& head = sd.orientation.head;
    auto is_red = [&](Dart d) { return sd.color[edge_of(d)] == TreeColor::Red; };

    // children of v in the red tree, counter-clockwise after the parent edge
    // (after the outer face at s)
    const FaceSet fs = faces(pg);
    auto children = [&](VertexId v) {
        Dart from = -1;
        for (Dart d : pg.rotation(v)) {
            if (v == q.s ? fs.face_of[d] == fs.outer : (is_red(d) && head[edge_of(d)] != v)) from = d;
        }
        if (from == -1) throw InvariantError("equatorial spine: no anchor at vertex " + std::to_string(v));
        std::vector<VertexId> out;
        for (Dart d = pg.ccw_next(from);; d = pg.ccw_next(d)) {
            if (is_red(d) && head[edge_of(d)] == v) out.push_back(pg.head(d));
            if (d == from) break;
        }
        return out;
    };

    std::vector<VertexId> spine;
    // black vertices precede their red subtree, white ones follow it
    std::function<void(VertexId)> walk = [&](VertexId v) {
        const bool white = q.color[v] == 1;
        if (!white) spine.push_back(v);
        for (VertexId c : children(v)) walk(c);
        if (white) spine.push_back(v);
    };
    walk(q.s);
    spine.push_back(q.t);
    if (static_cast<int>(spine.size()) != n) throw InvariantError("equatorial spine: red tree does not span");

    BookEmbedding b;
    b.graph = g;
    b.spine = std::move(spine);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        b.page.push_back(sd.color[e] == TreeColor::Red ? Page::Upper : Page::Lower);
        b.nest.push_back(0);
    }

    validate_book(b, "equatorial spine");
    if (!non_alternating_vertices(b, sd.color).empty())
        throw InvariantError("equatorial spine: tree not alternating at vertex " +
                             std::to_string(non_alternating_vertices(b, sd.color).front()));
    const auto pos = b.positions();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const VertexId right = pos[ed.u] > pos[ed.v] ? ed.u : ed.v;
        // only blue edges lead left from a black vertex, only red from a white one
        if ((q.color[right] == 0) != (sd.color[e] == TreeColor::Blue))
            throw InvariantError("equatorial spine: wrong colour to the left of vertex " + std::to_string(right));
    }
    auto rot = book_rotation(b);
    for (VertexId v = 0; v < n; ++v)
        if (!same_cycle(rot[v], pg.rotation(v)))
            throw InvariantError("equatorial spine: layout changes the rotation at vertex " + std::to_string(v));
    return b;
}

bool is_star(const MultiGraph& g) {
    const int n = g.num_vertices();
    if (n < 2 || g.num_edges() != n - 1 || !g.is_simple()) return false;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

BookEmbedding star_book(const PlaneGraph& star) {
    const MultiGraph& g = star.graph();
    if (!is_star(g)) throw PreconditionError("star layout: input is not a star");
    VertexId centre = 0;
    while (g.degree(centre) != g.num_vertices() - 1) ++centre;
    BookEmbedding b;
    b.graph = g;
    b.spine.push_back(centre);
    for (Dart d : star.rotation(centre)) b.spine.push_back(star.head(d));
    b.page.assign(g.num_edges(), Page::Upper);
    b.nest.assign(g.num_edges(), 0);
    validate_book(b, "star layout");
    return b;
}

BookEmbedding bipartite_book(const PlaneGraph& pg, BipartiteTrace* trace) {
    if (is_star(pg.graph())) {
        auto b = star_book(pg);
        if (trace) {
            trace->star = true;
            trace->spine = b;
        }
        return b;
    }
    auto q = augment_to_quadrangulation(pg);
    auto o = compute_2orientation(q);
    auto sd = derive_separating_decomposition(q, o);
    auto b = equatorial_spine(q, sd);
    if (trace) {
        trace->quadrangulation = q;
        trace->orientation = o;
        trace->decomposition = sd;
        trace->spine = b;
    }
    return b;
}

PoshCertificate certificate_from_book(const BookEmbedding& b, int keep_vertices) {
    validate_book(b, "certificate");
    if (auto bad = one_sidedness_violations(b); !bad.empty())
        throw InvariantError("certificate: vertex " + std::to_string(bad.front()) + " has back edges on both pages");
    BookPosh bp = book_to_posh(b);
    PoshCertificate c;
    c.plane = std::move(bp.plane);
    c.order = std::move(bp.order);
    c.book = std::move(bp.book);
    c.vertex_of.resize(keep_vertices);
    for (VertexId v = 0; v < keep_vertices; ++v) c.vertex_of[v] = v;
    if (c.plane.num_vertices() < 2) {
        c.sides.inside.assign(c.plane.num_vertices(), 1);
        return c;
    }
    auto chk = check_one_sided(c.plane, c.order);
    if (!chk.ok()) throw InvariantError("certificate: order is not one-sided (" + chk.detail + ")");
    c.sides = *chk.sides;
    return c;
}

PoshCertificate bipartite_posh(const PlaneGraph& pg, bool compact, BipartiteTrace* trace) {
    const int n = pg.num_vertices();
    if (n < 2) {
        BookEmbedding b;
        b.graph = pg.graph();
        for (VertexId v = 0; v < n; ++v) b.spine.push_back(v);
        return certificate_from_book(b, n);
    }
    BookEmbedding b = bipartite_book(pg, trace);
    if (compact && b.graph.num_vertices() > n) {
        std::vector<char> keep_v(b.graph.num_vertices(), 0), keep_e(b.graph.num_edges(), 0);
        std::fill(keep_v.begin(), keep_v.begin() + n, 1);
        std::fill(keep_e.begin(), keep_e.begin() + pg.num_edges(), 1);
        b = restrict_book(b, keep_v, keep_e);
    }
    auto c = certificate_from_book(b, n);
    // an alternating layout read backwards is one-sided as well
    if (auto chk = check_one_sided(c.plane, c.order.reversed()); !chk.ok())
        throw InvariantError("bipartite: reversed order is not one-sided (" + chk.detail + ")");
    return c;
}

CertifiedDrawing draw_certificate(const PoshCertificate& c, const MultiGraph& g, const EmbedOptions& opt) {
    const int big = c.plane.num_vertices();
    if (static_cast<int>(c.vertex_of.size()) != g.num_vertices())
        throw PreconditionError("draw: certificate and graph disagree on the vertex count");
    CertifiedDrawing out;
    out.chain_size = std::max(big, 2);
    const PointSet ps = build_hn(out.chain_size);
    MultiGraph sub(big);
    for (const Edge& ed : g.edges()) sub.add_edge(c.vertex_of[ed.u], c.vertex_of[ed.v]);

    Drawing full;
    std::vector<PointRef> refs;
    if (big < 2) {
        full.placement.assign(big, RatPoint{1, 0});
        refs.assign(big, PointRef{1, true});
    } else {
        full = embed_on_hn(c.plane, sub, c.order, c.sides, ps, opt);
        if (!full.certified) throw InvariantError("draw: embedding was not certified");
        refs = placement_refs(c.order, c.sides);
    }
    out.drawing.placement.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out.drawing.placement[v] = full.placement[c.vertex_of[v]];
        out.points.push_back(refs[c.vertex_of[v]]);
    }
    out.drawing.certified = verify_drawing(g, out.drawing).crossing_free();
    if (!out.drawing.certified) throw InvariantError("draw: restricted drawing has crossings");
    return out;
}

}  // namespace posh
