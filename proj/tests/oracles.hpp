#pragma once

// Brute-force reference checks used by the tests. Nothing here calls the
// library routine it is meant to check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "posh/drawing.hpp"
#include "posh/plane_graph.hpp"

namespace oracles {

using namespace posh;

inline int edge_between(const MultiGraph& g, VertexId a, VertexId b) {
    for (EdgeId e : g.incident(a))
        if (g.other(e, a) == b) return e;
    return -1;
}

// Faces traced directly from the rotation, as dart -> face id.
inline std::vector<int> face_ids(const PlaneGraph& pg) {
    std::vector<int> id(2 * pg.num_edges(), -1);
    int next = 0;
    for (Dart d0 = 0; d0 < 2 * pg.num_edges(); ++d0) {
        if (id[d0] != -1) continue;
        for (Dart d = d0; id[d] == -1; d = pg.ccw_prev(twin(d))) id[d] = next;
        ++next;
    }
    return id;
}

// The definition, read literally: the special edge v_n v_1 touches the outer
// face, and for j = 2..n the cycle edges at v_j are neighbours in the rotation
// of v_j restricted to v_1..v_{j+1} (v_{n+1} = v_1). Returns the first failing
// j (1-based), 0 if the order is one-sided, -1 if it is not a Hamiltonian
// cycle with the special edge on the outer face.
inline int literal_one_sided(const PlaneGraph& pg, const std::vector<VertexId>& order) {
    const MultiGraph& g = pg.graph();
    const int n = static_cast<int>(order.size());
    for (int j = 0; j + 1 < n; ++j)
        if (edge_between(g, order[j], order[j + 1]) < 0) return -1;
    if (n <= 2) return 0;
    int special = edge_between(g, order[n - 1], order[0]);
    if (special < 0) return -1;
    auto fid = face_ids(pg);
    int outer = fid.at(pg.outer_darts().front());
    if (fid[2 * special] != outer && fid[2 * special + 1] != outer) return -1;
    std::vector<int> pos(n);
    for (int j = 0; j < n; ++j) pos[order[j]] = j;
    for (int j = 1; j < n; ++j) {
        VertexId v = order[j];
        VertexId a = order[j - 1], b = order[(j + 1) % n];
        std::vector<VertexId> ring;
        for (Dart d : pg.rotation(v)) {
            VertexId h = g.head(d);
            if (pos[h] <= j + 1 || (j == n - 1)) ring.push_back(h);
        }
        const int k = static_cast<int>(ring.size());
        bool ok = false;
        for (int t = 0; t < k; ++t) {
            VertexId x = ring[t], y = ring[(t + 1) % k];
            if ((x == a && y == b) || (x == b && y == a)) ok = true;
        }
        if (!ok) return j + 1;
    }
    return 0;
}

// Every Hamiltonian order of pg (all n! permutations) with its literal verdict.
template <class F>
void for_each_order(const PlaneGraph& pg, F&& f) {
    std::vector<VertexId> order(pg.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    do {
        int r = literal_one_sided(pg, order);
        if (r >= 0) f(order, r);
    } while (std::next_permutation(order.begin(), order.end()));
}

// Angular order of neighbours around each vertex of a straight-line drawing,
// by floating point angles (fine for the small coordinates used in tests).
inline std::vector<std::vector<EdgeId>> drawn_rotation(const MultiGraph& g, const std::vector<IntPoint>& pts) {
    std::vector<std::vector<EdgeId>> rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<long double, EdgeId>> items;
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other(e, v);
            long double dx = static_cast<long double>(pts[w].x - pts[v].x);
            long double dy = static_cast<long double>(pts[w].y - pts[v].y);
            items.push_back({std::atan2(dy, dx), e});
        }
        std::sort(items.begin(), items.end());
        for (auto& it : items) rot[v].push_back(it.second);
    }
    return rot;
}

inline bool cyclic_equal(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b.front());
    if (it == a.end()) return false;
    std::rotate(a.begin(), it, a.end());
    return a == b;
}

// Does the drawing have the rotation system of pg, or of its mirror image?
inline bool realizes(const PlaneGraph& pg, const std::vector<IntPoint>& pts) {
    auto drawn = drawn_rotation(pg.graph(), pts);
    bool same = true, mirror = true;
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
        std::vector<EdgeId> r;
        for (Dart d : pg.rotation(v)) r.push_back(edge_of(d));
        same = same && cyclic_equal(drawn[v], r);
        std::reverse(r.begin(), r.end());
        mirror = mirror && cyclic_equal(drawn[v], r);
    }
    return same || mirror;
}

// Crossing test by direct big-integer cross products.
inline bool straight_line_plane(const MultiGraph& g, const std::vector<IntPoint>& pts) {
    auto orient = [](const IntPoint& a, const IntPoint& b, const IntPoint& c) {
        const BigInt det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        return (det > 0) - (det < 0);
    };
    auto on_seg = [&](const IntPoint& a, const IntPoint& b, const IntPoint& c) {
        return orient(a, b, c) == 0 && std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
    };
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId w = v + 1; w < g.num_vertices(); ++w)
            if (pts[v] == pts[w]) return false;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
            const Edge &E = g.edge(e), &F = g.edge(f);
            const IntPoint &a = pts[E.u], &b = pts[E.v], &c = pts[F.u], &d = pts[F.v];
            int shared = (E.u == F.u) + (E.u == F.v) + (E.v == F.u) + (E.v == F.v);
            if (shared == 2) return false;  // parallel edges overlap
            if (shared == 1) {
                // only trouble: the far endpoint of one lies on the other
                VertexId s = (E.u == F.u || E.u == F.v) ? E.u : E.v;
                const IntPoint& x = pts[s == E.u ? E.v : E.u];
                const IntPoint& y = pts[s == F.u ? F.v : F.u];
                if (on_seg(pts[s], x, y) || on_seg(pts[s], y, x)) return false;
                continue;
            }
            int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (o1 * o2 < 0 && o3 * o4 < 0) return false;
            if (on_seg(a, b, c) || on_seg(a, b, d) || on_seg(c, d, a) || on_seg(c, d, b)) return false;
        }
    return true;
}

// Book layout drawn with straight pieces: vertex at position i sits at (4i, 0);
// an arc of span k and nest t climbs to height +-(k * 1000 + t + 1) one unit
// after its left end and comes down one unit before its right end.
struct PolylineBook {
    Drawing drawing;
    std::vector<IntPoint> first_bend;  // per dart: first point after the tail
};

template <class Book>
PolylineBook polyline_book(const Book& b) {
    PolylineBook out;
    const auto& g = b.graph;
    std::vector<long> pos(g.num_vertices());
    for (size_t i = 0; i < b.spine.size(); ++i) pos[b.spine[i]] = static_cast<long>(i);
    auto at = [](long x, long y) { return IntPoint{BigInt(x), BigInt(y)}; };
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out.drawing.placement.push_back(RatPoint{BigInt(4 * pos[v]), BigInt(0)});
    out.first_bend.resize(2 * g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const VertexId u = g.edge(e).u, v = g.edge(e).v;
        const long pu = pos[u], pv = pos[v];
        if (static_cast<int>(b.page[e]) == 0) {  // spine
            out.first_bend[2 * e] = at(4 * pv, 0);
            out.first_bend[2 * e + 1] = at(4 * pu, 0);
            continue;
        }
        const long sign = static_cast<int>(b.page[e]) == 1 ? 1 : -1;
        const long h = sign * (std::labs(pu - pv) * 1000 + b.nest[e] + 1);
        const long dir = pv > pu ? 1 : -1;
        IntPoint nu = at(4 * pu + dir, h), nv = at(4 * pv - dir, h);
        out.drawing.bends[e] = {RatPoint{nu.x, nu.y}, RatPoint{nv.x, nv.y}};
        out.first_bend[2 * e] = nu;
        out.first_bend[2 * e + 1] = nv;
    }
    return out;
}

// ccw order of darts around each vertex of the polyline drawing
template <class Book>
std::vector<std::vector<Dart>> polyline_rotation(const Book& b) {
    auto pb = polyline_book(b);
    const auto& g = b.graph;
    std::vector<std::vector<Dart>> rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<long double, Dart>> items;
        const long double vx = static_cast<long double>(numerator(pb.drawing.placement[v]->x));
        for (EdgeId e : g.incident(v)) {
            Dart d = g.dart_out(e, v);
            long double dx = static_cast<long double>(pb.first_bend[d].x) - vx;
            long double dy = static_cast<long double>(pb.first_bend[d].y);
            long double a = std::atan2(dy, dx);
            if (a < 0) a += 2 * M_PIl;
            items.push_back({a, d});
        }
        std::sort(items.begin(), items.end());
        for (auto& it : items) rot[v].push_back(it.second);
    }
    return rot;
}

}  // namespace oracles
