#include "posh/drawing.hpp"

#include <algorithm>
#include <string>

#include "posh/errors.hpp"

namespace posh {

namespace {

struct Seg {
    int a, b;  // indices into the point table
    SegmentRef ref;
};

}  // namespace

CertifiedReport verify_drawing(const MultiGraph& g, const Drawing& d) {
    // point table: vertices first, then bends
    std::vector<RatPoint> pts;
    std::vector<int> owner;  // vertex id, or -1 - edge for bends
    std::vector<int> vertex_slot(g.num_vertices(), -1);
    for (const Edge& e : g.edges())
        if (e.u == e.v) throw StructuralError("verify_drawing: loop edge");
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v >= static_cast<int>(d.placement.size()) || !d.placement[v])
            throw StructuralError("verify_drawing: vertex " + std::to_string(v) + " is not placed");
        vertex_slot[v] = static_cast<int>(pts.size());
        pts.push_back(*d.placement[v]);
        owner.push_back(v);
    }
    std::vector<Seg> segs;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::vector<int> chain{vertex_slot[g.edge(e).u]};
        if (auto it = d.bends.find(e); it != d.bends.end()) {
            for (const RatPoint& p : it->second) {
                chain.push_back(static_cast<int>(pts.size()));
                pts.push_back(p);
                owner.push_back(-1 - e);
            }
        }
        chain.push_back(vertex_slot[g.edge(e).v]);
        for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i)
            segs.push_back({chain[i], chain[i + 1], {e, i}});
    }

    CertifiedReport rep;
    rep.segments = static_cast<int>(segs.size());

    // common denominator so that every predicate runs on integers
    BigInt lcm = 1;
    for (const RatPoint& p : pts) {
        for (const Rational* r : {&p.x, &p.y}) {
            BigInt den = boost::multiprecision::denominator(*r);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
    }
    std::vector<IntPoint> ip;
    ip.reserve(pts.size());
    BigInt limit = BigInt(1) << 62;
    bool small = true;
    for (const RatPoint& p : pts) {
        IntPoint q{boost::multiprecision::numerator(p.x) * (lcm / boost::multiprecision::denominator(p.x)),
                   boost::multiprecision::numerator(p.y) * (lcm / boost::multiprecision::denominator(p.y))};
        if (abs(q.x) >= limit || abs(q.y) >= limit) small = false;
        ip.push_back(std::move(q));
    }

    // distinct locations (only points that matter: placed vertices and bends)
    {
        std::vector<int> idx(pts.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return ip[a].x != ip[b].x ? ip[a].x < ip[b].x : ip[a].y < ip[b].y;
        });
        for (size_t i = 0; i + 1 < idx.size(); ++i) {
            if (ip[idx[i]] == ip[idx[i + 1]]) rep.coincident.push_back({owner[idx[i]], owner[idx[i + 1]]});
        }
    }

    if (small) {
        std::vector<SmallPoint> sp(ip.size());
        for (size_t i = 0; i < ip.size(); ++i)
            sp[i] = {static_cast<__int128>(static_cast<long long>(ip[i].x)),
                     static_cast<__int128>(static_cast<long long>(ip[i].y))};
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j)
                if (segments_conflict_small(sp[segs[i].a], sp[segs[i].b], sp[segs[j].a], sp[segs[j].b]))
                    rep.crossings.push_back({segs[i].ref, segs[j].ref});
    } else {
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j)
                if (segments_conflict(ip[segs[i].a], ip[segs[i].b], ip[segs[j].a], ip[segs[j].b]))
                    rep.crossings.push_back({segs[i].ref, segs[j].ref});
    }
    return rep;
}

PlaneGraph embedding_of_drawing(const MultiGraph& g, const std::vector<IntPoint>& pts) {
    const int n = g.num_vertices();
    std::vector<std::vector<Dart>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : g.incident(v)) rot[v].push_back(g.dart_out(e, v));
        std::sort(rot[v].begin(), rot[v].end(), [&](Dart a, Dart b) {
            const IntPoint &ha = pts[g.head(a)], &hb = pts[g.head(b)];
            return angle_less(ha.x - pts[v].x, ha.y - pts[v].y, hb.x - pts[v].x, hb.y - pts[v].y);
        });
    }
    // per component: lowest-leftmost vertex, dart with the largest angle below pi
    int ncomp = 0;
    auto comp = g.components(&ncomp);
    std::vector<VertexId> corner(ncomp, -1);
    for (VertexId v = 0; v < n; ++v) {
        VertexId& c = corner[comp[v]];
        if (g.degree(v) == 0) continue;
        if (c == -1 || pts[v].x < pts[c].x || (pts[v].x == pts[c].x && pts[v].y < pts[c].y)) c = v;
    }
    std::vector<Dart> outer;
    for (VertexId c : corner) {
        if (c == -1) continue;
        Dart best = rot[c].back();
        for (Dart d : rot[c]) {
            const IntPoint& h = pts[g.head(d)];
            if (h.y > pts[c].y || (h.y == pts[c].y && h.x > pts[c].x)) best = d;
        }
        outer.push_back(best);
    }
    return PlaneGraph(g, std::move(rot), std::move(outer));
}

}  // namespace posh
