#include "posh/subcubic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "posh/errors.hpp"
#include "posh/planarity.hpp"

namespace posh {

namespace {

void require_subcubic(const MultiGraph& g) {
    if (g.has_loops() || !g.is_simple()) throw DomainError("subcubic: graph must be simple");
    if (g.max_degree() > 3) throw DomainError("subcubic: maximum degree exceeds 3");
}

bool same_cycle(std::vector<Dart> a, const std::vector<Dart>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b.front());
    if (it == a.end()) return false;
    std::rotate(a.begin(), it, a.end());
    return a == b;
}

int cut_of_mask(const MultiGraph& g, std::uint32_t mask) {
    int c = 0;
    for (const Edge& e : g.edges()) c += ((mask >> e.u) ^ (mask >> e.v)) & 1U;
    return c;
}

CutPartition cut_from_mask(int n, std::uint32_t mask) {
    CutPartition c;
    c.side.resize(n);
    for (int v = 0; v < n; ++v) c.side[v] = static_cast<char>((mask >> v) & 1U);
    return c;
}

// A closed walk of darts split into the faces on its left and on its right.
struct CycleSides {
    std::vector<char> left_face;  // per face
    int left_vertices = 0;
    int right_vertices = 0;
    int component = -1;
};

CycleSides sides_of(const PlaneGraph& pg, const FaceSet& fs, const std::vector<int>& vcomp,
                    const std::vector<Dart>& cycle) {
    const int nf = static_cast<int>(fs.walks.size());
    std::vector<char> on_cycle_edge(pg.num_edges(), 0), on_cycle_vertex(pg.num_vertices(), 0);
    for (Dart d : cycle) {
        on_cycle_edge[edge_of(d)] = 1;
        on_cycle_vertex[pg.tail(d)] = 1;
    }
    auto flood = [&](bool left) {
        std::vector<char> seen(nf, 0);
        std::queue<int> q;
        for (Dart d : cycle) {
            int f = fs.face_of[left ? d : twin(d)];
            if (!seen[f]) seen[f] = 1, q.push(f);
        }
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (Dart d : fs.walks[f]) {
                if (on_cycle_edge[edge_of(d)]) continue;
                int h = fs.face_of[twin(d)];
                if (!seen[h]) seen[h] = 1, q.push(h);
            }
        }
        return seen;
    };
    CycleSides s;
    s.left_face = flood(true);
    auto right = flood(false);
    for (int f = 0; f < nf; ++f)
        if (s.left_face[f] && right[f]) throw InvariantError("cycle sides: both sides share a face");
    std::vector<char> counted(pg.num_vertices(), 0);
    const int comp = vcomp[pg.tail(cycle.front())];
    for (int f = 0; f < nf; ++f)
        for (Dart d : fs.walks[f]) {
            VertexId v = pg.tail(d);
            if (on_cycle_vertex[v] || counted[v] || vcomp[v] != comp) continue;
            counted[v] = 1;
            (s.left_face[f] ? s.left_vertices : s.right_vertices)++;
        }
    s.component = vcomp[pg.tail(cycle.front())];
    return s;
}

int inside_count(const CycleSides& s, int outer_face) {
    return s.left_face[outer_face] ? s.right_vertices : s.left_vertices;
}

Dart dart_between(const MultiGraph& g, VertexId a, VertexId b) {
    auto e = g.find_edge(a, b);
    if (!e) throw InvariantError("cycle: missing edge");
    return g.dart_out(*e, a);
}

std::vector<Dart> cycle_darts(const MultiGraph& g, const std::vector<VertexId>& c) {
    std::vector<Dart> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(dart_between(g, c[i], c[(i + 1) % c.size()]));
    return out;
}

// Components that are a K4: every face is a triangle there, so the outer one
// always holds a vertex. They are laid out as a whole later on.
std::vector<char> in_k4_component(const MultiGraph& g) {
    int count = 0;
    auto comp = g.components(&count);
    std::vector<int> nv(count, 0), ne(count, 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) nv[comp[v]]++;
    for (const Edge& e : g.edges()) ne[comp[e.u]]++;
    std::vector<char> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = nv[comp[v]] == 4 && ne[comp[v]] == 6;
    return out;
}

// Simple k-cycles outside K4 components.
std::vector<std::vector<VertexId>> simple_cycles(const MultiGraph& g, int k) {
    std::vector<std::vector<VertexId>> out;
    const int n = g.num_vertices();
    const auto skip = in_k4_component(g);
    std::vector<std::vector<VertexId>> nb(n);
    for (VertexId v = 0; v < n; ++v) {
        nb[v] = g.neighbors(v);
        std::sort(nb[v].begin(), nb[v].end());
        nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
    }
    auto adj = [&](VertexId a, VertexId b) { return std::binary_search(nb[a].begin(), nb[a].end(), b); };
    for (VertexId a = 0; a < n; ++a) {
        if (skip[a]) continue;
        if (k == 3) {
            for (VertexId b : nb[a])
                if (b > a)
                    for (VertexId c : nb[b])
                        if (c > b && adj(c, a)) out.push_back({a, b, c});
        } else {
            for (VertexId b : nb[a])
                for (VertexId d : nb[a]) {
                    if (b <= a || d <= b) continue;
                    for (VertexId c : nb[b])
                        if (c > a && c != d && adj(c, d)) out.push_back({a, b, c, d});
                }
        }
    }
    return out;
}

bool covered(const MultiGraph& g, const std::vector<VertexId>& q, const std::set<EdgeId>& m) {
    int inside = 0;
    for (int i = 0; i < 4; ++i)
        if (m.count(*g.find_edge(q[i], q[(i + 1) % 4]))) ++inside;
    return inside == 2;
}

// Separating triangles and covered separating quads for the best choice of
// outer face per component.
struct Potential {
    int triangles = 0;
    int quads = 0;
    std::vector<Dart> outer;
    bool operator<(const Potential& o) const { return std::tie(triangles, quads) < std::tie(o.triangles, o.quads); }
};

Potential evaluate(const PlaneGraph& pg, const std::set<EdgeId>& m) {
    const FaceSet fs = faces(pg);  // throws on a non-planar rotation
    const MultiGraph& g = pg.graph();
    int ncomp = 0;
    auto vcomp = g.components(&ncomp);
    struct Item {
        CycleSides sides;
        bool triangle;
    };
    std::vector<Item> items;
    for (auto& c : simple_cycles(g, 3)) items.push_back({sides_of(pg, fs, vcomp, cycle_darts(g, c)), true});
    for (auto& c : simple_cycles(g, 4))
        if (covered(g, c, m)) items.push_back({sides_of(pg, fs, vcomp, cycle_darts(g, c)), false});

    std::vector<std::vector<int>> comp_faces(ncomp);
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f)
        comp_faces[vcomp[pg.tail(fs.walks[f].front())]].push_back(f);
    std::vector<int> current(ncomp, -1);
    for (Dart o : pg.outer_darts()) current[vcomp[pg.tail(o)]] = fs.face_of[o];

    Potential best;
    for (int c = 0; c < ncomp; ++c) {
        if (comp_faces[c].empty()) continue;
        std::pair<int, int> top{1 << 30, 1 << 30};
        int chosen = -1;
        for (int f : comp_faces[c]) {
            std::pair<int, int> here{0, 0};
            for (auto& it : items)
                if (it.sides.component == c && inside_count(it.sides, f) > 0) (it.triangle ? here.first : here.second)++;
            if (here < top || (here == top && f == current[c])) top = here, chosen = f;
        }
        best.triangles += top.first;
        best.quads += top.second;
        best.outer.push_back(fs.walks[chosen].front());
    }
    return best;
}

PlaneGraph reversed_at(const PlaneGraph& pg, const std::vector<VertexId>& vs) {
    PlaneGraph out = pg;
    for (VertexId v : vs) {
        auto r = pg.rotation(v);
        out.set_rotation(v, std::vector<Dart>(r.rbegin(), r.rend()));
    }
    return out;
}

std::vector<std::vector<VertexId>> subsets(const std::vector<VertexId>& base, std::size_t min_size = 1) {
    std::vector<std::vector<VertexId>> out;
    const std::size_t k = base.size();
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        std::vector<VertexId> s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1U) s.push_back(base[i]);
        if (s.size() >= min_size) out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
    return out;
}

std::vector<VertexId> inside_vertices(const PlaneGraph& pg, const std::vector<VertexId>& cyc) {
    const FaceSet fs = faces(pg);
    const MultiGraph& g = pg.graph();
    auto vcomp = g.components();
    auto darts = cycle_darts(g, cyc);
    auto s = sides_of(pg, fs, vcomp, darts);
    int outer = -1;
    for (Dart o : pg.outer_darts())
        if (vcomp[pg.tail(o)] == s.component) outer = fs.face_of[o];
    const bool want_left = !s.left_face[outer];
    std::vector<char> on(pg.num_vertices(), 0), seen(pg.num_vertices(), 0);
    for (VertexId v : cyc) on[v] = 1;
    std::vector<VertexId> out;
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
        if (static_cast<bool>(s.left_face[f]) != want_left) continue;
        if (vcomp[pg.tail(fs.walks[f].front())] != s.component) continue;
        for (Dart d : fs.walks[f]) {
            VertexId v = pg.tail(d);
            if (!on[v] && !seen[v]) seen[v] = 1, out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int cut_size(const MultiGraph& g, const CutPartition& cut) {
    int c = 0;
    for (const Edge& e : g.edges()) c += cut.side.at(e.u) != cut.side.at(e.v);
    return c;
}

bool locally_maximal(const MultiGraph& g, const CutPartition& cut) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int same = 0;
        for (EdgeId e : g.incident(v)) same += cut.side[g.other(e, v)] == cut.side[v];
        if (2 * same > g.degree(v)) return false;
    }
    return true;
}

MatchingPlan monochromatic_edges(const MultiGraph& g, const CutPartition& cut) {
    MatchingPlan m;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (cut.side[g.edge(e).u] == cut.side[g.edge(e).v]) m.edges.push_back(e);
    return m;
}

bool is_matching(const MultiGraph& g, const MatchingPlan& m) {
    std::vector<char> used(g.num_vertices(), 0);
    for (EdgeId e : m.edges) {
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v || used[ed.u] || used[ed.v]) return false;
        used[ed.u] = used[ed.v] = 1;
    }
    return true;
}

bool contracts_to_bipartite(const MultiGraph& g, const MatchingPlan& m) {
    const int n = g.num_vertices();
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::function<int(int)> find = [&](int v) { return rep[v] == v ? v : rep[v] = find(rep[v]); };
    std::vector<char> in_m(g.num_edges(), 0);
    for (EdgeId e : m.edges) {
        in_m[e] = 1;
        rep[find(g.edge(e).u)] = find(g.edge(e).v);
    }
    std::vector<std::vector<int>> adj(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_m[e]) continue;
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> col(n, -1);
    for (int s = 0; s < n; ++s) {
        if (find(s) != s || col[s] >= 0) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x]) {
                if (col[y] < 0) col[y] = col[x] ^ 1, q.push(y);
                else if (col[y] == col[x]) return false;
            }
        }
    }
    return true;
}

std::pair<CutPartition, MatchingPlan> maxcut_matching(const MultiGraph& g, int exhaustive_limit) {
    require_subcubic(g);
    const int n = g.num_vertices();
    CutPartition cut;
    if (n <= std::min(exhaustive_limit, 24)) {
        std::uint32_t best_mask = 0;
        int best = -1;
        const std::uint32_t top = n > 0 ? 1U << (n - 1) : 1U;
        for (std::uint32_t mask = 0; mask < top; ++mask) {
            int c = cut_of_mask(g, mask << 1);
            if (c > best) best = c, best_mask = mask << 1;
        }
        cut = cut_from_mask(n, best_mask);
    } else {
        // BFS colouring, then move any vertex with a majority on its own side
        cut.side.assign(n, -1);
        for (VertexId s = 0; s < n; ++s) {
            if (cut.side[s] >= 0) continue;
            cut.side[s] = 0;
            std::queue<VertexId> q;
            q.push(s);
            while (!q.empty()) {
                VertexId x = q.front();
                q.pop();
                for (VertexId y : g.neighbors(x))
                    if (cut.side[y] < 0) cut.side[y] = static_cast<char>(cut.side[x] ^ 1), q.push(y);
            }
        }
        for (bool moved = true; moved;) {
            moved = false;
            for (VertexId v = 0; v < n; ++v) {
                int same = 0;
                for (EdgeId e : g.incident(v)) same += cut.side[g.other(e, v)] == cut.side[v];
                if (2 * same > g.degree(v)) cut.side[v] ^= 1, moved = true;
            }
        }
    }
    if (!locally_maximal(g, cut)) throw InvariantError("max cut: partition is not locally maximal");
    MatchingPlan m = monochromatic_edges(g, cut);
    if (!is_matching(g, m)) throw InvariantError("max cut: edges inside a side do not form a matching");
    return {cut, m};
}

std::vector<MatchingPlan> minimum_matchings(const MultiGraph& g) {
    require_subcubic(g);
    const int n = g.num_vertices();
    if (n > 20) throw DomainError("minimum matchings: limited to 20 vertices");
    const std::uint32_t top = n > 0 ? 1U << (n - 1) : 1U;
    int best = -1;
    for (std::uint32_t mask = 0; mask < top; ++mask) best = std::max(best, cut_of_mask(g, mask << 1));
    std::set<std::vector<EdgeId>> seen;
    std::vector<MatchingPlan> out;
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        if (cut_of_mask(g, mask << 1) != best) continue;
        auto m = monochromatic_edges(g, cut_from_mask(n, mask << 1));
        if (seen.insert(m.edges).second) out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<VertexId>> separating_cycles(const PlaneGraph& pg, int k) {
    if (k != 3 && k != 4) throw DomainError("separating cycles: length must be 3 or 4");
    const FaceSet fs = faces(pg);
    const MultiGraph& g = pg.graph();
    auto vcomp = g.components();
    std::map<int, int> outer;
    for (Dart o : pg.outer_darts()) outer[vcomp[pg.tail(o)]] = fs.face_of[o];
    std::vector<std::vector<VertexId>> out;
    for (auto& c : simple_cycles(g, k)) {
        auto s = sides_of(pg, fs, vcomp, cycle_darts(g, c));
        if (inside_count(s, outer.at(s.component)) > 0) out.push_back(c);
    }
    return out;
}

std::vector<std::vector<VertexId>> covered_separating_quads(const PlaneGraph& pg, const MatchingPlan& m) {
    std::set<EdgeId> ms(m.edges.begin(), m.edges.end());
    std::vector<std::vector<VertexId>> out;
    for (auto& c : separating_cycles(pg, 4))
        if (covered(pg.graph(), c, ms)) out.push_back(c);
    return out;
}

RepairResult repair_embedding(const PlaneGraph& pg, const MatchingPlan& m0) {
    const MultiGraph& g = pg.graph();
    require_subcubic(g);
    if (!is_matching(g, m0)) throw PreconditionError("repair: edge set is not a matching");
    RepairResult res;
    res.separating_triangles_before = static_cast<int>(separating_cycles(pg, 3).size());
    res.covered_quads_before = static_cast<int>(covered_separating_quads(pg, m0).size());
    std::set<EdgeId> m(m0.edges.begin(), m0.edges.end());
    PlaneGraph cur = pg;
    Potential pot = evaluate(cur, m);
    if (pot.outer != cur.outer_darts()) ++res.outer_face_changes;
    cur.set_outer(pot.outer);

    // tries a re-embedding; keeps it when the potential drops
    auto attempt = [&](const PlaneGraph& cand, const std::set<EdgeId>& mm) {
        Potential p;
        try {
            p = evaluate(cand, mm);
        } catch (const StructuralError&) {
            return false;  // not planar
        }
        if (!(p < pot)) return false;
        PlaneGraph next = cand;
        if (p.outer != cand.outer_darts()) ++res.outer_face_changes;
        next.set_outer(p.outer);
        cur = std::move(next);
        pot = std::move(p);
        m = mm;
        return true;
    };

    const int cap = 10 * g.num_vertices() + 20;
    for (int it = 0; pot.triangles + pot.quads > 0; ++it) {
        if (it > cap) throw InvariantError("repair: iteration cap reached");
        bool done = false;
        if (pot.triangles > 0) {
            auto t = separating_cycles(cur, 3).front();
            // redraw the edge opposite a vertex that reaches inside, then
            // diamonds, then any small neighbourhood of the triangle
            std::vector<std::vector<VertexId>> moves;
            for (int i = 0; i < 3; ++i) moves.push_back({t[(i + 1) % 3], t[(i + 2) % 3]});
            std::vector<VertexId> near = t;
            for (VertexId v : t)
                for (VertexId y : g.neighbors(v))
                    if (std::find(near.begin(), near.end(), y) == near.end()) near.push_back(y);
            for (auto& s : subsets(near)) moves.push_back(s);
            for (auto& s : moves)
                if ((done = attempt(reversed_at(cur, s), m))) break;
            if (done) ++res.triangle_moves;
        } else {
            auto q = covered_separating_quads(cur, MatchingPlan{std::vector<EdgeId>(m.begin(), m.end())}).front();
            auto inner = inside_vertices(cur, q);
            // reflect the inside across a side of the quad
            for (auto& s : subsets(q, 0)) {
                std::vector<VertexId> move = inner;
                move.insert(move.end(), s.begin(), s.end());
                if ((done = attempt(reversed_at(cur, move), m))) break;
            }
            if (!done && attempt(reversed_at(cur, inner), m)) done = true;
            if (done) ++res.quad_reflections;
            if (!done) {
                // swap the two quad edges of the matching for an inner and an outer edge
                std::vector<char> in(g.num_vertices(), 0), on(g.num_vertices(), 0);
                for (VertexId v : inner) in[v] = 1;
                for (VertexId v : q) on[v] = 1;
                std::vector<EdgeId> quad_m;
                for (int i = 0; i < 4; ++i) {
                    EdgeId e = *g.find_edge(q[i], q[(i + 1) % 4]);
                    if (m.count(e)) quad_m.push_back(e);
                }
                std::vector<EdgeId> inner_e, outer_e;
                for (VertexId v : q)
                    for (EdgeId e : g.incident(v)) {
                        VertexId y = g.other(e, v);
                        if (on[y]) continue;
                        (in[y] ? inner_e : outer_e).push_back(e);
                    }
                for (EdgeId ei : inner_e) {
                    for (EdgeId eo : outer_e) {
                        std::set<EdgeId> mm = m;
                        for (EdgeId e : quad_m) mm.erase(e);
                        mm.insert(ei);
                        mm.insert(eo);
                        MatchingPlan plan{std::vector<EdgeId>(mm.begin(), mm.end())};
                        if (mm.size() != m.size() || !is_matching(g, plan) || !contracts_to_bipartite(g, plan))
                            continue;
                        if ((done = attempt(cur, mm))) break;
                    }
                    if (done) break;
                }
                if (done) ++res.matching_exchanges;
            }
        }
        if (!done)
            throw InvariantError("repair: no move lowers (" + std::to_string(pot.triangles) + " separating triangles, " +
                                 std::to_string(pot.quads) + " covered quads)");
    }
    res.plane = std::move(cur);
    res.matching.edges.assign(m.begin(), m.end());
    return res;
}

std::vector<std::pair<EdgeId, EdgeId>> separating_two_cycles(const PlaneGraph& b) {
    const MultiGraph& g = b.graph();
    const FaceSet fs = faces(b);
    auto vcomp = g.components();
    std::map<int, int> outer;
    for (Dart o : b.outer_darts()) outer[vcomp[b.tail(o)]] = fs.face_of[o];
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u != ed.v) classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (auto& [key, es] : classes)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                std::vector<Dart> cyc{g.dart_out(es[i], key.first), g.dart_out(es[j], key.second)};
                auto s = sides_of(b, fs, vcomp, cyc);
                if (inside_count(s, outer.at(s.component)) > 0) out.push_back({es[i], es[j]});
            }
    return out;
}

Contraction contract(const PlaneGraph& pg, const MatchingPlan& m) {
    const MultiGraph& g = pg.graph();
    if (!is_matching(g, m)) throw PreconditionError("contract: edge set is not a matching");
    const int n = g.num_vertices();
    std::vector<char> in_m(g.num_edges(), 0);
    std::vector<VertexId> mate(n, -1);
    std::vector<EdgeId> via(n, -1);
    for (EdgeId e : m.edges) {
        in_m[e] = 1;
        const Edge& ed = g.edge(e);
        mate[ed.u] = ed.v, mate[ed.v] = ed.u;
        via[ed.u] = via[ed.v] = e;
    }
    Contraction c;
    c.image.assign(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (mate[v] < 0 || v < mate[v]) {
            c.image[v] = static_cast<VertexId>(c.kept.size());
            c.kept.push_back(v);
            c.matched.push_back(via[v]);
        }
    for (VertexId v = 0; v < n; ++v)
        if (c.image[v] < 0) c.image[v] = c.image[mate[v]];
    MultiGraph bg(static_cast<int>(c.kept.size()));
    std::vector<EdgeId> b_of(g.num_edges(), -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_m[e]) continue;
        b_of[e] = bg.add_edge(c.image[g.edge(e).u], c.image[g.edge(e).v]);
        c.g_edge.push_back(e);
    }
    auto map_dart = [&](Dart d) { return 2 * b_of[edge_of(d)] + (d & 1); };
    // darts of x in ccw order after `skip` (or all, from the start, when skip < 0)
    auto after = [&](VertexId x, Dart skip, std::vector<Dart>& out) {
        auto r = pg.rotation(x);
        const std::size_t k = r.size();
        std::size_t start = 0;
        if (skip >= 0) start = (std::find(r.begin(), r.end(), skip) - r.begin() + 1) % k;
        for (std::size_t i = 0; i < k; ++i) {
            Dart d = r[(start + i) % k];
            if (d != skip) out.push_back(map_dart(d));
        }
    };
    std::vector<std::vector<Dart>> rot(c.kept.size());
    c.from_absorbed.assign(2 * bg.num_edges(), 0);
    for (std::size_t b = 0; b < c.kept.size(); ++b) {
        VertexId k = c.kept[b];
        if (mate[k] < 0) {
            after(k, -1, rot[b]);
            continue;
        }
        VertexId a = mate[k];
        after(k, g.dart_out(via[k], k), rot[b]);
        const std::size_t split = rot[b].size();
        after(a, g.dart_out(via[k], a), rot[b]);
        for (std::size_t i = split; i < rot[b].size(); ++i) c.from_absorbed[rot[b][i]] = 1;
    }
    std::vector<Dart> outer;
    for (Dart o : pg.outer_darts()) {
        Dart d = o;
        for (int guard = 0; in_m[edge_of(d)] && guard < 2 * g.num_edges(); ++guard) d = pg.face_next(d);
        if (!in_m[edge_of(d)]) outer.push_back(map_dart(d));
    }
    c.multigraph = PlaneGraph(std::move(bg), std::move(rot), std::move(outer));
    faces(c.multigraph);
    try {
        two_coloring(c.multigraph.graph());
    } catch (const NotBipartiteError&) {
        throw InvariantError("contract: contracted graph is not bipartite");
    }
    if (!separating_two_cycles(c.multigraph).empty()) throw InvariantError("contract: separating 2-cycle");
    return c;
}

BookEmbedding book_embed_bipartite_multigraph(const PlaneGraph& b) {
    const MultiGraph& g = b.graph();
    if (g.has_loops()) throw PreconditionError("multigraph layout: loops are not allowed");
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    std::vector<char> keep_e(g.num_edges(), 0);
    for (auto& [key, es] : classes) keep_e[es.front()] = 1;
    auto support = restrict_plane(b, std::vector<char>(g.num_vertices(), 1), keep_e);

    BookEmbedding lay;
    const int n = g.num_vertices();
    if (n < 2) {
        lay.graph = support.pg.graph();
        for (VertexId v = 0; v < n; ++v) lay.spine.push_back(v);
    } else {
        lay = bipartite_book(support.pg);
        if (lay.graph.num_vertices() > n) {
            std::vector<char> kv(lay.graph.num_vertices(), 0), ke(lay.graph.num_edges(), 0);
            std::fill(kv.begin(), kv.begin() + n, 1);
            std::fill(ke.begin(), ke.begin() + support.pg.num_edges(), 1);
            lay = restrict_book(lay, kv, ke);
        }
    }
    BookEmbedding out;
    out.graph = g;
    out.spine = lay.spine;
    out.page.assign(g.num_edges(), Page::Upper);
    out.nest.assign(g.num_edges(), 0);
    auto pos = out.positions();
    for (auto& [key, es] : classes) {
        const Page p = lay.page[support.edge_map[es.front()]];
        for (EdgeId e : es) out.page[e] = p;
        if (es.size() == 1) continue;
        if (p == Page::Spine) throw InvariantError("multigraph layout: parallel class on the spine");
        // order of the class around an end where it is not the whole rotation
        std::set<EdgeId> cls(es.begin(), es.end());
        VertexId at = key.first;
        if (b.rotation(at).size() == es.size()) at = key.second;
        const bool left = pos[at] < pos[key.first == at ? key.second : key.first];
        auto r = b.rotation(at);
        const std::size_t k = r.size();
        std::size_t start = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (cls.count(edge_of(r[i])) && !cls.count(edge_of(r[(i + k - 1) % k]))) start = i;
        // ccw at the left end: upper arcs outward, lower arcs inward; the
        // right end sees the reverse
        const bool outward = (p == Page::Upper) == left;
        int idx = 0;
        const int size = static_cast<int>(es.size());
        for (std::size_t i = 0; i < k; ++i) {
            Dart d = r[(start + i) % k];
            if (!cls.count(edge_of(d))) continue;
            out.nest[edge_of(d)] = outward ? idx : size - 1 - idx;
            ++idx;
        }
    }
    validate_book(out, "multigraph layout");
    auto rot = book_rotation(out);
    for (VertexId v = 0; v < n; ++v) {
        auto r = b.rotation(v);
        if (!same_cycle(rot[v], std::vector<Dart>(r.begin(), r.end())))
            throw InvariantError("multigraph layout: rotation differs at vertex " + std::to_string(v));
    }
    return out;
}

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::Local: return "local";
        case SplitKind::Far: return "far";
        case SplitKind::Double: return "double";
        case SplitKind::K4: return "k4";
    }
    return "?";
}

}  // namespace posh
