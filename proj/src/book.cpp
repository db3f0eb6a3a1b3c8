#include "posh/book.hpp"

#include <algorithm>
#include <tuple>

#include "posh/errors.hpp"

namespace posh {

std::vector<int> BookEmbedding::positions() const {
    std::vector<int> pos(graph.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos.at(spine[i]) = i;
    return pos;
}

namespace {

void check_shape(const BookEmbedding& b) {
    const int n = b.graph.num_vertices();
    if (static_cast<int>(b.spine.size()) != n) throw StructuralError("spine does not list every vertex once");
    std::vector<char> seen(n, 0);
    for (VertexId v : b.spine) {
        if (v < 0 || v >= n || seen[v]) throw StructuralError("spine does not list every vertex once");
        seen[v] = 1;
    }
    if (static_cast<int>(b.page.size()) != b.graph.num_edges() || static_cast<int>(b.nest.size()) != b.graph.num_edges())
        throw StructuralError("page or nest data has the wrong size");
    if (b.graph.has_loops()) throw StructuralError("book layouts cannot hold loops");
}

}  // namespace

std::vector<std::pair<EdgeId, EdgeId>> book_conflicts(const BookEmbedding& b) {
    check_shape(b);
    const auto pos = b.positions();
    std::vector<std::pair<EdgeId, EdgeId>> out;
    const int n = static_cast<int>(b.spine.size());
    std::vector<EdgeId> spine_edge(n, -1);
    struct Arc {
        int l, r;
        EdgeId e;
    };
    std::vector<Arc> arcs[2];
    for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
        int l = pos[b.graph.edge(e).u], r = pos[b.graph.edge(e).v];
        if (l > r) std::swap(l, r);
        if (b.page[e] == Page::Spine) {
            if (r != l + 1 || spine_edge[l] != -1)
                out.push_back({e, e});
            else
                spine_edge[l] = e;
            continue;
        }
        arcs[b.page[e] == Page::Upper ? 0 : 1].push_back({l, r, e});
    }
    for (auto& page : arcs) {
        // sweep: an arc crosses an open arc (l', r') iff l' < l < r' < r
        std::sort(page.begin(), page.end(), [](const Arc& a, const Arc& c) { return std::tie(a.l, a.r) < std::tie(c.l, c.r); });
        for (size_t i = 0; i < page.size(); ++i)
            for (size_t j = i + 1; j < page.size() && page[j].l < page[i].r; ++j)
                if (page[i].l < page[j].l && page[j].r > page[i].r) out.push_back({page[i].e, page[j].e});
    }
    return out;
}

std::vector<VertexId> one_sidedness_violations(const BookEmbedding& b) {
    check_shape(b);
    const auto pos = b.positions();
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < b.graph.num_vertices(); ++v) {
        bool up = false, down = false;
        for (EdgeId e : b.graph.incident(v)) {
            if (pos[b.graph.other(e, v)] > pos[v]) continue;
            up = up || b.page[e] == Page::Upper;
            down = down || b.page[e] == Page::Lower;
        }
        if (up && down) bad.push_back(v);
    }
    return bad;
}

std::vector<std::vector<Dart>> book_rotation(const BookEmbedding& b) {
    check_shape(b);
    const auto pos = b.positions();
    const MultiGraph& g = b.graph;
    std::vector<std::vector<Dart>> rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        // (group, key1, key2) sorts the darts counter-clockwise from the
        // rightward spine direction
        std::vector<std::tuple<int, int, int, Dart>> items;
        for (EdgeId e : g.incident(v)) {
            const Dart d = g.dart_out(e, v);
            const int p = pos[g.other(e, v)];
            const bool right = p > pos[v];
            const int k = b.nest[e];
            switch (b.page[e]) {
                case Page::Spine: items.push_back({right ? 0 : 3, 0, 0, d}); break;
                case Page::Upper:
                    if (right)
                        items.push_back({1, p, k, d});
                    else
                        items.push_back({2, p, -k, d});
                    break;
                case Page::Lower:
                    if (right)
                        items.push_back({5, -p, -k, d});
                    else
                        items.push_back({4, -p, k, d});
                    break;
            }
        }
        std::sort(items.begin(), items.end());
        for (auto& it : items) rot[v].push_back(std::get<3>(it));
    }
    return rot;
}

PlaneGraph book_plane(const BookEmbedding& b) {
    auto rot = book_rotation(b);
    const MultiGraph& g = b.graph;
    int ncomp = 0;
    auto comp = g.components(&ncomp);
    const auto pos = b.positions();
    std::vector<char> done(ncomp, 0);
    std::vector<Dart> outer;
    for (VertexId v : b.spine) {
        if (done[comp[v]] || rot[v].empty()) continue;
        done[comp[v]] = 1;
        // last dart pointing right along the spine or into the upper page
        Dart pick = rot[v].back();
        for (Dart d : rot[v]) {
            EdgeId e = edge_of(d);
            bool above = b.page[e] == Page::Upper || (b.page[e] == Page::Spine && pos[g.head(d)] > pos[v]);
            if (above) pick = d;
        }
        outer.push_back(pick);
    }
    return PlaneGraph(g, std::move(rot), std::move(outer));
}

BookPosh book_to_posh(const BookEmbedding& b) {
    check_shape(b);
    BookPosh out;
    out.book = b;
    BookEmbedding& bk = out.book;
    const int n = static_cast<int>(bk.spine.size());
    std::vector<EdgeId> cycle;
    for (int i = 0; i + 1 < n; ++i) {
        const VertexId x = bk.spine[i], y = bk.spine[i + 1];
        EdgeId spine = -1, inner_arc = -1;
        for (EdgeId e : bk.graph.incident(x)) {
            if (bk.graph.other(e, x) != y) continue;
            if (bk.page[e] == Page::Spine)
                spine = e;
            else if (inner_arc == -1 || bk.nest[e] < bk.nest[inner_arc])
                inner_arc = e;
        }
        if (spine == -1 && inner_arc != -1) {
            // an innermost arc between spine neighbours sits exactly where the
            // spine segment would, so moving it keeps the rotation
            spine = inner_arc;
            bk.page[spine] = Page::Spine;
        } else if (spine == -1) {
            spine = bk.graph.add_edge(x, y);
            bk.page.push_back(Page::Spine);
            bk.nest.push_back(0);
        }
        cycle.push_back(spine);
    }
    if (n >= 3) {
        const VertexId first = bk.spine.front(), last = bk.spine.back();
        // outermost arc joining the ends, upper page preferred
        EdgeId closing = -1;
        auto rank = [&](EdgeId e) { return std::pair(bk.page[e] == Page::Upper, bk.nest[e]); };
        for (EdgeId e : bk.graph.incident(first))
            if (bk.graph.other(e, first) == last && (closing == -1 || rank(e) > rank(closing))) closing = e;
        if (closing == -1) {
            int top = 0;
            for (EdgeId e = 0; e < bk.graph.num_edges(); ++e) top = std::max(top, bk.nest[e] + 1);
            closing = bk.graph.add_edge(first, last);
            bk.page.push_back(Page::Upper);
            bk.nest.push_back(top);
        }
        cycle.push_back(closing);
    } else if (n == 2) {
        cycle.push_back(cycle.front());
    }
    out.plane = book_plane(bk);
    out.order.order = bk.spine;
    out.order.edges = std::move(cycle);
    return out;
}

void validate_book(const BookEmbedding& b, const std::string& stage) {
    auto c = book_conflicts(b);
    if (!c.empty()) {
        if (c.front().first == c.front().second)
            throw InvariantError(stage + ": edge " + std::to_string(c.front().first) +
                                 " lies on the spine between non-neighbours");
        throw InvariantError(stage + ": arcs " + std::to_string(c.front().first) + " and " +
                             std::to_string(c.front().second) + " cross");
    }
}

BookEmbedding restrict_book(const BookEmbedding& b, const std::vector<char>& keep_vertex,
                            const std::vector<char>& keep_edge) {
    BookEmbedding out;
    std::vector<VertexId> vmap(b.graph.num_vertices(), -1);
    int nv = 0;
    for (VertexId v = 0; v < b.graph.num_vertices(); ++v)
        if (keep_vertex.at(v)) vmap[v] = nv++;
    out.graph = MultiGraph(nv);
    for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
        const Edge& ed = b.graph.edge(e);
        if (!keep_edge.at(e) || vmap[ed.u] == -1 || vmap[ed.v] == -1) continue;
        out.graph.add_edge(vmap[ed.u], vmap[ed.v]);
        out.page.push_back(b.page[e]);
        out.nest.push_back(b.nest[e]);
    }
    for (VertexId v : b.spine)
        if (vmap[v] != -1) out.spine.push_back(vmap[v]);
    // kept spine segments still join neighbours
    const auto pos = out.positions();
    for (EdgeId e = 0; e < out.graph.num_edges(); ++e) {
        if (out.page[e] != Page::Spine) continue;
        int d = pos[out.graph.edge(e).u] - pos[out.graph.edge(e).v];
        if (d != 1 && d != -1) throw InvariantError("restrict_book: spine edge lost its neighbourhood");
    }
    return out;
}

}  // namespace posh
