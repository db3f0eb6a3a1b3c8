// Turning the layout of the contracted graph back into a layout of the
// subcubic graph: leaves first, then vertex splits, each one validated.
#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "posh/errors.hpp"
#include "posh/planarity.hpp"
#include "posh/subcubic.hpp"

namespace posh {

namespace {

enum class Role : unsigned char { Absent, Plain, Contracted, Product, Leaf };

// Layout under construction. Vertex ids are the input's, leaves come after;
// a contracted vertex carries the id of its lower endpoint and flags which of
// its darts belong to the absorbed one. rot is the rotation the layout must
// realise.
struct Work {
    std::vector<Edge> ends;
    std::vector<Page> page;
    std::vector<int> nest;
    std::vector<EdgeId> g_edge;
    std::vector<std::vector<Dart>> rot;
    std::vector<VertexId> spine;
    std::vector<Role> role;
    std::vector<VertexId> partner;
    std::vector<EdgeId> m_edge;
    std::vector<char> absorbed;  // per dart

    int num_edges() const { return static_cast<int>(ends.size()); }
    VertexId tail(Dart d) const { return (d & 1) ? ends[d >> 1].v : ends[d >> 1].u; }
    VertexId head(Dart d) const { return tail(twin(d)); }
    int pos(VertexId v) const {
        auto it = std::find(spine.begin(), spine.end(), v);
        if (it == spine.end()) throw InvariantError("split: vertex " + std::to_string(v) + " is not on the spine");
        return static_cast<int>(it - spine.begin());
    }
    EdgeId add_edge(VertexId u, VertexId v, EdgeId g, Page p) {
        ends.push_back({u, v});
        page.push_back(p);
        nest.push_back(0);
        g_edge.push_back(g);
        absorbed.push_back(0);
        absorbed.push_back(0);
        return num_edges() - 1;
    }
    VertexId add_vertex(Role r) {
        role.push_back(r);
        rot.emplace_back();
        partner.push_back(-1);
        m_edge.push_back(-1);
        return static_cast<VertexId>(role.size()) - 1;
    }
};

bool same_cycle(std::vector<Dart> a, const std::vector<Dart>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b.front());
    if (it == a.end()) return false;
    std::rotate(a.begin(), it, a.end());
    return a == b;
}

struct Snapshot {
    BookEmbedding book;
    std::vector<int> idx;  // work vertex -> book vertex, -1 when absent
};

Snapshot snapshot(const Work& w) {
    Snapshot s;
    s.idx.assign(w.role.size(), -1);
    int k = 0;
    for (std::size_t v = 0; v < w.role.size(); ++v)
        if (w.role[v] != Role::Absent) s.idx[v] = k++;
    s.book.graph = MultiGraph(k);
    for (const Edge& e : w.ends) s.book.graph.add_edge(s.idx[e.u], s.idx[e.v]);
    for (VertexId v : w.spine) s.book.spine.push_back(s.idx[v]);
    s.book.page = w.page;
    s.book.nest = w.nest;
    return s;
}

// Empty when the layout is crossing-free, realises the target rotation
// (everywhere, or only at unsplit vertices when !strict), every vertex keeps
// its backward arcs on one page and unsplit vertices also their forward arcs.
std::string defect(const Work& w, bool strict) {
    Snapshot s = snapshot(w);
    if (static_cast<int>(w.spine.size()) != s.book.graph.num_vertices()) return "spine incomplete";
    try {
        if (!book_conflicts(s.book).empty()) return "crossing";
    } catch (const StructuralError& e) {
        return e.what();
    }
    auto rb = book_rotation(s.book);
    for (std::size_t v = 0; v < w.role.size(); ++v) {
        if (w.role[v] == Role::Absent) continue;
        if ((strict || w.role[v] == Role::Contracted) && !same_cycle(rb[s.idx[v]], w.rot[v]))
            return "rotation at " + std::to_string(v);
    }
    std::vector<int> pos(w.role.size(), -1), left(w.role.size(), 0), right(w.role.size(), 0);
    for (std::size_t i = 0; i < w.spine.size(); ++i) pos[w.spine[i]] = static_cast<int>(i);
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        if (w.page[e] == Page::Spine) continue;
        const int bit = w.page[e] == Page::Upper ? 1 : 2;
        VertexId a = w.ends[e].u, b = w.ends[e].v;
        if (pos[a] > pos[b]) std::swap(a, b);
        right[a] |= bit;
        left[b] |= bit;
    }
    for (std::size_t v = 0; v < w.role.size(); ++v) {
        if (w.role[v] == Role::Absent) continue;
        if (std::popcount(static_cast<unsigned>(left[v])) > 1) return "both pages backwards at " + std::to_string(v);
        const bool unsplit = w.role[v] == Role::Plain || w.role[v] == Role::Contracted;
        if (unsplit && std::popcount(static_cast<unsigned>(right[v])) > 1)
            return "both pages forwards at " + std::to_string(v);
    }
    return {};
}

// Spine edges whose ends drifted apart go to a page (innermost among their
// parallels); neighbours joined only by arcs get their innermost arc on the
// spine. Every combination of page choices is returned.
std::vector<Work> spine_variants(const Work& w) {
    std::vector<int> pos(w.role.size(), -1);
    for (std::size_t i = 0; i < w.spine.size(); ++i) pos[w.spine[i]] = static_cast<int>(i);
    auto key = [&](EdgeId e) {
        VertexId a = w.ends[e].u, b = w.ends[e].v;
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    std::vector<EdgeId> broken;
    struct Pair {
        bool spine = false;
        EdgeId upper = -1, lower = -1;
    };
    std::map<std::pair<VertexId, VertexId>, Pair> adjacent;
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        const bool next = std::abs(pos[w.ends[e].u] - pos[w.ends[e].v]) == 1;
        if (w.page[e] == Page::Spine) {
            if (!next) broken.push_back(e);
            else adjacent[key(e)].spine = true;
            continue;
        }
        if (!next) continue;
        Pair& p = adjacent[key(e)];
        EdgeId& slot = w.page[e] == Page::Upper ? p.upper : p.lower;
        if (slot < 0 || w.nest[e] < w.nest[slot]) slot = e;
    }
    std::vector<Work> out{w};
    auto innermost = [&](const Work& x, EdgeId e, Page p) {
        int low = 1;
        for (EdgeId f = 0; f < x.num_edges(); ++f)
            if (f != e && x.page[f] == p && key(f) == key(e)) low = std::min(low, x.nest[f]);
        return low - 1;
    };
    for (EdgeId e : broken) {
        std::vector<Work> next;
        for (const Work& x : out)
            for (Page p : {Page::Upper, Page::Lower}) {
                Work y = x;
                y.page[e] = p;
                y.nest[e] = innermost(x, e, p);
                next.push_back(std::move(y));
            }
        out = std::move(next);
    }
    for (auto& [k, p] : adjacent) {
        if (p.spine || (p.upper < 0 && p.lower < 0)) continue;
        std::vector<Work> next;
        for (const Work& x : out)
            for (EdgeId e : {p.upper, p.lower}) {
                if (e < 0) continue;
                Work y = x;
                y.page[e] = Page::Spine;
                y.nest[e] = 0;
                next.push_back(std::move(y));
            }
        out = std::move(next);
        if (out.size() > 256) out.resize(256);
    }
    return out;
}

using Visit = std::function<bool(Work&&)>;

bool visit_variants(const Work& w, const Visit& visit) {
    for (Work& x : spine_variants(w))
        if (visit(std::move(x))) return true;
    return false;
}

// Darts of a contracted vertex split by owner, each in ccw order starting
// right after the other owner's block.
struct Groups {
    std::vector<Dart> own, absorbed;
};

Groups groups_of(const Work& w, VertexId v) {
    const auto& r = w.rot[v];
    const std::size_t k = r.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (!w.absorbed[r[i]] && w.absorbed[r[(i + k - 1) % k]]) start = i;
    Groups g;
    int changes = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Dart d = r[(start + i) % k];
        (w.absorbed[d] ? g.absorbed : g.own).push_back(d);
        if (w.absorbed[d] != w.absorbed[r[(start + i + k - 1) % k]]) ++changes;
    }
    if (changes > 2) throw InvariantError("split: darts of vertex " + std::to_string(v) + " are interleaved");
    return g;
}

// Undo the contraction of v in the graph and the target rotation; placement
// is left to the caller (v keeps its slot, the partner is off the spine).
struct Prepared {
    Work w;
    VertexId own, other;
    EdgeId link;
};

Prepared prepare_split(const Work& w0, VertexId v) {
    Prepared p{w0, v, w0.partner[v], -1};
    Work& w = p.w;
    if (w.role[v] != Role::Contracted) throw InvariantError("split: vertex is not contracted");
    Groups g = groups_of(w, v);
    const VertexId o = p.other;
    p.link = w.add_edge(v, o, w.m_edge[v], Page::Spine);
    for (Dart d : g.absorbed) {
        Edge& e = w.ends[edge_of(d)];
        ((d & 1) ? e.v : e.u) = o;
        w.absorbed[d] = 0;
    }
    w.rot[v] = {dart_from(p.link, false)};
    w.rot[v].insert(w.rot[v].end(), g.own.begin(), g.own.end());
    w.rot[o] = {dart_from(p.link, true)};
    w.rot[o].insert(w.rot[o].end(), g.absorbed.begin(), g.absorbed.end());
    w.role[v] = w.role[o] = Role::Product;
    w.partner[v] = -1;
    return p;
}

std::vector<int> dedupe(std::vector<int> v, int limit) {
    std::vector<int> out;
    for (int x : v)
        if (x >= 0 && x <= limit && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

// phase 0: the two halves side by side where v was; 1: the moving half next
// to one of its neighbours; 2: anywhere.
bool split_placements(const Work& w, VertexId v, int phase, const Visit& visit) {
    const Prepared pr = prepare_split(w, v);
    const int pv = w.pos(v);
    for (int turn = 0; turn < 2; ++turn) {
        const VertexId stay = turn == 0 ? pr.own : pr.other;
        const VertexId mover = turn == 0 ? pr.other : pr.own;
        Work base = pr.w;
        base.spine[pv] = stay;
        const int len = static_cast<int>(base.spine.size());
        std::vector<int> gaps;
        if (phase == 0) {
            gaps = {pv, pv + 1};
        } else if (phase == 1) {
            for (Dart d : base.rot[mover]) {
                VertexId x = base.head(d);
                if (x == stay) continue;
                int px = base.pos(x);
                gaps.push_back(px);
                gaps.push_back(px + 1);
            }
        } else {
            for (int g = 0; g <= len; ++g) gaps.push_back(g);
        }
        for (int g : dedupe(gaps, len)) {
            Work c = base;
            c.spine.insert(c.spine.begin() + g, mover);
            const bool next = std::abs(c.pos(stay) - g) == 1;
            std::vector<Page> pages;
            if (next) pages.push_back(Page::Spine);
            if (phase > 0) pages.insert(pages.end(), {Page::Upper, Page::Lower});
            for (Page p : pages) {
                Work x = c;
                x.page[pr.link] = p;
                if (visit_variants(x, visit)) return true;
            }
        }
    }
    return false;
}

// Face to the left of d is bounded by exactly two edges.
bool two_cycle_face(const Work& w, Dart d) {
    auto ccw_prev = [&](Dart x) {
        const auto& r = w.rot[w.tail(x)];
        auto it = std::find(r.begin(), r.end(), x);
        return it == r.begin() ? r.back() : *(it - 1);
    };
    Dart n1 = ccw_prev(twin(d));
    return ccw_prev(twin(n1)) == d;
}

// New leaf for one half of contracted v (absorbed half when `absorbed_half`).
// phase 0: next to v or to an endpoint of an edge bounding the chosen angle;
// 1: anywhere.
bool leaf_placements(const Work& w, VertexId v, bool absorbed_half, int phase, const Visit& visit) {
    const auto& r = w.rot[v];
    const int k = static_cast<int>(r.size());
    std::vector<int> slots, later;
    for (int i = 0; i < std::max(k, 1); ++i) {
        // the new dart goes in front of r[i]
        std::vector<char> owners;
        for (int j = 0; j < k; ++j) {
            if (j == i) owners.push_back(absorbed_half);
            owners.push_back(w.absorbed[r[j]]);
        }
        if (k == 0) owners.push_back(absorbed_half);
        int changes = 0;
        for (std::size_t j = 0; j < owners.size(); ++j) changes += owners[j] != owners[(j + 1) % owners.size()];
        if (changes > 2) continue;
        const bool pinched = k > 0 && two_cycle_face(w, r[(i + k - 1) % k]);
        (pinched ? later : slots).push_back(i);
    }
    slots.insert(slots.end(), later.begin(), later.end());
    const int pv = w.pos(v);
    for (int i : slots) {
        Work c = w;
        const VertexId leaf = c.add_vertex(Role::Leaf);
        const EdgeId e = c.add_edge(v, leaf, -1, Page::Spine);
        c.absorbed[dart_from(e, false)] = absorbed_half;
        c.rot[v].insert(c.rot[v].begin() + i, dart_from(e, false));
        c.rot[leaf] = {dart_from(e, true)};
        const int len = static_cast<int>(c.spine.size());
        std::vector<int> gaps{pv, pv + 1};
        if (k > 0)
            for (Dart d : {r[(i + k - 1) % k], r[i % k]}) {
                int px = c.pos(w.head(d));
                gaps.push_back(px);
                gaps.push_back(px + 1);
            }
        if (phase == 1)
            for (int g = 0; g <= len; ++g) gaps.push_back(g);
        for (int g : dedupe(gaps, len)) {
            Work x = c;
            x.spine.insert(x.spine.begin() + g, leaf);
            const bool next = std::abs(x.pos(v) - g) == 1;
            std::vector<Page> pages;
            if (next) pages.push_back(Page::Spine);
            pages.insert(pages.end(), {Page::Upper, Page::Lower});
            for (Page p : pages) {
                Work y = x;
                y.page[e] = p;
                if (visit_variants(y, visit)) return true;
            }
        }
    }
    return false;
}

std::vector<EdgeId> edges_between(const Work& w, const std::set<VertexId>& a, const std::set<VertexId>& b) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        const Edge& ed = w.ends[e];
        if ((a.count(ed.u) && b.count(ed.v)) || (a.count(ed.v) && b.count(ed.u))) out.push_back(e);
    }
    return out;
}

// Two contracted vertices joined by three edges are split together: the two
// halves without an outside edge go next to one of the remaining halves.
bool double_placements(const Work& w, VertexId a, VertexId b, const Visit& visit) {
    Prepared pa = prepare_split(w, a);
    Prepared pb = prepare_split(pa.w, b);
    Work base = pb.w;
    const std::set<VertexId> side_a{pa.own, pa.other}, side_b{pb.own, pb.other};
    auto has_outside = [&](VertexId x, const std::set<VertexId>& mine, const std::set<VertexId>& theirs) {
        for (Dart d : base.rot[x]) {
            VertexId y = base.head(d);
            if (!mine.count(y) && !theirs.count(y)) return true;
        }
        return false;
    };
    VertexId wl = has_outside(pa.own, side_a, side_b) ? pa.own : pa.other;
    VertexId ul = wl == pa.own ? pa.other : pa.own;
    VertexId wr = has_outside(pb.own, side_b, side_a) ? pb.own : pb.other;
    VertexId ur = wr == pb.own ? pb.other : pb.own;
    base.spine[w.pos(a)] = wl;
    base.spine[w.pos(b)] = wr;
    std::vector<EdgeId> local = edges_between(base, side_a, side_b);
    local.push_back(pa.link);
    local.push_back(pb.link);
    const int len = static_cast<int>(base.spine.size());
    for (int g1 : dedupe({base.pos(wl), base.pos(wl) + 1, base.pos(wr), base.pos(wr) + 1}, len)) {
        Work c1 = base;
        c1.spine.insert(c1.spine.begin() + g1, ul);
        std::vector<int> g2s{c1.pos(ul), c1.pos(ul) + 1, c1.pos(wl), c1.pos(wl) + 1, c1.pos(wr), c1.pos(wr) + 1};
        for (int g2 : dedupe(g2s, len + 1)) {
            Work c2 = c1;
            c2.spine.insert(c2.spine.begin() + g2, ur);
            int total = 1;
            for (std::size_t i = 0; i < local.size(); ++i) total *= 3;
            for (int code = 0; code < total; ++code) {
                Work x = c2;
                int rest = code;
                bool ok = true;
                for (EdgeId e : local) {
                    const Page p = static_cast<Page>(rest % 3);
                    rest /= 3;
                    if (p == Page::Spine && std::abs(x.pos(x.ends[e].u) - x.pos(x.ends[e].v)) != 1) ok = false;
                    x.page[e] = p;
                    x.nest[e] = 0;
                }
                if (ok && visit_variants(x, visit)) return true;
            }
        }
    }
    return false;
}

// Two contracted vertices joined by four edges came from a K4: lay the K4 out
// in one block (a path on the spine, two arcs on one page, one on the other).
bool k4_placements(const Work& w, VertexId a, VertexId b, const Visit& visit) {
    Prepared pa = prepare_split(w, a);
    Prepared pb = prepare_split(pa.w, b);
    std::vector<VertexId> four{pa.own, pa.other, pb.own, pb.other};
    std::sort(four.begin(), four.end());
    const std::set<VertexId> all(four.begin(), four.end());
    for (VertexId slot_of : {a, b}) {
        Work base = pb.w;
        const VertexId gone = slot_of == a ? b : a;
        base.spine.erase(base.spine.begin() + base.pos(gone));
        const int at = base.pos(slot_of);
        base.spine.erase(base.spine.begin() + at);
        std::vector<VertexId> perm = four;
        do {
            for (bool flip : {false, true}) {
                Work x = base;
                x.spine.insert(x.spine.begin() + at, perm.begin(), perm.end());
                for (EdgeId e : edges_between(x, all, all)) {
                    int i = static_cast<int>(std::find(perm.begin(), perm.end(), x.ends[e].u) - perm.begin());
                    int j = static_cast<int>(std::find(perm.begin(), perm.end(), x.ends[e].v) - perm.begin());
                    if (i > j) std::swap(i, j);
                    Page p = Page::Spine;
                    if (j - i > 1) p = (i == 0 && j == 2) != flip ? Page::Lower : Page::Upper;
                    x.page[e] = p;
                    x.nest[e] = 0;
                }
                if (visit_variants(x, visit)) return true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

class Engine {
  public:
    Engine(Work w, SubcubicTrace* trace) : w_(std::move(w)), trace_(trace) {
        if (auto d = defect(w_, true); !d.empty()) throw InvariantError("split: initial layout is invalid (" + d + ")");
    }

    void add_leaves() {
        for (VertexId v : std::vector<VertexId>(w_.spine)) {
            if (w_.role[v] != Role::Contracted) continue;
            for (bool half : {false, true}) {
                for (;;) {
                    int have = 0;
                    for (Dart d : w_.rot[v]) have += w_.absorbed[d] == half;
                    if (have >= 2) break;
                    auto gen = [&](int phase) {
                        return [=, this](const Visit& vis) { return leaf_placements(w_, v, half, phase, vis); };
                    };
                    if (!apply(gen(0), true) && !apply(gen(1), true) && !apply(gen(1), false))
                        throw InvariantError("leaves: no place for a leaf at vertex " + std::to_string(v));
                    if (trace_) ++trace_->leaves;
                }
            }
        }
        bool four = true;
        for (std::size_t v = 0; v < w_.role.size(); ++v) {
            if (w_.role[v] != Role::Contracted) continue;
            int own = 0;
            for (Dart d : w_.rot[v]) own += !w_.absorbed[d];
            four = four && w_.rot[v].size() == 4 && own == 2;
        }
        if (trace_) trace_->degree_four_after_leaves = four;
        if (!four) throw InvariantError("leaves: some contracted vertex does not have degree 4");
    }

    void split_all() {
        // pairs joined by three or four edges are handled as one unit
        std::vector<std::pair<VertexId, VertexId>> doubles, k4s;
        std::set<VertexId> special;
        for (VertexId v : w_.spine) {
            if (w_.role[v] != Role::Contracted) continue;
            std::map<VertexId, int> mult;
            for (Dart d : w_.rot[v]) mult[w_.head(d)]++;
            for (auto [y, k] : mult) {
                if (y <= v || w_.role[y] != Role::Contracted || k < 3) continue;
                (k == 3 ? doubles : k4s).push_back({v, y});
                special.insert(v);
                special.insert(y);
            }
        }
        auto pending = [&] {
            std::vector<VertexId> out;
            for (VertexId v : w_.spine)
                if (w_.role[v] == Role::Contracted && !special.count(v)) out.push_back(v);
            return out;
        };
        // vertices that cannot be split in place, outermost arcs first
        for (;;) {
            std::vector<VertexId> far;
            for (VertexId v : pending())
                if (!split_placements(w_, v, 0, [](Work&& c) { return defect(c, true).empty(); })) far.push_back(v);
            if (far.empty()) break;
            bool done = false;
            for (VertexId v : outside_in(far)) {
                if ((done = single(v, SplitKind::Far))) break;
            }
            if (!done) throw InvariantError("split: no far split succeeds");
        }
        for (VertexId v : pending())
            if (!single(v, SplitKind::Local)) throw InvariantError("split: vertex " + std::to_string(v) + " cannot be split");
        for (auto [a, b] : doubles) pair_split(a, b, SplitKind::Double);
        for (auto [a, b] : k4s) pair_split(a, b, SplitKind::K4);
    }

    const Work& work() const { return w_; }

  private:
    void pair_split(VertexId a, VertexId b, SplitKind kind) {
        const std::vector<VertexId> vs{a, w_.partner[a], b, w_.partner[b]};
        auto gen = [&](const Visit& vis) {
            return kind == SplitKind::Double ? double_placements(w_, a, b, vis) : k4_placements(w_, a, b, vis);
        };
        const bool strict = apply(gen, true);
        if (!strict && !apply(gen, false)) throw InvariantError("split: " + to_string(kind) + " split fails");
        record(kind, vs, false, !strict);
    }

    bool single(VertexId v, SplitKind kind) {
        const VertexId other = w_.partner[v];
        auto gen = [&](int phase) { return [=, this](const Visit& vis) { return split_placements(w_, v, phase, vis); }; };
        if (kind == SplitKind::Local && apply(gen(0), true)) {
            record(SplitKind::Local, {v, other}, false, false);
            return true;
        }
        if (apply(gen(1), true)) {
            record(SplitKind::Far, {v, other}, false, false);
            return true;
        }
        if (apply(gen(2), true)) {
            record(SplitKind::Far, {v, other}, true, false);
            return true;
        }
        if (apply(gen(2), false)) {
            record(SplitKind::Far, {v, other}, true, true);
            return true;
        }
        return false;
    }

    // takes the first candidate passing the checks
    bool apply(const std::function<bool(const Visit&)>& gen, bool strict) {
        Work found;
        bool ok = gen([&](Work&& c) {
            if (!defect(c, strict).empty()) return false;
            found = std::move(c);
            return true;
        });
        if (!ok) return false;
        if (!strict) {
            // the drawing moved away from the target: it becomes the target
            Snapshot s = snapshot(found);
            auto rb = book_rotation(s.book);
            for (std::size_t v = 0; v < found.role.size(); ++v)
                if (found.role[v] != Role::Absent) found.rot[v] = rb[s.idx[v]];
        }
        w_ = std::move(found);
        return true;
    }

    void record(SplitKind kind, std::vector<VertexId> vs, bool searched, bool relaxed) {
        if (!trace_) return;
        trace_->script.push_back({kind, std::move(vs), searched, relaxed});
        Snapshot s = snapshot(w_);
        if (!one_sidedness_violations(s.book).empty() || !book_conflicts(s.book).empty())
            trace_->one_sided_after_each_split = false;
    }

    // far-split candidates ordered by their outermost arc
    std::vector<VertexId> outside_in(const std::vector<VertexId>& far) const {
        std::vector<int> pos(w_.role.size(), -1);
        for (std::size_t i = 0; i < w_.spine.size(); ++i) pos[w_.spine[i]] = static_cast<int>(i);
        struct Arc {
            Page page;
            int l, r, nest;
            VertexId owner;
        };
        std::vector<Arc> arcs;
        for (VertexId v : far)
            for (Dart d : w_.rot[v]) {
                EdgeId e = edge_of(d);
                if (w_.page[e] == Page::Spine) continue;
                int l = pos[w_.ends[e].u], r = pos[w_.ends[e].v];
                if (l > r) std::swap(l, r);
                arcs.push_back({w_.page[e], l, r, w_.nest[e], v});
            }
        auto inside = [](const Arc& a, const Arc& b) {
            if (a.page != b.page || b.l > a.l || a.r > b.r) return false;
            return b.l < a.l || a.r < b.r || b.nest > a.nest;
        };
        std::map<VertexId, int> best;
        for (const Arc& a : arcs) {
            bool maximal = true;
            for (const Arc& b : arcs) maximal = maximal && !inside(a, b);
            const int score = maximal ? a.l : 1 << 20;
            auto it = best.find(a.owner);
            if (it == best.end() || score < it->second) best[a.owner] = score;
        }
        std::vector<VertexId> out = far;
        std::stable_sort(out.begin(), out.end(), [&](VertexId x, VertexId y) {
            int sx = best.count(x) ? best.at(x) : 1 << 21, sy = best.count(y) ? best.at(y) : 1 << 21;
            return sx < sy;
        });
        return out;
    }

    Work w_;
    SubcubicTrace* trace_;
};

Work initial_work(const MultiGraph& g, const Contraction& c, const BookEmbedding& lay) {
    const int n = g.num_vertices();
    const PlaneGraph& b = c.multigraph;
    Work w;
    for (VertexId v = 0; v < n; ++v) w.add_vertex(Role::Absent);
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
        const Edge& ed = b.graph().edge(e);
        w.add_edge(c.kept[ed.u], c.kept[ed.v], c.g_edge[e], lay.page[e]);
        w.nest[e] = lay.nest[e];
    }
    for (std::size_t d = 0; d < c.from_absorbed.size(); ++d) w.absorbed[d] = c.from_absorbed[d];
    for (VertexId x = 0; x < b.num_vertices(); ++x) {
        const VertexId v = c.kept[x];
        auto r = b.rotation(x);
        w.rot[v].assign(r.begin(), r.end());
        if (c.matched[x] < 0) {
            w.role[v] = Role::Plain;
            continue;
        }
        w.role[v] = Role::Contracted;
        w.m_edge[v] = c.matched[x];
        const Edge& m = g.edge(c.matched[x]);
        w.partner[v] = m.u == v ? m.v : m.u;
    }
    for (VertexId x : lay.spine) w.spine.push_back(c.kept[x]);
    return w;
}

}  // namespace

PoshCertificate subcubic_posh(const MultiGraph& g, SubcubicTrace* trace) {
    if (g.has_loops() || !g.is_simple()) throw DomainError("subcubic: graph must be simple");
    if (g.max_degree() > 3) throw DomainError("subcubic: maximum degree exceeds 3");
    const int n = g.num_vertices();
    PlaneGraph d = planar_embed(g);
    if (n < 2) {
        BookEmbedding b;
        b.graph = g;
        for (VertexId v = 0; v < n; ++v) b.spine.push_back(v);
        return certificate_from_book(b, n);
    }
    auto [cut, m] = maxcut_matching(g);
    if (n <= 20) {
        // among all minimum matchings prefer one covering few separating quads
        std::size_t best = covered_separating_quads(d, m).size();
        for (auto& cand : minimum_matchings(g)) {
            if (best == 0) break;
            std::size_t here = covered_separating_quads(d, cand).size();
            if (here < best) best = here, m = cand;
        }
    }
    SubcubicTrace local;
    SubcubicTrace& t = trace ? *trace : local;
    t = SubcubicTrace{};
    t.cut = cut;
    t.initial_matching = m;
    t.repair = repair_embedding(d, m);
    t.separating_triangles_after = static_cast<int>(separating_cycles(t.repair.plane, 3).size());
    t.covered_quads_after = static_cast<int>(covered_separating_quads(t.repair.plane, t.repair.matching).size());
    if (t.separating_triangles_after + t.covered_quads_after > 0)
        throw InvariantError("subcubic: repaired embedding still has separating cycles");
    t.contraction = contract(t.repair.plane, t.repair.matching);
    t.contraction_bipartite = true;
    t.bipartite_layout = book_embed_bipartite_multigraph(t.contraction.multigraph);

    Engine engine(initial_work(g, t.contraction, t.bipartite_layout), &t);
    engine.add_leaves();
    engine.split_all();
    const Work& w = engine.work();
    for (Role r : w.role)
        if (r == Role::Contracted || r == Role::Absent) throw InvariantError("subcubic: unsplit vertex left");
    Snapshot s = snapshot(w);
    t.final_layout = s.book;
    t.final_g_edge = w.g_edge;
    // the layout must carry exactly g's edges besides the leaves
    std::vector<int> seen(g.num_edges(), 0);
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        const EdgeId ge = w.g_edge[e];
        if (ge < 0) continue;
        const Edge &a = w.ends[e], &b = g.edge(ge);
        if (!((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)))
            throw InvariantError("subcubic: edge " + std::to_string(ge) + " has wrong endpoints");
        ++seen[ge];
    }
    for (int k : seen)
        if (k != 1) throw InvariantError("subcubic: layout does not carry every edge once");
    std::vector<char> kv(s.book.graph.num_vertices(), 0), ke(w.num_edges(), 0);
    for (VertexId v = 0; v < n; ++v) kv[v] = 1;
    for (EdgeId e = 0; e < w.num_edges(); ++e) ke[e] = w.g_edge[e] >= 0;
    return certificate_from_book(restrict_book(s.book, kv, ke), n);
}

}  // namespace posh
