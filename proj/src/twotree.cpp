#include "posh/twotree.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "posh/errors.hpp"

namespace posh {

TwoTree::TwoTree() : TwoTree(std::vector<EdgeId>{-1, -1, 0}) {}

TwoTree::TwoTree(std::vector<EdgeId> parents) : graph_(2) {
    if (parents.size() < 3 || parents[0] != -1 || parents[1] != -1)
        throw DomainError("two-tree: need at least a triangle, vertices 0 and 1 unstacked");
    graph_.add_edge(0, 1);
    parents_ = {-1, -1};
    stacked_.assign(1, {});
    for (std::size_t k = 2; k < parents.size(); ++k) stack(parents[k]);
}

VertexId TwoTree::stack(EdgeId parent) {
    if (parent < 0 || parent >= num_edges())
        throw DomainError("two-tree: stack over missing edge " + std::to_string(parent));
    const Edge e = graph_.edge(parent);
    const VertexId v = graph_.add_vertex();
    graph_.add_edge(e.u, v);
    graph_.add_edge(e.v, v);
    parents_.push_back(parent);
    stacked_[parent].push_back(v);
    stacked_.resize(graph_.num_edges());
    return v;
}

std::vector<VertexId> TwoTree::stacked_on(EdgeId e) const { return stacked_.at(e); }

std::vector<EdgeId> TwoTree::created_over(EdgeId e) const {
    std::vector<EdgeId> out;
    for (VertexId v : stacked_.at(e)) {
        out.push_back(2 * v - 3);
        out.push_back(2 * v - 2);
    }
    return out;
}

TwoTree build_counterexample() {
    TwoTree tt;  // vertex 2 is the first of seven over the base edge
    for (int i = 1; i < 7; ++i) tt.stack(0);
    for (EdgeId e1 : tt.created_over(0)) {
        for (int i = 0; i < 5; ++i) tt.stack(e1);
        for (EdgeId e2 : tt.created_over(e1))
            for (int i = 0; i < 3; ++i) tt.stack(e2);
    }
    return tt;
}

CounterexampleAudit audit_counterexample(const TwoTree& tt) {
    CounterexampleAudit a;
    a.vertices = tt.num_vertices();
    a.edges = tt.num_edges();
    a.base_stack = static_cast<int>(tt.stacked_on(0).size());
    a.uniform = true;
    std::vector<EdgeId> level = {0};
    while (!level.empty()) {
        std::set<std::size_t> sizes;
        std::vector<EdgeId> next;
        for (EdgeId e : level) {
            sizes.insert(tt.stacked_on(e).size());
            for (EdgeId c : tt.created_over(e)) next.push_back(c);
        }
        a.uniform = a.uniform && sizes.size() == 1;
        a.level_stacks.push_back(static_cast<int>(*sizes.begin()));
        if (!next.empty()) a.level_edges.push_back(static_cast<int>(next.size()));
        level = std::move(next);
    }
    auto all_carry = [&](const std::vector<EdgeId>& es) {
        return std::all_of(es.begin(), es.end(), [&](EdgeId e) { return tt.stacked_on(e).size() >= 3; });
    };
    const auto children = tt.created_over(0);
    a.middle_premise_base = all_carry(children);
    a.middle_premise_children =
        std::all_of(children.begin(), children.end(), [&](EdgeId c) { return all_carry(tt.created_over(c)); });
    a.forced_left_base = a.base_stack - 2 - 3;
    int smallest = a.base_stack;
    for (EdgeId c : children) smallest = std::min(smallest, static_cast<int>(tt.stacked_on(c).size()));
    a.forced_left_child = children.empty() ? 0 : smallest - 0 - 3;
    return a;
}

StackPartition partition_stack(const TwoTree& tt, EdgeId e, const std::vector<int>& pos) {
    const Edge ed = tt.graph().edge(e);
    const int lo = std::min(pos.at(ed.u), pos.at(ed.v));
    const int hi = std::max(pos.at(ed.u), pos.at(ed.v));
    StackPartition p;
    for (VertexId x : tt.stacked_on(e)) {
        if (pos[x] < lo)
            p.left.push_back(x);
        else if (pos[x] < hi)
            p.middle.push_back(x);
        else
            p.right.push_back(x);
    }
    return p;
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneProven: return "none-proven";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct BudgetExceeded {};

class LayoutSearch {
  public:
    LayoutSearch(const MultiGraph& g, std::int64_t budget, const std::function<bool(const BookEmbedding&)>& visit)
        : g_(g), budget_(budget), visit_(visit), pos_(g.num_vertices(), -1), side_(g.num_vertices(), Page::Upper) {}

    // false if the visitor asked to stop
    bool run() { return place(0); }
    std::int64_t nodes() const { return nodes_; }
    bool visited() const { return visited_; }

  private:
    bool place(int k) {
        const int n = g_.num_vertices();
        if (k == n) {
            visited_ = true;
            return visit_(layout());
        }
        for (VertexId v = 0; v < n; ++v) {
            if (pos_[v] >= 0) continue;
            std::vector<int> back;
            for (VertexId w : g_.neighbors(v))
                if (pos_[w] >= 0 && pos_[w] != k - 1) back.push_back(pos_[w]);
            const Page pages[2] = {Page::Upper, Page::Lower};
            const int options = back.empty() ? 1 : 2;
            for (int o = 0; o < options; ++o) {
                if (++nodes_ > budget_) throw BudgetExceeded{};
                auto& arcs = o == 0 ? upper_ : lower_;
                if (!fits(arcs, back)) continue;
                for (int a : back) arcs.push_back({a, k});
                pos_[v] = k;
                side_[v] = pages[o];
                spine_.push_back(v);
                const bool go_on = place(k + 1);
                spine_.pop_back();
                pos_[v] = -1;
                arcs.resize(arcs.size() - back.size());
                if (!go_on) return false;
            }
        }
        return true;
    }

    // arcs (a, k) cross an arc (c, d) with d < k iff c < a < d
    static bool fits(const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& back) {
        for (auto [c, d] : arcs)
            for (int a : back)
                if (c < a && a < d) return false;
        return true;
    }

    BookEmbedding layout() const {
        BookEmbedding b;
        b.graph = g_;
        b.spine = spine_;
        b.page.resize(g_.num_edges());
        b.nest.assign(g_.num_edges(), 0);
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            auto [u, v] = g_.edge(e);
            if (std::abs(pos_[u] - pos_[v]) == 1)
                b.page[e] = Page::Spine;
            else
                b.page[e] = side_[pos_[u] > pos_[v] ? u : v];
        }
        return b;
    }

    const MultiGraph& g_;
    std::int64_t budget_;
    const std::function<bool(const BookEmbedding&)>& visit_;
    std::vector<int> pos_;
    std::vector<Page> side_;
    std::vector<VertexId> spine_;
    std::vector<std::pair<int, int>> upper_, lower_;
    std::int64_t nodes_ = 0;
    bool visited_ = false;
};

}  // namespace

SearchStatus for_each_posh_layout(const MultiGraph& g, std::int64_t node_budget,
                                  const std::function<bool(const BookEmbedding&)>& visit, std::int64_t* nodes) {
    if (!g.is_simple()) throw DomainError("brute-force layout search needs a simple graph");
    LayoutSearch s(g, node_budget, visit);
    SearchStatus status;
    try {
        const bool completed = s.run();
        status = !completed ? SearchStatus::Inconclusive
                 : s.visited() ? SearchStatus::Found
                               : SearchStatus::NoneProven;
    } catch (const BudgetExceeded&) {
        status = SearchStatus::Inconclusive;
    }
    if (nodes) *nodes = s.nodes();
    return status;
}

SearchResult brute_force_posh(const MultiGraph& g, std::int64_t node_budget) {
    SearchResult r;
    auto status = for_each_posh_layout(
        g, node_budget,
        [&](const BookEmbedding& b) {
            r.layout = b;
            return false;
        },
        &r.nodes);
    r.status = r.layout ? SearchStatus::Found : status;
    return r;
}

void require_posh_layout(const BookEmbedding& b) {
    const int n = b.graph.num_vertices();
    std::vector<VertexId> sorted = b.spine;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(sorted.size()) != n || sorted[i] != i)
            throw PreconditionError("layout: spine is not a permutation of the vertices");
    if (!book_conflicts(b).empty()) throw PreconditionError("layout: crossing arcs or malformed spine edge");
    if (auto bad = one_sidedness_violations(b); !bad.empty())
        throw PreconditionError("layout: back arcs on both pages at vertex " + std::to_string(bad.front()));
}

std::string to_string(Claim c) {
    switch (c) {
        case Claim::RightAtMostTwo: return "right-at-most-two";
        case Claim::MiddleAtMostThree: return "middle-at-most-three";
        case Claim::LeftEscape: return "left-escape";
    }
    return "?";
}

ClaimReport check_claims(const TwoTree& tt, const BookEmbedding& layout) {
    if (layout.graph.num_vertices() != tt.num_vertices() || layout.graph.num_edges() != tt.num_edges())
        throw PreconditionError("claims: layout is not of this 2-tree");
    for (EdgeId e = 0; e < tt.num_edges(); ++e) {
        auto a = layout.graph.edge(e), b = tt.graph().edge(e);
        if (std::minmax(a.u, a.v) != std::minmax(b.u, b.v))
            throw PreconditionError("claims: layout edge " + std::to_string(e) + " differs");
    }
    require_posh_layout(layout);
    const auto pos = layout.positions();
    ClaimReport r;
    for (EdgeId e = 0; e < tt.num_edges(); ++e) {
        ++r.edges_checked;
        const auto part = partition_stack(tt, e, pos);
        if (part.right.size() > 2) r.violations.push_back({Claim::RightAtMostTwo, e, part.right});

        const auto children = tt.created_over(e);
        const bool premise = !children.empty() && std::all_of(children.begin(), children.end(), [&](EdgeId c) {
            return tt.stacked_on(c).size() >= 3;
        });
        if (premise) {
            ++r.middle_premise_edges;
            if (part.middle.size() > 3) r.violations.push_back({Claim::MiddleAtMostThree, e, part.middle});
        }

        if (part.left.size() >= 2) {
            ++r.left_premise_edges;
            const VertexId x =
                *std::max_element(part.left.begin(), part.left.end(), [&](VertexId p, VertexId q) { return pos[p] < pos[q]; });
            // the two edges created when x was stacked over e
            const auto first = partition_stack(tt, 2 * x - 3, pos);
            const auto second = partition_stack(tt, 2 * x - 2, pos);
            const bool holds = first.right.empty() && second.right.empty() &&
                               std::min(first.left.size(), second.left.size()) <= 1;
            if (!holds) r.violations.push_back({Claim::LeftEscape, e, {x}});
        }
    }
    return r;
}

std::string canonical_form(const MultiGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<VertexId> by_degree(n);
    for (int i = 0; i < n; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    // slot i may take any vertex of by_degree[i]'s degree
    std::string best;
    std::vector<VertexId> order(n);
    std::vector<char> used(n, 0);
    std::string cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != g.degree(by_degree[i])) continue;
            const std::size_t mark = cur.size();
            for (int j = 0; j < i; ++j) cur.push_back(adj[order[j]][v] ? '1' : '0');
            // prune prefixes already worse than the best string
            if (best.empty() || cur.compare(0, cur.size(), best, 0, cur.size()) <= 0) {
                used[v] = 1;
                order[i] = v;
                self(self, i + 1);
                used[v] = 0;
            }
            cur.resize(mark);
        }
    };
    rec(rec, 0);
    std::string degrees;
    for (VertexId v : by_degree) degrees += std::to_string(g.degree(v)) + ",";
    return degrees + best;
}

std::vector<TwoTree> enumerate_two_trees(int n) {
    if (n < 3) throw DomainError("2-trees start from a triangle (n >= 3)");
    std::vector<TwoTree> level = {TwoTree()};
    for (int size = 4; size <= n; ++size) {
        std::vector<TwoTree> next;
        std::set<std::string> seen;
        for (const TwoTree& t : level)
            for (EdgeId e = 0; e < t.num_edges(); ++e) {
                TwoTree s = t;
                s.stack(e);
                if (seen.insert(canonical_form(s.graph())).second) next.push_back(std::move(s));
            }
        level = std::move(next);
    }
    return level;
}

}  // namespace posh
