#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posh/bipartite.hpp"
#include "posh/errors.hpp"
#include "posh/generators.hpp"
#include "posh/twotree.hpp"

using namespace posh;
using namespace fixtures;

namespace {

// Every spine order and every per-edge page choice, checked with the book
// crossing and one-sidedness tests only.
long long brute_layout_count(const MultiGraph& g) {
    const int n = g.num_vertices(), m = g.num_edges();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    long long count = 0;
    do {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<EdgeId> arcs;
        for (EdgeId e = 0; e < m; ++e)
            if (std::abs(pos[g.edge(e).u] - pos[g.edge(e).v]) != 1) arcs.push_back(e);
        for (long mask = 0; mask < (1L << arcs.size()); ++mask) {
            BookEmbedding b{g, order, std::vector<Page>(m, Page::Spine), std::vector<int>(m, 0)};
            for (std::size_t i = 0; i < arcs.size(); ++i) b.page[arcs[i]] = (mask >> i & 1) ? Page::Lower : Page::Upper;
            if (book_conflicts(b).empty() && one_sidedness_violations(b).empty()) ++count;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    const int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::set<std::pair<int, int>> eb;
    for (const Edge& e : b.edges()) eb.insert(std::minmax(e.u, e.v));
    do {
        bool ok = true;
        for (const Edge& e : a.edges())
            if (!eb.count(std::minmax(p[e.u], p[e.v]))) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

TwoTree random_two_tree(int n, Rng& rng) {
    TwoTree t;
    while (t.num_vertices() < n) t.stack(pick(rng, t.num_edges()));
    return t;
}

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& p) {
    MultiGraph h(g.num_vertices());
    for (const Edge& e : g.edges()) h.add_edge(p[e.u], p[e.v]);
    return h;
}

}  // namespace

TEST_CASE("two-tree stacking sequence") {
    TwoTree t;
    CHECK(t.num_vertices() == 3);
    CHECK(t.num_edges() == 3);
    CHECK(t.stacked_on(0) == std::vector<VertexId>{2});
    CHECK(t.created_over(0) == std::vector<EdgeId>{1, 2});
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = random_two_tree(3 + pick(rng, 20), rng);
        CHECK(r.num_edges() == 2 * r.num_vertices() - 3);
        // each stacked vertex is adjacent to both ends of its parent
        for (VertexId v = 2; v < r.num_vertices(); ++v) {
            const Edge p = r.graph().edge(r.parents()[v]);
            CHECK(oracles::edge_between(r.graph(), v, p.u) >= 0);
            CHECK(oracles::edge_between(r.graph(), v, p.v) >= 0);
            CHECK(r.graph().degree(v) >= 2);
        }
        CHECK(TwoTree(r.parents()).graph().edges().size() == r.graph().edges().size());
    }
    CHECK_THROWS_AS(t.stack(3), DomainError);
    CHECK_THROWS_AS(TwoTree({-1, -1, 0, 5}), DomainError);
    CHECK_THROWS_AS(TwoTree({-1, -1}), DomainError);
}

TEST_CASE("counterexample audit") {
    const TwoTree g = build_counterexample();
    const auto a = audit_counterexample(g);
    CHECK(a.vertices == 499);
    CHECK(a.edges == 995);
    CHECK(g.graph().num_edges() == 2 * g.graph().num_vertices() - 3);
    CHECK(a.base_stack == 7);
    CHECK(g.created_over(0).size() == 14);
    CHECK(a.level_edges == std::vector<int>{14, 140, 840});
    CHECK(a.level_stacks == std::vector<int>{7, 5, 3, 0});
    CHECK(a.uniform);
    CHECK(1 + 14 + 140 + 840 == a.edges);
    CHECK(a.middle_premise_base);
    CHECK(a.middle_premise_children);
    CHECK(a.forced_left_base >= 2);
    CHECK(a.forced_left_child >= 2);

    // any layout meeting the right and middle bounds at the base edge leaves
    // at least two vertices on its left
    Rng rng(99);
    int bounded = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> pos(a.vertices);
        std::iota(pos.begin(), pos.end(), 0);
        for (int i = a.vertices - 1; i > 0; --i) std::swap(pos[i], pos[pick(rng, i + 1)]);
        auto part = partition_stack(g, 0, pos);
        CHECK(part.left.size() + part.middle.size() + part.right.size() == 7);
        if (part.right.size() <= 2 && part.middle.size() <= 3) {
            ++bounded;
            CHECK(part.left.size() >= 2);
        }
    }
    CHECK(bounded > 0);
}

TEST_CASE("brute force agrees with an exhaustive page sweep") {
    std::vector<MultiGraph> cases = {complete_graph(4), cycle_graph(4), cycle_graph(5), path_graph(4),
                                     prism_graph(), make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {3, 4}, {0, 4}})};
    Rng rng(8);
    for (int i = 0; i < 6; ++i) cases.push_back(random_two_tree(4 + pick(rng, 3), rng).graph());
    for (int i = 0; i < 4; ++i) cases.push_back(random_planar(5 + pick(rng, 2), 0.8, rng).graph());
    for (const auto& g : cases) {
        long long seen = 0;
        auto status = for_each_posh_layout(g, 1'000'000'000, [&](const BookEmbedding& b) {
            CHECK_NOTHROW(require_posh_layout(b));
            ++seen;
            return true;
        });
        const long long want = brute_layout_count(g);
        CHECK(seen == want);
        CHECK(status == (want > 0 ? SearchStatus::Found : SearchStatus::NoneProven));
    }
}

TEST_CASE("brute force on named graphs") {
    for (const auto& g : {complete_graph(4), cycle_graph(4), TwoTree().graph()}) {
        auto r = brute_force_posh(g, 1'000'000);
        REQUIRE(r.status == SearchStatus::Found);
        // the layout closes into a one-sided Hamiltonian cycle
        auto c = certificate_from_book(*r.layout, g.num_vertices());
        CHECK(check_one_sided(c.plane, c.order).ok());
        CHECK(oracles::literal_one_sided(c.plane, c.order.order) == 0);
    }
    CHECK(brute_force_posh(complete_graph(5), 1'000'000'000).status == SearchStatus::NoneProven);
    auto k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(brute_force_posh(k33, 1'000'000'000).status == SearchStatus::NoneProven);
    auto tight = brute_force_posh(complete_graph(5), 10);
    CHECK(tight.status == SearchStatus::Inconclusive);
    CHECK(tight.nodes > 10);
    MultiGraph multi(2);
    multi.add_edge(0, 1);
    multi.add_edge(0, 1);
    CHECK_THROWS_AS(brute_force_posh(multi, 100), DomainError);
}

TEST_CASE("three vertices right of an edge always cross") {
    const TwoTree t({-1, -1, 0, 0, 0});
    const std::vector<VertexId> spine = {0, 1, 2, 3, 4};
    std::vector<EdgeId> arcs;
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
        const Edge ed = t.graph().edge(e);
        if (std::abs(ed.u - ed.v) != 1) arcs.push_back(e);
    }
    for (long mask = 0; mask < (1L << arcs.size()); ++mask) {
        BookEmbedding b{t.graph(), spine, std::vector<Page>(t.num_edges(), Page::Spine),
                        std::vector<int>(t.num_edges(), 0)};
        for (std::size_t i = 0; i < arcs.size(); ++i) b.page[arcs[i]] = (mask >> i & 1) ? Page::Lower : Page::Upper;
        CHECK((!book_conflicts(b).empty() || !one_sidedness_violations(b).empty()));
        CHECK_THROWS_AS(check_claims(t, b), PreconditionError);
    }
    // and no valid layout of any small 2-tree puts three on the right
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto r = random_two_tree(5 + pick(rng, 3), rng);
        for_each_posh_layout(r.graph(), 1'000'000'000, [&](const BookEmbedding& b) {
            const auto pos = b.positions();
            for (EdgeId e = 0; e < r.num_edges(); ++e) CHECK(partition_stack(r, e, pos).right.size() <= 2);
            return true;
        });
    }
}

TEST_CASE("two-tree enumeration up to isomorphism") {
    const std::vector<int> counts = {1, 1, 2, 5, 12, 39};
    for (int n = 3; n <= 8; ++n) {
        auto trees = enumerate_two_trees(n);
        CHECK(static_cast<int>(trees.size()) == counts[n - 3]);
        for (const auto& t : trees) CHECK(t.num_edges() == 2 * n - 3);
        if (n <= 7)
            for (std::size_t i = 0; i < trees.size(); ++i)
                for (std::size_t j = i + 1; j < trees.size(); ++j) CHECK(!isomorphic(trees[i].graph(), trees[j].graph()));
        Rng rng(n);
        for (int trial = 0; trial < 20; ++trial) {
            auto r = random_two_tree(n, rng);
            int hits = 0;
            for (const auto& t : trees) hits += isomorphic(r.graph(), t.graph());
            CHECK(hits == 1);
        }
    }
    CHECK_THROWS_AS(enumerate_two_trees(2), DomainError);
}

TEST_CASE("canonical form ignores labels") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_planar(4 + pick(rng, 5), 0.7, rng).graph();
        std::vector<int> p(g.num_vertices());
        std::iota(p.begin(), p.end(), 0);
        for (int i = g.num_vertices() - 1; i > 0; --i) std::swap(p[i], p[pick(rng, i + 1)]);
        CHECK(canonical_form(g) == canonical_form(relabel(g, p)));
    }
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(prism_graph()));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
}

TEST_CASE("claims hold on every layout of every small 2-tree") {
    long long layouts = 0, middle_premises = 0, left_premises = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& t : enumerate_two_trees(n)) {
            auto found = brute_force_posh(t.graph(), 1'000'000'000);
            REQUIRE(found.status == SearchStatus::Found);
            auto c = certificate_from_book(*found.layout, n);
            CHECK(check_one_sided(c.plane, c.order).ok());
            auto status = for_each_posh_layout(t.graph(), 1'000'000'000, [&](const BookEmbedding& b) {
                auto r = check_claims(t, b);
                CHECK(r.ok());
                ++layouts;
                middle_premises += r.middle_premise_edges;
                left_premises += r.left_premise_edges;
                return true;
            });
            CHECK(status == SearchStatus::Found);
        }
    }
    MESSAGE("layouts " << layouts << " middle premises " << middle_premises << " left premises " << left_premises);
    CHECK(left_premises > 0);
}

TEST_CASE("middle claim on the smallest tree meeting its premise") {
    // one vertex over the base edge, three over each of the two new edges
    const TwoTree t({-1, -1, 0, 1, 1, 1, 2, 2, 2});
    long long layouts = 0, premises = 0;
    for_each_posh_layout(t.graph(), 1'000'000'000, [&](const BookEmbedding& b) {
        auto r = check_claims(t, b);
        CHECK(r.ok());
        ++layouts;
        premises += r.middle_premise_edges;
        return true;
    });
    CHECK(layouts > 0);
    CHECK(premises == layouts);
}

TEST_CASE("claims reject foreign layouts") {
    TwoTree t;
    auto r = brute_force_posh(complete_graph(4), 1000);
    CHECK_THROWS_AS(check_claims(t, *r.layout), PreconditionError);
}
