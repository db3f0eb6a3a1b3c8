#include <deque>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posh/bipartite.hpp"
#include "posh/errors.hpp"
#include "posh/generators.hpp"
#include "posh/planarity.hpp"

using namespace posh;
using namespace fixtures;

namespace {

// proper 2-colouring by BFS, or empty if there is none
std::vector<int> bfs_colouring(const MultiGraph& g) {
    std::vector<int> col(g.num_vertices(), -1);
    for (VertexId r = 0; r < g.num_vertices(); ++r) {
        if (col[r] != -1) continue;
        col[r] = 0;
        std::deque<VertexId> q{r};
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other(e, v);
                if (col[w] == -1) {
                    col[w] = 1 - col[v];
                    q.push_back(w);
                } else if (col[w] == col[v]) {
                    return {};
                }
            }
        }
    }
    return col;
}

// A connected simple bipartite plane graph with 2n-4 edges and no vertex of
// degree < 2 has only 4-faces, all of them cycles.
void check_quadrangulation(const Quadrangulation& q, const PlaneGraph& input) {
    const MultiGraph& g = q.plane.graph();
    const int n = g.num_vertices();
    CHECK(g.is_simple());
    CHECK(g.num_edges() == 2 * n - 4);
    int comps = 0;
    g.components(&comps);
    CHECK(comps == 1);
    auto col = bfs_colouring(g);
    REQUIRE(!col.empty());
    for (VertexId v = 0; v < n; ++v) CHECK(g.degree(v) >= 2);
    for (EdgeId e = 0; e < input.num_edges(); ++e) {
        CHECK(g.edge(e).u == input.graph().edge(e).u);
        CHECK(g.edge(e).v == input.graph().edge(e).v);
    }
    CHECK(q.original_vertices == input.num_vertices());
    CHECK(q.original_edges == input.num_edges());
    // the input's rotations survive as subsequences
    for (VertexId v = 0; v < input.num_vertices(); ++v) {
        std::vector<Dart> kept;
        for (Dart d : q.plane.rotation(v))
            if (edge_of(d) < input.num_edges()) kept.push_back(d);
        std::vector<EdgeId> a, b;
        for (Dart d : kept) a.push_back(edge_of(d));
        for (Dart d : input.rotation(v)) b.push_back(edge_of(d));
        CHECK(oracles::cyclic_equal(a, b));
    }
    CHECK(col[q.s] == col[q.t]);
    CHECK(q.s < q.t);
}

// out-degrees from the head array
std::vector<int> out_degrees(const MultiGraph& g, const TwoOrientation& o) {
    std::vector<int> out(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) ++out[g.other(e, o.head[e])];
    return out;
}

// Walk a tree along edges of one colour; every vertex except `skip` must
// arrive at root.
bool tree_to(const MultiGraph& g, const SeparatingDecomposition& sd, TreeColor c, VertexId root, VertexId skip) {
    std::vector<VertexId> parent(g.num_vertices(), -1);
    int count = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (sd.color[e] != c) continue;
        ++count;
        VertexId h = sd.orientation.head[e];
        VertexId t = g.other(e, h);
        if (parent[t] != -1) return false;
        parent[t] = h;
    }
    if (count != g.num_vertices() - 2) return false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v == skip) continue;
        VertexId x = v;
        for (int i = 0; i <= g.num_vertices() && x != root && x != -1; ++i) x = parent[x];
        if (x != root) return false;
    }
    return true;
}

// Alternation by definition: tree neighbours of v lie on one side, and the
// red and blue sides differ.
void check_alternating(const BookEmbedding& b, const Quadrangulation& q, const SeparatingDecomposition& sd) {
    auto pos = b.positions();
    for (VertexId v = 0; v < b.graph.num_vertices(); ++v) {
        int red_side = 0, blue_side = 0;  // -1 left, +1 right, 2 both
        for (EdgeId e : b.graph.incident(v)) {
            int side = pos[b.graph.other(e, v)] < pos[v] ? -1 : 1;
            int& s = sd.color[e] == TreeColor::Red ? red_side : blue_side;
            s = (s == 0 || s == side) ? side : 2;
        }
        CHECK(red_side != 2);
        CHECK(blue_side != 2);
        if (red_side != 0 && blue_side != 0) CHECK(red_side == -blue_side);
        // black: blue to the left, white: red to the left
        if (q.color[v] == 0 && red_side != 0) CHECK(red_side == 1);
        if (q.color[v] == 1) CHECK(red_side == -1);
    }
}

void check_certificate_drawing(const PoshCertificate& c, const PlaneGraph& pg) {
    auto cd = draw_certificate(c, pg.graph());
    CHECK(cd.drawing.certified);
    CHECK(verify_drawing(pg.graph(), cd.drawing).crossing_free());
    CHECK(cd.chain_size == c.plane.num_vertices());
    auto ps = build_hn(cd.chain_size);
    std::vector<int> column(c.plane.num_vertices());
    for (int j = 0; j < c.plane.num_vertices(); ++j) column[c.order.order[j]] = j + 1;
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
        const int i = column[c.vertex_of[v]];
        CHECK(cd.points[v].index == i);
        const RatPoint want = to_rational(ps.at(cd.points[v]));
        CHECK(*cd.drawing.placement[v] == want);
        CHECK((ps.at(cd.points[v]) == ps.p(i) || ps.at(cd.points[v]) == ps.q(i)));
    }
}

}  // namespace

TEST_CASE("C4 and the cube are already quadrangulations") {
    for (auto pg : {cycle_plane(4), planar_embed(cube_graph()), pseudo_double_wheel()}) {
        auto q = augment_to_quadrangulation(pg);
        CHECK(q.plane.num_vertices() == pg.num_vertices());
        CHECK(q.plane.num_edges() == pg.num_edges());
        check_quadrangulation(q, pg);
    }
}

TEST_CASE("augmentation of small graphs") {
    auto edge = planar_embed(make_graph(2, {{0, 1}}));
    auto q = augment_to_quadrangulation(edge);
    check_quadrangulation(q, edge);
    CHECK(q.plane.num_vertices() == 4);  // a 4-cycle is the smallest quadrangulation

    auto c6 = cycle_plane(6);
    check_quadrangulation(augment_to_quadrangulation(c6), c6);

    auto empty = planar_embed(MultiGraph(5));
    check_quadrangulation(augment_to_quadrangulation(empty), empty);

    CHECK_THROWS_AS(augment_to_quadrangulation(planar_embed(MultiGraph(1))), PreconditionError);
    CHECK_THROWS_AS(augment_to_quadrangulation(cycle_plane(5)), NotBipartiteError);
}

TEST_CASE("augmentation of random bipartite plane graphs") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto pg = random_bipartite_plane(2 + pick(rng, 40), 0.2 + 0.8 * (pick(rng, 100) / 100.0), rng);
        auto q = augment_to_quadrangulation(pg);
        check_quadrangulation(q, pg);
        CHECK_NOTHROW(validate_quadrangulation(q));
    }
}

TEST_CASE("2-orientations") {
    auto c4 = augment_to_quadrangulation(cycle_plane(4));
    auto o = compute_2orientation(c4);
    // the white corners have degree 2, so both their edges leave them
    for (EdgeId e = 0; e < 4; ++e) CHECK((o.head[e] == c4.s || o.head[e] == c4.t));

    Rng rng(8);
    std::vector<PlaneGraph> cases = {pseudo_double_wheel(), planar_embed(cube_graph())};
    for (int i = 0; i < 60; ++i) cases.push_back(random_bipartite_plane(3 + pick(rng, 45), 0.7, rng));
    for (const auto& pg : cases) {
        auto q = augment_to_quadrangulation(pg);
        auto ori = compute_2orientation(q);
        auto out = out_degrees(q.plane.graph(), ori);
        for (VertexId v = 0; v < q.plane.num_vertices(); ++v) CHECK(out[v] == ((v == q.s || v == q.t) ? 0 : 2));
    }
}

TEST_CASE("C4 decomposition: red into s, blue into t") {
    auto q = augment_to_quadrangulation(cycle_plane(4));
    auto sd = derive_separating_decomposition(q, compute_2orientation(q));
    for (EdgeId e = 0; e < 4; ++e)
        CHECK(sd.color[e] == (sd.orientation.head[e] == q.s ? TreeColor::Red : TreeColor::Blue));
}

// The colouring is a function of the orientation: out of all 2^m colourings
// exactly the derived one passes.
TEST_CASE("the derived colouring is the only valid one") {
    std::vector<PlaneGraph> cases = {cycle_plane(4), pseudo_double_wheel(), planar_embed(cube_graph()),
                                     planar_embed(grid_graph(2, 3))};
    for (const auto& pg : cases) {
        auto q = augment_to_quadrangulation(pg);
        auto o = compute_2orientation(q);
        auto sd = derive_separating_decomposition(q, o);
        const int m = q.plane.num_edges();
        REQUIRE(m <= 16);
        int valid = 0;
        SeparatingDecomposition trial{o, std::vector<TreeColor>(m)};
        for (int mask = 0; mask < (1 << m); ++mask) {
            for (EdgeId e = 0; e < m; ++e) trial.color[e] = (mask >> e & 1) ? TreeColor::Blue : TreeColor::Red;
            if (check_separating_decomposition(q, trial).empty()) {
                ++valid;
                CHECK(trial.color == sd.color);
            }
        }
        CHECK(valid == 1);
    }
}

TEST_CASE("separating decompositions of random quadrangulations") {
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        auto pg = random_bipartite_plane(4 + pick(rng, 46), 0.3 + 0.7 * (pick(rng, 100) / 100.0), rng);
        auto q = augment_to_quadrangulation(pg);
        auto o = compute_2orientation(q);
        auto sd = derive_separating_decomposition(q, o);
        CHECK(sd.orientation.head == o.head);  // forgetting colours gives o back
        CHECK(check_separating_decomposition(q, sd).empty());
        CHECK(tree_to(q.plane.graph(), sd, TreeColor::Red, q.s, q.t));
        CHECK(tree_to(q.plane.graph(), sd, TreeColor::Blue, q.t, q.s));
        // flipping any one colour is detected
        auto bad = sd;
        EdgeId e = pick(rng, q.plane.num_edges());
        bad.color[e] = bad.color[e] == TreeColor::Red ? TreeColor::Blue : TreeColor::Red;
        CHECK(!check_separating_decomposition(q, bad).empty());
    }
}

TEST_CASE("C4 spine: s first, t last, both whites between") {
    auto q = augment_to_quadrangulation(cycle_plane(4));
    auto sd = derive_separating_decomposition(q, compute_2orientation(q));
    auto b = equatorial_spine(q, sd);
    REQUIRE(b.spine.size() == 4);
    CHECK(b.spine.front() == q.s);
    CHECK(b.spine.back() == q.t);
    // brute force over all layouts with red above and blue below
    std::vector<VertexId> perm = {0, 1, 2, 3};
    int good = 0;
    bool found = false;
    do {
        BookEmbedding t = b;
        t.spine = perm;
        bool alt = non_alternating_vertices(t, sd.color).empty();
        bool plane = book_conflicts(t).empty();
        if (alt && plane && perm.front() == q.s && perm.back() == q.t) {
            ++good;
            found = found || perm == b.spine;
        }
        // t in the third slot leaves the white vertex after it with red on both
        // sides, or with no red edge at all
        if (perm.front() == q.s && perm[2] == q.t) CHECK(!alt);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(good == 2);
    CHECK(found);
    check_alternating(b, q, sd);
}

TEST_CASE("pseudo double wheel: alternating, crossing-free, same rotation") {
    auto q = augment_to_quadrangulation(pseudo_double_wheel());
    auto sd = derive_separating_decomposition(q, compute_2orientation(q));
    auto b = equatorial_spine(q, sd);
    CHECK(b.spine.front() == q.s);
    CHECK(b.spine.back() == q.t);
    CHECK(book_conflicts(b).empty());
    check_alternating(b, q, sd);
    auto geo = oracles::polyline_rotation(b);
    for (VertexId v = 0; v < 8; ++v) {
        std::vector<EdgeId> a, r;
        for (Dart d : geo[v]) a.push_back(edge_of(d));
        for (Dart d : q.plane.rotation(v)) r.push_back(edge_of(d));
        CHECK(oracles::cyclic_equal(a, r));
    }
}

TEST_CASE("spines of random quadrangulations") {
    Rng rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        auto pg = random_bipartite_plane(4 + pick(rng, 46), 0.3 + 0.7 * (pick(rng, 100) / 100.0), rng);
        auto q = augment_to_quadrangulation(pg);
        auto sd = derive_separating_decomposition(q, compute_2orientation(q));
        auto b = equatorial_spine(q, sd);
        CHECK(b.spine.front() == q.s);
        CHECK(b.spine.back() == q.t);
        auto pl = oracles::polyline_book(b);
        CHECK(verify_drawing(b.graph, pl.drawing).crossing_free());
        check_alternating(b, q, sd);
        auto geo = oracles::polyline_rotation(b);
        for (VertexId v = 0; v < q.plane.num_vertices(); ++v) {
            std::vector<EdgeId> a, r;
            for (Dart d : geo[v]) a.push_back(edge_of(d));
            for (Dart d : q.plane.rotation(v)) r.push_back(edge_of(d));
            CHECK(oracles::cyclic_equal(a, r));
        }
    }
}

TEST_CASE("stars") {
    auto k13 = planar_embed(star_graph(3));
    CHECK(is_star(k13.graph()));
    auto b = star_book(k13);
    CHECK(b.spine.front() == 0);
    std::vector<VertexId> leaves;
    for (Dart d : k13.rotation(0)) leaves.push_back(k13.head(d));
    CHECK(std::vector<VertexId>(b.spine.begin() + 1, b.spine.end()) == leaves);
    for (Page p : b.page) CHECK(p == Page::Upper);

    for (int k : {1, 3, 5}) {
        auto pg = planar_embed(star_graph(k));
        BipartiteTrace tr;
        auto c = bipartite_posh(pg, false, &tr);
        CHECK(tr.star);
        CHECK(c.plane.num_vertices() == k + 1);
        CHECK(check_one_sided(c.plane, c.order).ok());
        if (k + 1 >= 3) CHECK(oracles::literal_one_sided(c.plane, c.order.order) == 0);
        check_certificate_drawing(c, pg);
    }
    CHECK(!is_star(cycle_graph(4)));
    CHECK(!is_star(path_graph(4)));
    CHECK_THROWS_AS(star_book(cycle_plane(4)), PreconditionError);
}

TEST_CASE("named graphs end to end") {
    std::vector<PlaneGraph> cases = {cycle_plane(4),        cycle_plane(6),           grid_plane(3, 3),
                                     planar_embed(path_graph(5)), planar_embed(cube_graph()), pseudo_double_wheel(),
                                     planar_embed(make_graph(2, {{0, 1}})), planar_embed(MultiGraph(4))};
    for (const auto& pg : cases) {
        for (bool compact : {false, true}) {
            BipartiteTrace tr;
            auto c = bipartite_posh(pg, compact, &tr);
            CHECK(check_one_sided(c.plane, c.order).ok());
            CHECK(check_one_sided(c.plane, c.order.reversed()).ok());
            if (compact) CHECK(c.plane.num_vertices() == pg.num_vertices());
            if (!compact && tr.quadrangulation) CHECK(c.plane.num_vertices() == tr.quadrangulation->plane.num_vertices());
            check_certificate_drawing(c, pg);
        }
    }
    // the C4 certificate is C4 plus its spine chords
    auto c = bipartite_posh(cycle_plane(4));
    CHECK(c.plane.num_vertices() == 4);
    CHECK(c.plane.num_edges() == 6);
    CHECK(oracles::literal_one_sided(c.plane, c.order.order) == 0);
}

TEST_CASE("small certificates agree with the definition") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto pg = random_bipartite_plane(3 + pick(rng, 5), 0.7, rng);
        auto c = bipartite_posh(pg, true);
        if (!c.plane.graph().is_simple() || c.plane.num_vertices() < 3) continue;
        CHECK(oracles::literal_one_sided(c.plane, c.order.order) == 0);
        CHECK(oracles::literal_one_sided(c.plane, c.order.reversed().order) == 0);
    }
}

TEST_CASE("random bipartite plane graphs end to end") {
    Rng rng(20261015);
    for (int trial = 0; trial < 200; ++trial) {
        auto pg = random_bipartite_plane(2 + pick(rng, 49), 0.3 + 0.7 * (pick(rng, 100) / 100.0), rng);
        auto c = bipartite_posh(pg, trial % 2 == 1);
        CHECK(check_one_sided(c.plane, c.order.reversed()).ok());
        check_certificate_drawing(c, pg);
    }
}
