#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "posh/errors.hpp"
#include "posh/planarity.hpp"

using namespace posh;
using namespace fixtures;

namespace {

int face_degree_sum(const FaceSet& fs) {
    int s = 0;
    for (const auto& w : fs.walks) s += static_cast<int>(w.size());
    return s;
}

Drawing place(const std::vector<std::pair<long, long>>& xy) {
    Drawing d;
    for (auto [x, y] : xy) d.placement.push_back(RatPoint{Rational(x), Rational(y)});
    return d;
}

}  // namespace

TEST_CASE("faces of small plane graphs") {
    auto k4 = k4_plane();
    auto fs = faces(k4);
    CHECK(fs.walks.size() == 4);
    for (const auto& w : fs.walks) CHECK(w.size() == 3);
    CHECK(face_degree_sum(fs) == 2 * k4.num_edges());

    auto c4 = faces(cycle_plane(4));
    REQUIRE(c4.walks.size() == 2);
    CHECK(c4.walks[0].size() == 4);
    CHECK(c4.walks[1].size() == 4);

    PlaneGraph edge(make_graph(2, {{0, 1}}), {{0}, {1}});
    auto fe = faces(edge);
    REQUIRE(fe.walks.size() == 1);
    CHECK(fe.walks[0].size() == 2);
}

TEST_CASE("malformed rotations are rejected") {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(PlaneGraph(g, {{0}, {1, 2}, {3}}), StructuralError);  // vertex 0 misses dart 5
    CHECK_THROWS_AS(PlaneGraph(g, {{0, 5}, {1, 2}, {4, 2}}), StructuralError);
    // K4 with a twisted rotation: well formed but not planar, so Euler fails
    auto k4 = k4_plane();
    std::vector<std::vector<Dart>> rot;
    for (VertexId v = 0; v < 4; ++v) rot.emplace_back(k4.rotation(v).begin(), k4.rotation(v).end());
    std::swap(rot[3][0], rot[3][1]);
    PlaneGraph twisted(k4.graph(), rot);
    CHECK_THROWS_AS(faces(twisted), StructuralError);
}

TEST_CASE("Euler with several components and isolated vertices") {
    auto g = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    PlaneGraph pg = planar_embed(g);
    auto fs = faces(pg);
    CHECK(fs.walks.size() == 3);
    int C = 0;
    g.components(&C);
    CHECK(g.num_vertices() - g.num_edges() + euler_face_count(pg, fs) == 1 + C);
}

TEST_CASE("planar_embed") {
    auto pg = planar_embed(complete_graph(4));
    CHECK(faces(pg).walks.size() == 4);
    CHECK_THROWS_AS(planar_embed(complete_graph(5)), NonPlanarError);
    try {
        planar_embed(petersen_graph());
        FAIL("petersen accepted");
    } catch (const NonPlanarError& e) {
        CHECK(!e.witness.empty());
    }
    // K3,3
    MultiGraph k33(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
    CHECK_THROWS_AS(planar_embed(k33), NonPlanarError);
}

TEST_CASE("re-embedding keeps V, E and Euler") {
    auto grid = grid_plane(4, 5);
    auto again = planar_embed(grid.graph());
    CHECK(again.num_vertices() == grid.num_vertices());
    CHECK(again.num_edges() == grid.num_edges());
    auto fs = faces(again);
    CHECK(face_degree_sum(fs) == 2 * again.num_edges());
    CHECK(again.num_vertices() - again.num_edges() + static_cast<int>(fs.walks.size()) == 2);
}

TEST_CASE("mirror keeps faces reversed") {
    auto k4 = k4_plane();
    auto m = k4.mirrored();
    auto a = faces(k4), b = faces(m);
    CHECK(a.walks.size() == b.walks.size());
    // the outer face of the mirror is traced along the twins
    CHECK(b.walks[b.outer].size() == a.walks[a.outer].size());
}

TEST_CASE("two_coloring") {
    auto c4 = two_coloring(cycle_graph(4));
    CHECK(c4.black == std::vector<VertexId>{0, 2});
    CHECK(c4.white == std::vector<VertexId>{1, 3});
    try {
        two_coloring(cycle_graph(3));
        FAIL("triangle accepted");
    } catch (const NotBipartiteError& e) {
        CHECK(e.odd_cycle.size() == 3);
    }
    auto star = two_coloring(star_graph(5));
    CHECK(star.black == std::vector<VertexId>{0});
    CHECK(star.white.size() == 5);
    // odd cycle witness is a closed walk of odd length using graph edges
    auto g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    try {
        two_coloring(g);
        FAIL("odd cycle accepted");
    } catch (const NotBipartiteError& e) {
        CHECK(e.odd_cycle.size() % 2 == 1);
        for (size_t i = 0; i < e.odd_cycle.size(); ++i)
            CHECK(g.find_edge(e.odd_cycle[i], e.odd_cycle[(i + 1) % e.odd_cycle.size()]).has_value());
    }
}

TEST_CASE("verify_drawing basics") {
    auto k4 = complete_graph(4);
    auto convex = verify_drawing(k4, place({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(convex.crossings.size() == 1);

    auto nested = verify_drawing(k4, place({{0, 0}, {4, 0}, {2, 4}, {2, 1}}));
    CHECK(nested.crossing_free());

    // two disjoint edges on one line overlapping
    auto two = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(verify_drawing(two, place({{0, 0}, {3, 0}, {1, 0}, {5, 0}})).crossings.size() == 1);
    // collinear but only touching at a shared endpoint is fine
    auto path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(verify_drawing(path, place({{0, 0}, {1, 0}, {2, 0}})).crossing_free());
    // an edge ending on the interior of another
    auto through = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(!verify_drawing(through, place({{0, 0}, {2, 0}, {1, 0}, {1, 5}})).crossing_free());
    // unplaced vertex
    Drawing partial = place({{0, 0}});
    CHECK_THROWS_AS(verify_drawing(path, partial), StructuralError);
    // coinciding points
    CHECK(!verify_drawing(make_graph(2, {}), place({{1, 1}, {1, 1}})).crossing_free());
}

TEST_CASE("verify_drawing handles bends and rationals") {
    auto g = make_graph(4, {{0, 1}, {2, 3}});
    Drawing d = place({{0, 0}, {4, 0}, {2, -1}, {2, 3}});
    CHECK(!verify_drawing(g, d).crossing_free());
    d.bends[1] = {RatPoint{Rational(5), Rational(1, 3)}};
    // 2 -> bend -> 3 goes around the right end of edge 0
    auto rep = verify_drawing(g, d);
    CHECK(rep.segments == 3);
    CHECK(rep.crossing_free());
    d.bends[1] = {RatPoint{Rational(7, 2), Rational(0)}};  // bend on edge 0
    CHECK(!verify_drawing(g, d).crossing_free());
}

TEST_CASE("verify_drawing is invariant under edge order") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 7;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.push_back({u, v});
        std::vector<std::pair<long, long>> xy;
        for (int v = 0; v < n; ++v) xy.push_back({static_cast<long>(rng() % 9), static_cast<long>(rng() % 9)});
        Drawing d = place(xy);
        auto g1 = make_graph(n, edges);
        auto shuffled = edges;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& e : shuffled)
            if (rng() % 2) std::swap(e.first, e.second);
        auto g2 = make_graph(n, shuffled);
        auto r1 = verify_drawing(g1, d), r2 = verify_drawing(g2, d);
        CHECK(r1.crossings.size() == r2.crossings.size());
        CHECK(r1.coincident.size() == r2.coincident.size());
    }
}

TEST_CASE("big coordinates take the exact path") {
    // same configuration scaled by 3^80
    BigInt s = boost::multiprecision::pow(BigInt(3), 80);
    auto g = complete_graph(4);
    Drawing d;
    for (auto [x, y] : std::vector<std::pair<long, long>>{{0, 0}, {2, 0}, {2, 2}, {0, 2}})
        d.placement.push_back(RatPoint{Rational(BigInt(x) * s), Rational(BigInt(y) * s)});
    CHECK(verify_drawing(g, d).crossings.size() == 1);
    d.placement[3] = RatPoint{Rational(s), Rational(s, 2)};
    CHECK(verify_drawing(g, d).crossing_free());
}
