#include <set>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posh/embedder.hpp"
#include "posh/errors.hpp"
#include "posh/generators.hpp"
#include "posh/planarity.hpp"

using namespace posh;
using namespace fixtures;

namespace {

std::vector<IntPoint> points_of(const Drawing& d) {
    std::vector<IntPoint> out;
    for (const auto& p : d.placement) out.push_back({numerator(p->x), numerator(p->y)});
    return out;
}

// runs the checker and, when it accepts, the embedder; returns the verdict
bool accept_and_draw(const PlaneGraph& pg, const std::vector<VertexId>& order) {
    HamiltonianOrder ho{order};
    auto chk = check_one_sided(pg, ho);
    if (!chk.ok()) return false;
    const int n = pg.num_vertices();
    auto ps = build_hn(std::max(n, 2));
    Drawing d = embed_on_hn(pg, pg.graph(), ho, *chk.sides, ps);
    CHECK(d.certified);
    auto pts = points_of(d);
    CHECK(oracles::straight_line_plane(pg.graph(), pts));
    CHECK(oracles::realizes(pg, pts));
    for (int j = 0; j < n; ++j) {
        VertexId v = order[j];
        bool upper = chk.sides->inside[v] != 0;
        CHECK(pts[v] == (upper ? ps.p(j + 1) : ps.q(j + 1)));
    }
    return true;
}

}  // namespace

TEST_CASE("single edge") {
    auto pg = planar_embed(make_graph(2, {{0, 1}}));
    HamiltonianOrder ho{{0, 1}};
    auto chk = check_one_sided(pg, ho);
    REQUIRE(chk.ok());
    auto d = embed_on_hn(pg, pg.graph(), ho, *chk.sides, build_hn(2));
    CHECK(d.certified);
    CHECK(*d.placement[0] == RatPoint{1, 0});
    CHECK(*d.placement[1] == RatPoint{2, 0});
}

TEST_CASE("cycles are one-sided with nothing inside") {
    for (int n = 3; n <= 12; ++n) {
        auto pg = cycle_plane(n);
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto chk = check_one_sided(pg, {order});
        REQUIRE(chk.ok());
        CHECK(chk.sides->inner_vertices().empty());
        CHECK(accept_and_draw(pg, order));
    }
}

// brute force over every placement v_i -> p_i or q_i: plane and with the
// rotation system of pg (or its mirror)
static bool realizable_on_hn(const PlaneGraph& pg, const std::vector<VertexId>& order) {
    const int n = static_cast<int>(order.size());
    auto h = build_hn(n);
    for (int mask = 0; mask < (1 << (n - 2)); ++mask) {
        std::vector<IntPoint> pts(n);
        for (int j = 0; j < n; ++j) pts[order[j]] = (j < 2 || !(mask >> (j - 2) & 1)) ? h.p(j + 1) : h.q(j + 1);
        if (oracles::straight_line_plane(pg.graph(), pts) && oracles::realizes(pg, pts)) return true;
    }
    return false;
}

// degree-3 vertices can never break the rotation condition, so every order of
// K4 whose closing edge is outer is one-sided
TEST_CASE("K4: every order is one-sided and drawn") {
    for (auto pg : {k4_plane(), k4_plane().mirrored()}) {
        int orders = 0;
        oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
            ++orders;
            CHECK(literal == 0);
            CHECK(accept_and_draw(pg, order));
            CHECK(realizable_on_hn(pg, order));
        });
        // 3 outer edges, 2 directions, 2 Hamiltonian cycles through each
        CHECK(orders == 12);
    }
}

// cycle 0..4 with chords 0-3 inside and 1-3 outside; both are back edges of v_4
static PlaneGraph straddle_plane() {
    auto g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {3, 0}, {1, 3}});
    return plane_from_coords(g, {{-2, 4}, {0, 0}, {2, 1}, {4, 0}, {6, 4}});
}

TEST_CASE("back edges on both sides of v_4") {
    auto pg = straddle_plane();
    auto chk = check_one_sided(pg, {{0, 1, 2, 3, 4}});
    CHECK(!chk.ok());
    CHECK(chk.violation_step == 4);
    CHECK(oracles::literal_one_sided(pg, {0, 1, 2, 3, 4}) == 4);
    CHECK(!realizable_on_hn(pg, {0, 1, 2, 3, 4}));
}

TEST_CASE("checker matches the definition and H_n realizability") {
    Rng rng(99);
    int accepted = 0, rejected = 0;
    for (auto pg : {straddle_plane(), straddle_plane().mirrored(), k4_plane()}) {
        oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
            auto chk = check_one_sided(pg, {order});
            CHECK(chk.ok() == (literal == 0));
            if (literal > 0) CHECK(chk.violation_step == literal);
            CHECK(realizable_on_hn(pg, order) == (literal == 0));
            (literal == 0 ? accepted : rejected)++;
        });
    }
    for (int trial = 0; trial < 40; ++trial) {
        auto pg = random_planar(5 + pick(rng, 3), 0.85, rng);
        oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
            auto chk = check_one_sided(pg, {order});
            CHECK(chk.ok() == (literal == 0));
            if (literal > 0) CHECK(chk.violation_step == literal);
            CHECK(realizable_on_hn(pg, order) == (literal == 0));
            (literal == 0 ? accepted : rejected)++;
        });
    }
    CHECK(accepted > 0);
    CHECK(rejected > 0);
}

TEST_CASE("preconditions") {
    auto pg = k4_plane();
    CHECK_THROWS_AS(check_one_sided(pg, {{0, 1, 2}}), PreconditionError);
    CHECK_THROWS_AS(check_one_sided(pg, {{0, 1, 1, 2}}), PreconditionError);
    auto c = cycle_plane(5);
    CHECK_THROWS_AS(check_one_sided(c, {{0, 2, 1, 3, 4}}), PreconditionError);
    // special edge off the outer face: vertex 3 sits inside, so 3-0 is inner
    CHECK_THROWS_AS(check_one_sided(pg, {{0, 1, 2, 3}}), PreconditionError);
    CHECK_NOTHROW(check_one_sided(pg, {{0, 3, 1, 2}}));
}

TEST_CASE("random small plane graphs: checker, embedding and subgraph closure") {
    Rng rng(2024);
    int drawn = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + pick(rng, 4);
        auto pg = random_planar(n, 0.8, rng);
        oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
            HamiltonianOrder ho{order};
            auto chk = check_one_sided(pg, ho);
            REQUIRE(chk.ok() == (literal == 0));
            if (!chk.ok()) return;
            if (pick(rng, 8) != 0) return;  // sample the accepted orders
            auto ps = build_hn(n);
            auto d = embed_on_hn(pg, pg.graph(), ho, *chk.sides, ps, {true, true});
            CHECK(d.certified);
            CHECK(oracles::straight_line_plane(pg.graph(), points_of(d)));
            // a spanning subgraph keeps the placement and stays plane
            std::vector<EdgeId> keep;
            for (EdgeId e = 0; e < pg.num_edges(); ++e)
                if (pick(rng, 2)) keep.push_back(e);
            auto sub = edge_subgraph(pg.graph(), keep);
            auto ds = embed_on_hn(pg, sub, ho, *chk.sides, ps);
            CHECK(ds.placement == d.placement);
            CHECK(verify_drawing(sub, ds).crossing_free());
            ++drawn;
        });
    }
    CHECK(drawn > 80);
}

TEST_CASE("one-sided orders by search match the permutation sweep") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto pg = random_planar(3 + pick(rng, 5), 0.75, rng);
        std::set<std::vector<VertexId>> want, got;
        oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
            if (literal == 0) want.insert(order);
        });
        for (const auto& ho : one_sided_orders(pg)) got.insert(ho.order);
        CHECK(got == want);
        if (!want.empty()) CHECK(one_sided_orders(pg, 1).size() == 1);
    }
}

TEST_CASE("wrong side assignment is caught") {
    auto pg = k4_plane();
    bool caught = false;
    oracles::for_each_order(pg, [&](const std::vector<VertexId>& order, int literal) {
        if (literal != 0 || caught) return;
        HamiltonianOrder ho{order};
        auto chk = check_one_sided(pg, ho);
        auto bad = *chk.sides;
        for (auto& x : bad.inside) x = !x;
        try {
            embed_on_hn(pg, pg.graph(), ho, bad, build_hn(4));
        } catch (const InvariantError& e) {
            caught = std::string(e.what()).find("step") != std::string::npos;
        }
    });
    CHECK(caught);
}
