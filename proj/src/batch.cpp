#include "posh/batch.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "posh/bipartite.hpp"
#include "posh/errors.hpp"
#include "posh/generators.hpp"
#include "posh/io.hpp"
#include "posh/onebend.hpp"
#include "posh/subcubic.hpp"

namespace posh {

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["index"] = index;
    j["seed"] = seed;
    j["input_hash"] = input_hash;
    j["drawing_hash"] = drawing_hash;
    j["n"] = n;
    j["m"] = m;
    j["status"] = status;
    j["certified"] = certified;
    j["checks"] = checks;
    j["counters"] = counters;
    if (!error.empty()) j["error"] = error;
    if (millis) j["millis"] = *millis;
    return j;
}

nlohmann::json BatchResult::to_json() const {
    nlohmann::json j;
    j["command"] = spec.command;
    j["generator"] = spec.generator;
    j["count"] = spec.count;
    j["min_n"] = spec.min_n;
    j["max_n"] = spec.max_n;
    j["seed"] = spec.seed;
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    j["runs"] = nlohmann::json::array();
    for (const auto& r : runs) j["runs"].push_back(r.to_json());
    return j;
}

std::string BatchResult::dump() const { return to_json().dump(2) + "\n"; }

std::uint64_t instance_seed(std::uint64_t seed, int index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

PlaneGraph generate(const std::string& generator, int n, std::uint64_t seed) {
    Rng rng(seed);
    const double keep = 0.5 + 0.5 * (pick(rng, 101) / 100.0);
    if (generator == "planar") return random_planar(n, keep, rng);
    if (generator == "triangulation") return random_triangulation(n, rng);
    if (generator == "bipartite") return random_bipartite_plane(n, keep, rng);
    if (generator == "subcubic") return random_subcubic_plane(n, keep, rng);
    throw DomainError("unknown generator " + generator);
}

namespace {

std::string hash_of(const nlohmann::json& j) { return io::hex64(io::fnv1a(j.dump())); }

void run_embed(const PlaneGraph& pg, RunManifest& r) {
    const auto orders = one_sided_orders(pg, 1);
    r.checks["has_one_sided_order"] = !orders.empty();
    if (orders.empty()) {
        r.status = "skipped";
        return;
    }
    const auto chk = check_one_sided(pg, orders.front());
    const PointSet ps = build_hn(pg.num_vertices());
    const Drawing d = embed_on_hn(pg, pg.graph(), orders.front(), *chk.sides, ps);
    r.certified = d.certified && verify_drawing(pg.graph(), d).crossing_free();
    r.checks["certified"] = r.certified;
    r.counters["chain_size"] = pg.num_vertices();
    r.drawing_hash = hash_of(io::drawing_json(d));
}

void run_bipartite(const PlaneGraph& pg, RunManifest& r) {
    BipartiteTrace trace;
    const PoshCertificate c = bipartite_posh(pg, false, &trace);
    const CertifiedDrawing cd = draw_certificate(c, pg.graph());
    r.certified = cd.drawing.certified && verify_drawing(pg.graph(), cd.drawing).crossing_free();
    r.checks["certified"] = r.certified;
    r.checks["one_sided"] = check_one_sided(c.plane, c.order).ok();
    r.checks["reverse_one_sided"] = check_one_sided(c.plane, c.order.reversed()).ok();
    // vertex v_i sits on p_i or q_i of H_m
    const PointSet ps = build_hn(cd.chain_size);
    std::vector<int> column(c.plane.num_vertices());
    for (int j = 0; j < c.plane.num_vertices(); ++j) column[c.order.order[j]] = j + 1;
    bool on_columns = cd.chain_size == c.plane.num_vertices();
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
        const int i = column[c.vertex_of[v]];
        const PointRef ref = cd.points[v];
        on_columns = on_columns && ref.index == i && to_rational(ps.at(ref)) == *cd.drawing.placement[v];
    }
    r.checks["vertices_on_their_columns"] = on_columns;
    r.counters["chain_size"] = cd.chain_size;
    r.counters["augmented_vertices"] = c.plane.num_vertices() - pg.num_vertices();
    r.drawing_hash = hash_of(io::drawing_json(cd.drawing));
}

void run_subcubic(const PlaneGraph& pg, RunManifest& r) {
    SubcubicTrace t;
    const PoshCertificate c = subcubic_posh(pg.graph(), &t);
    const CertifiedDrawing cd = draw_certificate(c, pg.graph());
    r.certified = cd.drawing.certified && verify_drawing(pg.graph(), cd.drawing).crossing_free();
    r.checks["certified"] = r.certified;
    r.checks["no_separating_triangles"] = t.separating_triangles_after == 0;
    r.checks["no_covered_separating_quads"] = t.covered_quads_after == 0;
    r.checks["bipartite_after_contraction"] = t.contraction_bipartite;
    r.checks["degree_four_after_leaves"] = t.degree_four_after_leaves;
    r.checks["one_sided_after_each_split"] = t.one_sided_after_each_split;
    r.counters["chain_size"] = cd.chain_size;
    r.counters["matching"] = static_cast<long long>(t.repair.matching.edges.size());
    r.counters["triangle_moves"] = t.repair.triangle_moves;
    r.counters["quad_reflections"] = t.repair.quad_reflections;
    r.counters["matching_exchanges"] = t.repair.matching_exchanges;
    r.counters["leaves"] = t.leaves;
    for (const auto& a : t.script) {
        r.counters["split_" + to_string(a.kind)]++;
        if (a.searched) r.counters["split_searched"]++;
        if (a.rotation_relaxed) r.counters["split_relaxed"]++;
    }
    r.drawing_hash = hash_of(io::drawing_json(cd.drawing));
}

void run_one_bend(const PlaneGraph& pg, RunManifest& r) {
    const MultiGraph& g = pg.graph();
    const int n = g.num_vertices();
    const OneBendDrawing d = one_bend_drawing(g);
    r.certified = d.drawing.certified && verify_drawing(g, d.drawing).crossing_free();
    r.checks["certified"] = r.certified;
    r.checks["subdivisions_within_n_minus_2"] = static_cast<int>(d.plan.edges.size()) <= std::max(0, n - 2);
    r.checks["chain_within_budget"] = d.chain_size <= d.chain_budget;
    // every vertex and bend is a point of H_{2n-2}
    const PointSet ps = build_hn(d.chain_budget);
    bool on_points = true;
    for (VertexId v = 0; v < n; ++v)
        on_points = on_points && d.vertex_points[v].index <= d.chain_budget &&
                    to_rational(ps.at(d.vertex_points[v])) == *d.drawing.placement[v];
    bool one_bend = true;
    for (const auto& [e, pts] : d.drawing.bends) {
        one_bend = one_bend && pts.size() == 1;
        const PointRef ref = d.bend_points.at(e);
        on_points = on_points && ref.index <= d.chain_budget && to_rational(ps.at(ref)) == pts.front();
    }
    r.checks["points_on_chain"] = on_points;
    r.checks["at_most_one_bend"] = one_bend;
    r.counters["subdivisions"] = static_cast<long long>(d.plan.edges.size());
    r.counters["chain_size"] = d.chain_size;
    r.counters["point_budget"] = d.point_budget;
    r.drawing_hash = hash_of(io::drawing_json(d.drawing));
}

}  // namespace

RunManifest run_instance(const std::string& command, const PlaneGraph& pg, bool timings) {
    if (command != "embed" && command != "embed-bipartite" && command != "embed-subcubic" && command != "one-bend")
        throw DomainError("unknown batch command " + command);
    RunManifest r;
    r.command = command;
    r.n = pg.num_vertices();
    r.m = pg.num_edges();
    r.input_hash = hash_of(io::graph_json(pg));
    const auto start = std::chrono::steady_clock::now();
    try {
        if (command == "embed")
            run_embed(pg, r);
        else if (command == "embed-bipartite")
            run_bipartite(pg, r);
        else if (command == "embed-subcubic")
            run_subcubic(pg, r);
        else
            run_one_bend(pg, r);
    } catch (const std::exception& e) {
        r.error = e.what();
        r.certified = false;
    }
    if (r.status.empty()) {
        bool all = r.certified && r.error.empty();
        for (const auto& [name, ok] : r.checks) all = all && ok;
        r.status = all ? "pass" : "fail";
    }
    if (timings)
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

BatchResult run_batch(const BatchSpec& spec) {
    if (spec.count < 0 || spec.min_n < 1 || spec.max_n < spec.min_n) throw DomainError("batch: bad count or size range");
    generate(spec.generator, std::max(spec.min_n, 4), 0);  // rejects unknown generators early
    BatchResult out;
    out.spec = spec;
    out.runs.resize(spec.count);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < spec.count; i = next++) {
            const std::uint64_t s = instance_seed(spec.seed, i);
            Rng rng(s);
            const int n = spec.min_n + pick(rng, spec.max_n - spec.min_n + 1);
            RunManifest r;
            try {
                r = run_instance(spec.command, generate(spec.generator, n, rng()), spec.timings);
            } catch (const DomainError& e) {
                r.command = spec.command;
                r.status = "fail";
                r.error = e.what();
            }
            r.index = i;
            r.seed = s;
            out.runs[i] = std::move(r);
        }
    };
    const int threads = std::max(1, std::min(spec.threads, spec.count));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    for (const auto& r : out.runs) {
        if (r.status == "pass") ++out.passed;
        else if (r.status == "skipped") ++out.skipped;
        else ++out.failed;
    }
    return out;
}

}  // namespace posh
