// posh: command-line front end for the chain embeddings.
// Exit codes: 0 success, 1 certification failure (or nothing found), 2 bad input.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "posh/batch.hpp"
#include "posh/bipartite.hpp"
#include "posh/errors.hpp"
#include "posh/io.hpp"
#include "posh/onebend.hpp"
#include "posh/planarity.hpp"
#include "posh/subcubic.hpp"
#include "posh/svg.hpp"
#include "posh/twotree.hpp"

using namespace posh;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Outputs {
    std::string out = "-";
    std::string svg;
    std::string trace;
    bool force = false;
};

void add_outputs(CLI::App* cmd, Outputs& o, bool with_trace) {
    cmd->add_option("--out", o.out, "drawing JSON (- for stdout)");
    cmd->add_option("--svg", o.svg, "SVG rendering");
    if (with_trace) cmd->add_option("--trace", o.trace, "pipeline trace JSON");
    cmd->add_flag("--force", o.force, "write the SVG even if certification failed");
}

PlaneGraph plane_of(const io::GraphDocument& doc) { return doc.plane ? *doc.plane : planar_embed(doc.graph); }

json verdict_json(const CertifiedReport& r) {
    json j;
    j["segments"] = r.segments;
    j["crossings"] = json::array();
    for (const auto& [a, b] : r.crossings) j["crossings"].push_back({a.edge, a.segment, b.edge, b.segment});
    j["coincident"] = r.coincident;
    j["crossing_free"] = r.crossing_free();
    return j;
}

// Re-verifies d against g and writes the drawing (with its verdict) and the SVG.
// Returns whether the drawing is certified.
bool emit_drawing(const MultiGraph& g, Drawing d, const Outputs& o, SvgOptions svg) {
    const CertifiedReport report = verify_drawing(g, d);
    d.certified = d.certified && report.crossing_free();
    json doc = io::drawing_json(d);
    doc["verification"] = verdict_json(report);
    io::save_json(o.out, doc);
    if (!o.svg.empty() && (d.certified || o.force)) {
        svg.force = o.force;
        io::save_text(o.svg, render_svg(g, d, svg));
    }
    if (!d.certified) std::cerr << "drawing is not certified crossing-free\n";
    return d.certified;
}

std::vector<char> inside_by_input(const PoshCertificate& c, int n) {
    std::vector<char> inside(n);
    for (VertexId v = 0; v < n; ++v) inside[v] = c.sides.inside[c.vertex_of[v]];
    return inside;
}

json certificate_json(const PoshCertificate& c) {
    json j;
    j["order"] = c.order.order;
    j["inside"] = c.sides.inside;
    j["vertex_of"] = c.vertex_of;
    j["graph"] = io::graph_json(c.plane);
    return j;
}

// ---- subcommands ----

int gen_pointset(int n, int alpha, const std::string& out, const std::string& svg) {
    const PointSet ps = PointSet::exploding(n, alpha);
    io::save_json(out, io::pointset_json(ps));
    if (!svg.empty()) io::save_text(svg, render_pointset_svg(ps));
    return kOk;
}

int verify_ordertype(std::optional<int> n, int alpha, const std::string& pointset) {
    const auto start = std::chrono::steady_clock::now();
    const PointSet ps = pointset.empty() ? PointSet::exploding(n.value_or(20), alpha) : io::read_pointset(io::load_json(pointset));
    const OrderTypeReport rep = verify_order_type(ps);
    json j;
    j["n"] = ps.n();
    j["alpha"] = ps.alpha();
    j["pairs_checked"] = rep.pairs_checked;
    j["violations"] = rep.violations.size();
    j["examples"] = json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
        const auto& v = rep.violations[i];
        j["examples"].push_back({v.a.name(), v.b.name(), v.c.name(), v.predicted_right ? "right" : "not right"});
    }
    j["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << j.dump(2) << "\n";
    return rep.ok() ? kOk : kFailed;
}

int embed(const std::string& graph, const std::string& order, const std::string& pointset, const Outputs& o) {
    const auto doc = io::read_graph(io::load_json(graph));
    const PlaneGraph pg = plane_of(doc);
    HamiltonianOrder ho;
    if (!order.empty()) {
        ho.order = io::read_order(io::load_json(order));
    } else {
        auto found = one_sided_orders(pg, 1);
        if (found.empty()) {
            std::cerr << "no one-sided Hamiltonian cycle\n";
            return kFailed;
        }
        ho = found.front();
    }
    const auto chk = check_one_sided(pg, ho);
    if (!chk.ok()) {
        std::cerr << "order is not one-sided at step " << chk.violation_step << ": " << chk.detail << "\n";
        return kBadInput;
    }
    const PointSet ps = pointset.empty() ? build_hn(pg.num_vertices()) : io::read_pointset(io::load_json(pointset));
    if (ps.n() < pg.num_vertices()) throw DomainError("point set has fewer columns than the graph has vertices");
    const Drawing d = embed_on_hn(pg, pg.graph(), ho, *chk.sides, ps);
    SvgOptions svg;
    svg.inside = chk.sides->inside;
    svg.points = &ps;
    return emit_drawing(pg.graph(), d, o, svg) ? kOk : kFailed;
}

int embed_bipartite(const std::string& graph, const Outputs& o) {
    const auto doc = io::read_graph(io::load_json(graph));
    const PlaneGraph pg = plane_of(doc);
    BipartiteTrace trace;
    const PoshCertificate c = bipartite_posh(pg, false, &trace);
    const CertifiedDrawing cd = draw_certificate(c, pg.graph());
    if (!o.trace.empty()) {
        json t;
        t["star"] = trace.star;
        if (trace.quadrangulation) {
            const auto& q = *trace.quadrangulation;
            t["quadrangulation"] = {{"graph", io::graph_json(q.plane)}, {"color", q.color}, {"s", q.s}, {"t", q.t}};
        }
        if (trace.orientation) t["orientation"] = {{"head", trace.orientation->head}};
        if (trace.decomposition) {
            json colors = json::array();
            for (TreeColor k : trace.decomposition->color) colors.push_back(k == TreeColor::Red ? "red" : "blue");
            t["decomposition"] = {{"color", colors}};
        }
        t["spine"] = io::book_json(trace.spine);
        t["certificate"] = certificate_json(c);
        t["chain_size"] = cd.chain_size;
        io::save_json(o.trace, t);
    }
    const PointSet ps = build_hn(cd.chain_size);
    SvgOptions svg;
    svg.inside = inside_by_input(c, pg.num_vertices());
    svg.points = &ps;
    // input edges keep their ids inside the quadrangulation
    if (trace.decomposition)
        for (EdgeId e = 0; e < pg.num_edges(); ++e)
            svg.tones.push_back(trace.decomposition->color[e] == TreeColor::Red ? EdgeTone::Red : EdgeTone::Blue);
    return emit_drawing(pg.graph(), cd.drawing, o, svg) ? kOk : kFailed;
}

int embed_subcubic(const std::string& graph, const Outputs& o) {
    const auto doc = io::read_graph(io::load_json(graph));
    const MultiGraph& g = doc.graph;
    SubcubicTrace t;
    const PoshCertificate c = subcubic_posh(g, &t);
    const CertifiedDrawing cd = draw_certificate(c, g);
    if (!o.trace.empty()) {
        json j;
        j["cut"] = t.cut.side;
        j["initial_matching"] = t.initial_matching.edges;
        j["repair"] = {{"matching", t.repair.matching.edges},
                       {"triangle_moves", t.repair.triangle_moves},
                       {"quad_reflections", t.repair.quad_reflections},
                       {"matching_exchanges", t.repair.matching_exchanges},
                       {"outer_face_changes", t.repair.outer_face_changes},
                       {"separating_triangles_before", t.repair.separating_triangles_before},
                       {"covered_quads_before", t.repair.covered_quads_before},
                       {"graph", io::graph_json(t.repair.plane)}};
        j["separating_triangles_after"] = t.separating_triangles_after;
        j["covered_quads_after"] = t.covered_quads_after;
        j["contraction"] = {{"graph", io::graph_json(t.contraction.multigraph)},
                            {"image", t.contraction.image},
                            {"kept", t.contraction.kept},
                            {"matched", t.contraction.matched},
                            {"bipartite", t.contraction_bipartite}};
        j["spine"] = io::book_json(t.bipartite_layout);
        j["leaves"] = t.leaves;
        j["degree_four_after_leaves"] = t.degree_four_after_leaves;
        j["script"] = json::array();
        for (const auto& a : t.script)
            j["script"].push_back({{"kind", to_string(a.kind)},
                                   {"vertices", a.vertices},
                                   {"searched", a.searched},
                                   {"rotation_relaxed", a.rotation_relaxed}});
        j["one_sided_after_each_split"] = t.one_sided_after_each_split;
        j["final_layout"] = io::book_json(t.final_layout);
        j["certificate"] = certificate_json(c);
        io::save_json(o.trace, j);
    }
    const PointSet ps = build_hn(cd.chain_size);
    SvgOptions svg;
    svg.inside = inside_by_input(c, g.num_vertices());
    svg.points = &ps;
    svg.tones.assign(g.num_edges(), EdgeTone::Plain);
    for (EdgeId e : t.repair.matching.edges) svg.tones[e] = EdgeTone::Red;
    return emit_drawing(g, cd.drawing, o, svg) ? kOk : kFailed;
}

int one_bend(const std::string& graph, const Outputs& o) {
    const auto doc = io::read_graph(io::load_json(graph));
    const MultiGraph& g = doc.graph;
    const OneBendDrawing d = one_bend_drawing(g);
    std::cerr << d.plan.edges.size() << " subdivided edges, chain H_" << d.chain_size << " (budget H_"
              << d.chain_budget << ", " << d.point_budget << " points)\n";
    const PointSet ps = build_hn(d.chain_size);
    SvgOptions svg;
    svg.points = &ps;
    svg.tones.assign(g.num_edges(), EdgeTone::Plain);
    for (EdgeId e : d.plan.edges) svg.tones[e] = EdgeTone::Red;
    return emit_drawing(g, d.drawing, o, svg) ? kOk : kFailed;
}

json with_stacking(const TwoTree& tt) {
    json j = io::graph_json(tt.graph());
    j["stacking"] = tt.parents();
    return j;
}

json audit_json(const CounterexampleAudit& a) {
    return {{"vertices", a.vertices},
            {"edges", a.edges},
            {"base_stack", a.base_stack},
            {"level_edges", a.level_edges},
            {"level_stacks", a.level_stacks},
            {"uniform", a.uniform},
            {"middle_premise_base", a.middle_premise_base},
            {"middle_premise_children", a.middle_premise_children},
            {"forced_left_base", a.forced_left_base},
            {"forced_left_child", a.forced_left_child}};
}

int twotree(bool counterexample, const std::vector<EdgeId>& parents, bool audit, const std::string& out) {
    if (counterexample == !parents.empty()) throw DomainError("give exactly one of --counterexample and --parents");
    const TwoTree tt = counterexample ? build_counterexample() : TwoTree(parents);
    if (!out.empty()) io::save_json(out, with_stacking(tt));
    if (audit) std::cout << audit_json(audit_counterexample(tt)).dump(2) << "\n";
    return kOk;
}

int brute_posh(const std::string& graph, std::int64_t budget, const std::string& out) {
    const auto doc = io::read_graph(io::load_json(graph));
    const SearchResult r = brute_force_posh(doc.graph, budget);
    json j;
    j["status"] = to_string(r.status);
    j["nodes"] = r.nodes;
    int code = r.status == SearchStatus::Found ? kOk : kFailed;
    if (r.layout) {
        j["layout"] = io::book_json(*r.layout);
        if (doc.stacking) {
            const TwoTree tt(*doc.stacking);
            bool same = tt.graph().num_vertices() == doc.graph.num_vertices() &&
                        tt.graph().num_edges() == doc.graph.num_edges();
            for (EdgeId e = 0; same && e < doc.graph.num_edges(); ++e) {
                const auto& [a, b] = std::pair{tt.graph().edge(e), doc.graph.edge(e)};
                same = std::minmax(a.u, a.v) == std::minmax(b.u, b.v);
            }
            if (!same) throw DomainError("stacking does not match the edge list (edge 2k-3 joins k to its parent's first end)");
            const ClaimReport claims = check_claims(tt, *r.layout);
            j["claims"] = {{"edges_checked", claims.edges_checked}, {"violations", claims.violations.size()}};
            if (!claims.ok()) code = kFailed;
        }
        if (!out.empty()) io::save_json(out, io::book_json(*r.layout));
    }
    std::cout << j.dump(2) << "\n";
    return code;
}

int gen_2trees(int n, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const auto trees = enumerate_two_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const std::string name = "n" + std::to_string(n) + "_" + std::to_string(i) + ".json";
        io::save_json((std::filesystem::path(dir) / name).string(), with_stacking(trees[i]));
    }
    std::cout << trees.size() << " 2-trees on " << n << " vertices\n";
    return kOk;
}

int batch(BatchSpec spec, const std::string& out) {
    if (const char* env = std::getenv("POSH_SEED")) {
        try {
            spec.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("POSH_SEED is not a number: ") + env);
        }
    }
    if (spec.generator.empty())
        spec.generator = spec.command == "embed-bipartite" ? "bipartite"
                         : spec.command == "embed-subcubic" ? "subcubic"
                                                            : "planar";
    const BatchResult r = run_batch(spec);
    io::save_text(out, r.dump());
    std::cerr << spec.command << ": " << r.passed << " passed, " << r.failed << " failed, " << r.skipped
              << " skipped\n";
    return r.failed == 0 ? kOk : kFailed;
}

int render(const std::string& graph, const std::string& drawing, const std::string& pointset, bool force,
           const std::string& out) {
    std::optional<PointSet> ps;
    if (!pointset.empty()) ps = io::read_pointset(io::load_json(pointset));
    if (graph.empty()) {
        if (!ps) throw DomainError("render needs --graph and --drawing, or --pointset");
        io::save_text(out, render_pointset_svg(*ps));
        return kOk;
    }
    const auto doc = io::read_graph(io::load_json(graph));
    Drawing d = io::read_drawing(io::load_json(drawing));
    // the flag in the file is not trusted
    d.certified = d.certified && verify_drawing(doc.graph, d).crossing_free();
    if (!d.certified && !force) {
        std::cerr << "drawing is not certified crossing-free (use --force)\n";
        return kFailed;
    }
    SvgOptions opt;
    opt.force = force;
    if (ps) opt.points = &*ps;
    io::save_text(out, render_svg(doc.graph, d, opt));
    return d.certified ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Straight-line drawings on the exploding double chain"};
    app.require_subcommand(1);
    std::function<int()> run;

    int n = 0, alpha = 3;
    std::string out = "-", svg, graph, order, pointset, drawing;
    Outputs outs;

    auto* gp = app.add_subcommand("gen-pointset", "write the chain H_n");
    gp->add_option("--n", n, "columns")->required()->check(CLI::Range(2, 100000));
    gp->add_option("--alpha", alpha, "growth base")->check(CLI::Range(3, 1 << 20));
    gp->add_option("--out", out);
    gp->add_option("--svg", svg);
    gp->callback([&] { run = [&] { return gen_pointset(n, alpha, out, svg); }; });

    std::optional<int> vn;
    auto* vo = app.add_subcommand("verify-ordertype", "check the sidedness case formula");
    vo->add_option("--n", vn)->check(CLI::Range(2, 100000));
    vo->add_option("--alpha", alpha)->check(CLI::Range(3, 1 << 20));
    vo->add_option("--pointset", pointset, "check a point set file instead");
    vo->callback([&] { run = [&] { return verify_ordertype(vn, alpha, pointset); }; });

    auto* em = app.add_subcommand("embed", "embed along a one-sided Hamiltonian cycle");
    em->add_option("--graph", graph)->required();
    em->add_option("--order", order, "spine order; searched for when omitted");
    em->add_option("--pointset", pointset, "defaults to H_n");
    add_outputs(em, outs, false);
    em->callback([&] { run = [&] { return embed(graph, order, pointset, outs); }; });

    auto* eb = app.add_subcommand("embed-bipartite", "bipartite plane graph pipeline");
    eb->add_option("--graph", graph)->required();
    add_outputs(eb, outs, true);
    eb->callback([&] { run = [&] { return embed_bipartite(graph, outs); }; });

    auto* es = app.add_subcommand("embed-subcubic", "planar max-degree-3 pipeline");
    es->add_option("--graph", graph)->required();
    add_outputs(es, outs, true);
    es->callback([&] { run = [&] { return embed_subcubic(graph, outs); }; });

    auto* ob = app.add_subcommand("one-bend", "any planar graph with at most one bend per edge");
    ob->add_option("--graph", graph)->required();
    add_outputs(ob, outs, false);
    ob->callback([&] { run = [&] { return one_bend(graph, outs); }; });

    bool counterexample = false, audit = false;
    std::vector<EdgeId> parents;
    std::string tt_out;
    auto* tt = app.add_subcommand("twotree", "build a 2-tree");
    tt->add_flag("--counterexample", counterexample, "the 499-vertex 2-tree");
    tt->add_option("--parents", parents, "stacking sequence, -1 for vertices 0 and 1")->delimiter(',');
    tt->add_flag("--audit", audit, "print the stacking audit");
    tt->add_option("--out", tt_out);
    tt->callback([&] { run = [&] { return twotree(counterexample, parents, audit, tt_out); }; });

    std::int64_t budget = 10'000'000;
    std::string layout_out;
    auto* bp = app.add_subcommand("brute-posh", "exhaustive one-sided layout search");
    bp->add_option("--graph", graph)->required();
    bp->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
    bp->add_option("--out", layout_out, "layout JSON when found");
    bp->callback([&] { run = [&] { return brute_posh(graph, budget, layout_out); }; });

    std::string dir;
    auto* g2 = app.add_subcommand("gen-2trees", "all 2-trees on n vertices up to isomorphism");
    g2->add_option("--n", n)->required()->check(CLI::Range(3, 12));
    g2->add_option("--out", dir)->required();
    g2->callback([&] { run = [&] { return gen_2trees(n, dir); }; });

    BatchSpec spec;
    auto* bt = app.add_subcommand("batch", "seeded batch over random graphs");
    bt->add_option("--command", spec.command)
        ->required()
        ->check(CLI::IsMember({"embed", "embed-bipartite", "embed-subcubic", "one-bend"}));
    bt->add_option("--generator", spec.generator)
        ->check(CLI::IsMember({"planar", "triangulation", "bipartite", "subcubic"}));
    bt->add_option("--count", spec.count)->check(CLI::NonNegativeNumber);
    bt->add_option("--min-n", spec.min_n)->check(CLI::PositiveNumber);
    bt->add_option("--max-n", spec.max_n)->check(CLI::PositiveNumber);
    bt->add_option("--seed", spec.seed, "overridden by POSH_SEED");
    bt->add_option("--threads", spec.threads)->check(CLI::PositiveNumber);
    bt->add_flag("--timings", spec.timings, "record per-instance milliseconds");
    bt->add_option("--out", out, "manifest (- for stdout)");
    bt->callback([&] { run = [&] { return batch(spec, out); }; });

    bool force = false;
    auto* rd = app.add_subcommand("render", "SVG of a drawing or point set");
    rd->add_option("--graph", graph);
    rd->add_option("--drawing", drawing);
    rd->add_option("--pointset", pointset, "chain points drawn as glyphs");
    rd->add_flag("--force", force, "render even if the drawing is not certified");
    rd->add_option("--out", out);
    rd->callback([&] { run = [&] { return render(graph, drawing, pointset, force, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }

    try {
        return run();
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const NonPlanarError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const NotBipartiteError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kFailed;
    }
    return kBadInput;
}
