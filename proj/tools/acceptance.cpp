// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "posh/batch.hpp"
#include "posh/embedder.hpp"
#include "posh/generators.hpp"
#include "posh/io.hpp"
#include "posh/pointset.hpp"
#include "posh/twotree.hpp"

using namespace posh;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string first_failure(const BatchResult& r) {
    for (const auto& run : r.runs)
        if (run.status != "pass") {
            std::string what = "instance " + std::to_string(run.index) + " (" + run.status + ")";
            for (const auto& [name, ok] : run.checks)
                if (!ok) what += " " + name;
            if (!run.error.empty()) what += ": " + run.error;
            return what;
        }
    return "";
}

Verdict order_type() {
    const auto start = std::chrono::steady_clock::now();
    long pairs = 0;
    std::size_t bad = 0;
    for (int alpha : {3, 4})
        for (int n = 2; n <= 20; ++n) {
            const auto rep = verify_order_type(PointSet::exploding(n, alpha));
            pairs += rep.pairs_checked;
            bad += rep.violations.size();
        }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << pairs << " pairs, " << bad << " deviations, " << secs << " s";
    return {bad == 0 && secs < 5.0, d.str()};
}

// Random plane graphs on <= 8 vertices; every one-sided order found is embedded.
Verdict chain_embedding() {
    Rng rng(20240501);
    int instances = 0, drawings = 0, certified = 0, tried = 0;
    while (instances < 500 && tried < 20000) {
        ++tried;
        const int n = 3 + pick(rng, 6);
        const PlaneGraph pg = coin(rng, 0.3) ? random_triangulation(n, rng) : random_planar(n, 0.55 + 0.45 * (pick(rng, 101) / 100.0), rng);
        const auto orders = one_sided_orders(pg);
        if (orders.empty()) continue;
        ++instances;
        const PointSet ps = build_hn(n);
        for (const auto& ho : orders) {
            ++drawings;
            const auto chk = check_one_sided(pg, ho);
            if (!chk.ok()) continue;
            try {
                const Drawing d = embed_on_hn(pg, pg.graph(), ho, *chk.sides, ps);
                if (d.certified && verify_drawing(pg.graph(), d).crossing_free()) ++certified;
            } catch (const std::exception&) {
            }
        }
    }
    std::ostringstream d;
    d << instances << " graphs, " << certified << "/" << drawings << " drawings certified";
    return {instances >= 500 && certified == drawings, d.str()};
}

BatchSpec spec_of(const std::string& command, const std::string& generator, int count, int max_n,
                  std::uint64_t seed) {
    BatchSpec s;
    s.command = command;
    s.generator = generator;
    s.count = count;
    s.min_n = 2;
    s.max_n = max_n;
    s.seed = seed;
    s.threads = 4;
    return s;
}

Verdict batch_all_pass(const BatchResult& r, const std::vector<std::string>& required_checks) {
    bool pass = r.passed == r.spec.count;
    for (const auto& run : r.runs)
        for (const auto& name : required_checks) {
            auto it = run.checks.find(name);
            pass = pass && it != run.checks.end() && it->second;
        }
    std::ostringstream d;
    d << r.passed << "/" << r.spec.count << " certified";
    if (!pass) d << "; first problem: " << first_failure(r);
    return {pass, d.str()};
}

Verdict counterexample() {
    const auto a = audit_counterexample(build_counterexample());
    const bool pass = a.vertices == 499 && a.edges == 995 && a.edges == 2 * a.vertices - 3 && a.base_stack == 7 &&
                      a.level_edges == std::vector<int>{14, 140, 840} &&
                      a.level_stacks == std::vector<int>{7, 5, 3, 0} && a.uniform;
    std::ostringstream d;
    d << a.vertices << " vertices, " << a.edges << " edges, stacks";
    for (int s : a.level_stacks) d << " " << s;
    d << ", level edges";
    for (int e : a.level_edges) d << " " << e;
    return {pass, d.str()};
}

Verdict claims_sweep() {
    long layouts = 0, trees = 0, violations = 0, not_found = 0;
    bool counts_ok = true;
    const std::vector<std::size_t> known = {1, 1, 2, 5, 12, 39};  // 2-trees on 3..8 vertices
    for (int n = 3; n <= 8; ++n) {
        const auto all = enumerate_two_trees(n);
        counts_ok = counts_ok && all.size() == known[n - 3];
        for (const auto& tt : all) {
            ++trees;
            const SearchStatus s = for_each_posh_layout(tt.graph(), 50'000'000, [&](const BookEmbedding& b) {
                ++layouts;
                violations += static_cast<long>(check_claims(tt, b).violations.size());
                return true;
            });
            if (s != SearchStatus::Found) ++not_found;
        }
    }
    std::ostringstream d;
    d << trees << " 2-trees, " << layouts << " layouts, " << violations << " claim violations, " << not_found
      << " without a layout";
    return {counts_ok && violations == 0 && not_found == 0 && layouts > 0, d.str()};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const std::string& name, const std::function<Verdict()>& check) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failed;
        std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str());
        std::fflush(stdout);
    };

    const auto bip = spec_of("embed-bipartite", "bipartite", 200, 50, 7001);
    const auto sub = spec_of("embed-subcubic", "subcubic", 100, 50, 7002);
    const auto bend = spec_of("one-bend", "planar", 50, 30, 7003);
    BatchResult bip_run, sub_run, bend_run;

    report(1, "order type of the chain", order_type);
    report(2, "one-sided cycles embed on H_n", chain_embedding);
    report(3, "bipartite pipeline", [&] {
        bip_run = run_batch(bip);
        return batch_all_pass(bip_run, {"certified", "one_sided", "reverse_one_sided", "vertices_on_their_columns"});
    });
    report(4, "subcubic pipeline", [&] {
        sub_run = run_batch(sub);
        return batch_all_pass(sub_run, {"certified", "no_separating_triangles", "no_covered_separating_quads",
                                        "bipartite_after_contraction", "degree_four_after_leaves",
                                        "one_sided_after_each_split"});
    });
    report(5, "499-vertex 2-tree audit", counterexample);
    report(6, "stack claims on all 2-trees up to 8 vertices", claims_sweep);
    report(7, "one-bend drawings", [&] {
        bend_run = run_batch(bend);
        return batch_all_pass(bend_run, {"certified", "subdivisions_within_n_minus_2", "chain_within_budget",
                                         "points_on_chain", "at_most_one_bend"});
    });
    report(8, "batch determinism", [&] {
        int same = 0;
        for (auto [spec, first] : {std::pair{bip, &bip_run}, std::pair{sub, &sub_run}, std::pair{bend, &bend_run}}) {
            spec.threads = 1;
            if (run_batch(spec).dump() == first->dump() && !first->runs.empty()) ++same;
        }
        return Verdict{same == 3, std::to_string(same) + "/3 batches byte-identical on rerun"};
    });
    return failed == 0 ? 0 : 1;
}
