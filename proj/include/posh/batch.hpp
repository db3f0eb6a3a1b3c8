#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posh/plane_graph.hpp"

namespace posh {

// Pipelines a batch can run: "embed" (first one-sided order found by search,
// then the chain embedding), "embed-bipartite", "embed-subcubic", "one-bend".
// Generators: "planar", "triangulation", "bipartite", "subcubic".
struct BatchSpec {
    std::string command;
    std::string generator;
    int count = 10;
    int min_n = 3;
    int max_n = 20;
    std::uint64_t seed = 1;
    int threads = 1;
    bool timings = false;  // off by default: timings would break byte-identity
};

struct RunManifest {
    std::string command;
    int index = 0;
    std::uint64_t seed = 0;
    std::string input_hash;    // FNV-1a of the input graph JSON
    std::string drawing_hash;  // FNV-1a of the drawing JSON, empty on failure
    int n = 0;
    int m = 0;
    std::string status;  // "pass", "fail" or "skipped"
    bool certified = false;
    std::map<std::string, bool> checks;
    std::map<std::string, long long> counters;
    std::string error;
    std::optional<double> millis;

    nlohmann::json to_json() const;
};

struct BatchResult {
    BatchSpec spec;
    std::vector<RunManifest> runs;
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    nlohmann::json to_json() const;
    std::string dump() const;  // the manifest file contents
};

// Seed of instance i: a splitmix64 step of seed + i.
std::uint64_t instance_seed(std::uint64_t seed, int index);

PlaneGraph generate(const std::string& generator, int n, std::uint64_t seed);

// Runs one pipeline on pg and records every check; failures are caught and
// recorded, never thrown (unknown commands throw DomainError).
RunManifest run_instance(const std::string& command, const PlaneGraph& pg, bool timings = false);

// Deterministic for a fixed spec whatever the thread count; manifests are
// merged by instance index.
BatchResult run_batch(const BatchSpec& spec);

}  // namespace posh
