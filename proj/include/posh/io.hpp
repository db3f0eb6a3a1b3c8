#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "posh/book.hpp"
#include "posh/drawing.hpp"
#include "posh/graph.hpp"
#include "posh/plane_graph.hpp"
#include "posh/pointset.hpp"

namespace posh::io {

using json = nlohmann::json;

// {"vertices":[0..n-1], "edges":[[id,u,v],...]} plus, for plane graphs,
// "rotation":{v:[dart ids ccw]} and "outer_face":[[walk darts],...] (one
// walk per component with edges). Dart 2e leaves u, 2e+1 leaves v.
json graph_json(const MultiGraph& g);
json graph_json(const PlaneGraph& pg);

struct GraphDocument {
    MultiGraph graph;
    std::optional<PlaneGraph> plane;          // when a rotation is given
    std::optional<std::vector<EdgeId>> stacking;  // 2-tree parents, if present
};

// Throws StructuralError on malformed input: ids must be 0..n-1 and edges
// listed in id order.
GraphDocument read_graph(const json& j);

// {"points":{v:[nx,dx,ny,dy]}, "bends":{e:[[nx,dx,ny,dy],...]}}, numbers as
// decimal strings.
json drawing_json(const Drawing& d);
Drawing read_drawing(const json& j);

// {"n", "alpha", "points":[{"name","x","y"}]} in refs() order.
json pointset_json(const PointSet& ps);
// Columns are rebuilt from the names and passed through the order-type check.
PointSet read_pointset(const json& j);

json book_json(const BookEmbedding& b);

// Plain vertex list, or {"order":[...]}.
std::vector<VertexId> read_order(const json& j);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t h);

json load_json(const std::string& path);
// Two-space indent and a trailing newline; "-" writes to stdout.
void save_text(const std::string& path, const std::string& text);
void save_json(const std::string& path, const json& j);

}  // namespace posh::io
