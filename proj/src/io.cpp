#include "posh/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "posh/errors.hpp"

namespace posh::io {

namespace {

std::string str(const BigInt& x) { return x.str(); }

json rational_pair(const Rational& r) { return {str(numerator(r)), str(denominator(r))}; }

json point_json(const RatPoint& p) {
    json a = rational_pair(p.x), b = rational_pair(p.y);
    return {a[0], a[1], b[0], b[1]};
}

BigInt big(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (!j.is_string()) throw StructuralError("expected an integer or a decimal string");
    try {
        return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
        throw StructuralError("not a decimal integer: " + j.get<std::string>());
    }
}

RatPoint read_point(const json& j) {
    if (!j.is_array() || j.size() != 4) throw StructuralError("points are [nx, dx, ny, dy]");
    const BigInt dx = big(j[1]), dy = big(j[3]);
    if (dx == 0 || dy == 0) throw StructuralError("zero denominator");
    return {Rational(big(j[0]), dx), Rational(big(j[2]), dy)};
}

int index_key(const std::string& key, int limit, const char* what) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || v < 0 || v >= limit) throw StructuralError(std::string("bad ") + what + " key " + key);
    return v;
}

}  // namespace

json graph_json(const MultiGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) j["edges"].push_back({e, g.edge(e).u, g.edge(e).v});
    return j;
}

json graph_json(const PlaneGraph& pg) {
    json j = graph_json(pg.graph());
    j["rotation"] = json::object();
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
        json r = json::array();
        for (Dart d : pg.rotation(v)) r.push_back(d);
        j["rotation"][std::to_string(v)] = r;
    }
    j["outer_face"] = json::array();
    for (Dart start : pg.outer_darts()) {
        json walk = json::array();
        Dart d = start;
        do {
            walk.push_back(d);
            d = pg.face_next(d);
        } while (d != start);
        j["outer_face"].push_back(walk);
    }
    return j;
}

GraphDocument read_graph(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw StructuralError("graph JSON needs \"vertices\" and \"edges\"");
    const auto& vs = j["vertices"];
    if (!vs.is_array()) throw StructuralError("\"vertices\" must be an array");
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i)
        if (!vs[i].is_number_integer() || vs[i].get<int>() != i)
            throw StructuralError("vertex ids must be 0..n-1 in order");
    GraphDocument doc;
    doc.graph = MultiGraph(n);
    const auto& es = j["edges"];
    if (!es.is_array()) throw StructuralError("\"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto& e = es[i];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer())
            throw StructuralError("edges are [id, u, v]");
        const int id = e[0].get<int>(), u = e[1].get<int>(), v = e[2].get<int>();
        if (id != static_cast<int>(i)) throw StructuralError("edge ids must be 0..m-1 in order");
        if (u < 0 || u >= n || v < 0 || v >= n) throw StructuralError("edge " + std::to_string(id) + " has a bad endpoint");
        if (u == v) throw StructuralError("loops are not supported");
        doc.graph.add_edge(u, v);
    }
    if (j.contains("rotation")) {
        std::vector<std::vector<Dart>> rot(n);
        for (const auto& [key, list] : j["rotation"].items()) {
            const int v = index_key(key, n, "rotation");
            for (const auto& d : list) rot[v].push_back(d.get<int>());
        }
        std::vector<Dart> outer;
        if (j.contains("outer_face")) {
            const auto& of = j["outer_face"];
            if (!of.is_array()) throw StructuralError("\"outer_face\" must be an array");
            if (!of.empty() && of[0].is_number_integer())
                outer.push_back(of[0].get<int>());  // a single walk
            else
                for (const auto& walk : of)
                    if (!walk.empty()) outer.push_back(walk[0].get<int>());
        }
        PlaneGraph pg(doc.graph, std::move(rot), std::move(outer));
        if (pg.outer_darts().empty() && pg.num_edges() > 0) pg.set_outer(default_outer_darts(pg));
        faces(pg);  // rejects rotations that are not planar
        doc.plane = std::move(pg);
    }
    if (j.contains("stacking")) doc.stacking = j["stacking"].get<std::vector<EdgeId>>();
    return doc;
}

json drawing_json(const Drawing& d) {
    json j;
    j["points"] = json::object();
    for (std::size_t v = 0; v < d.placement.size(); ++v)
        if (d.placement[v]) j["points"][std::to_string(v)] = point_json(*d.placement[v]);
    j["bends"] = json::object();
    for (const auto& [e, pts] : d.bends) {
        json list = json::array();
        for (const auto& p : pts) list.push_back(point_json(p));
        j["bends"][std::to_string(e)] = list;
    }
    j["certified"] = d.certified;
    return j;
}

Drawing read_drawing(const json& j) {
    if (!j.is_object() || !j.contains("points")) throw StructuralError("drawing JSON needs \"points\"");
    Drawing d;
    int n = 0;
    for (const auto& [key, p] : j["points"].items()) n = std::max(n, index_key(key, 1 << 30, "point") + 1);
    d.placement.resize(n);
    for (const auto& [key, p] : j["points"].items()) d.placement[index_key(key, n, "point")] = read_point(p);
    if (j.contains("bends"))
        for (const auto& [key, list] : j["bends"].items()) {
            auto& pts = d.bends[index_key(key, 1 << 30, "bend")];
            for (const auto& p : list) pts.push_back(read_point(p));
        }
    d.certified = j.value("certified", false);
    return d;
}

json pointset_json(const PointSet& ps) {
    json j;
    j["n"] = ps.n();
    j["alpha"] = ps.alpha();
    j["points"] = json::array();
    for (PointRef r : ps.refs()) j["points"].push_back({{"name", r.name()}, {"x", str(ps.at(r).x)}, {"y", str(ps.at(r).y)}});
    return j;
}

PointSet read_pointset(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("points")) throw StructuralError("point set JSON needs n and points");
    const int n = j["n"].get<int>();
    if (n < 2) throw StructuralError("point set needs n >= 2");
    std::vector<std::optional<IntPoint>> up(n), low(n);
    for (const auto& p : j["points"]) {
        const std::string name = p.at("name").get<std::string>();
        if (name.size() < 2 || (name[0] != 'p' && name[0] != 'q')) throw StructuralError("bad point name " + name);
        const int i = index_key(name.substr(1), n + 1, "point name");
        if (i < 1) throw StructuralError("bad point name " + name);
        const IntPoint pt{big(p.at("x")), big(p.at("y"))};
        (name[0] == 'p' ? up : low)[i - 1] = pt;
        if (i <= 2) (name[0] == 'p' ? low : up)[i - 1] = pt;
    }
    std::vector<IntPoint> u, l;
    for (int i = 0; i < n; ++i) {
        if (!up[i] || !low[i]) throw StructuralError("point set misses column " + std::to_string(i + 1));
        u.push_back(*up[i]);
        l.push_back(*low[i]);
    }
    return PointSet::from_columns(std::move(u), std::move(l));
}

json book_json(const BookEmbedding& b) {
    json j;
    j["spine"] = b.spine;
    j["pages"] = json::array();
    for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
        const char* p = b.page[e] == Page::Spine ? "spine" : b.page[e] == Page::Upper ? "upper" : "lower";
        j["pages"].push_back({{"edge", e}, {"page", p}, {"nest", b.nest.empty() ? 0 : b.nest[e]}});
    }
    return j;
}

std::vector<VertexId> read_order(const json& j) {
    const json& list = j.is_object() ? j.at("order") : j;
    if (!list.is_array()) throw StructuralError("order must be a list of vertex ids");
    return list.get<std::vector<VertexId>>();
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
    return s;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

void save_json(const std::string& path, const json& j) { save_text(path, j.dump(2) + "\n"); }

}  // namespace posh::io
