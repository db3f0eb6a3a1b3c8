#include "posh/generators.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "posh/errors.hpp"

namespace posh {

namespace {

using Faces = std::vector<std::vector<VertexId>>;

PlaneGraph small_graph(int n) {
    MultiGraph g(std::max(n, 0));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    std::vector<std::vector<Dart>> rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (EdgeId e : g.incident(v)) rot[v].push_back(g.dart_out(e, v));
    return PlaneGraph(std::move(g), std::move(rot));
}

PlaneGraph drop_edges(const PlaneGraph& pg, double keep, Rng& rng) {
    std::vector<char> kv(pg.num_vertices(), 1), ke(pg.num_edges());
    for (auto& k : ke) k = coin(rng, keep) ? 1 : 0;
    return restrict_plane(pg, kv, ke).pg;
}

// inserts x into every face between a and b (either direction)
void subdivide(Faces& faces, VertexId a, VertexId b, VertexId x) {
    for (auto& f : faces) {
        const size_t k = f.size();
        for (size_t i = 0; i < k; ++i) {
            VertexId s = f[i], t = f[(i + 1) % k];
            if ((s == a && t == b) || (s == b && t == a)) {
                f.insert(f.begin() + static_cast<long>(i) + 1, x);
                break;
            }
        }
    }
}

}  // namespace

PlaneGraph random_triangulation(int n, Rng& rng) {
    if (n < 3) throw DomainError("triangulation needs n >= 3");
    Faces faces{{0, 1, 2}, {0, 2, 1}};
    std::set<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<int> deg(n, 0);
    deg[0] = deg[1] = deg[2] = 2;
    auto key = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    for (VertexId x = 3; x < n; ++x) {
        int fi = pick(rng, static_cast<int>(faces.size()));
        auto [a, b, c] = std::array{faces[fi][0], faces[fi][1], faces[fi][2]};
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
        for (int y : {a, b, c}) {
            edges.insert(key(x, y));
            ++deg[y];
        }
        deg[x] = 3;
    }
    // flips: faces (a,b,c) and (b,a,d) become (c,a,d) and (d,b,c)
    for (int round = 0; round < 4 * n; ++round) {
        int fi = pick(rng, static_cast<int>(faces.size()));
        int r = pick(rng, 3);
        VertexId a = faces[fi][r], b = faces[fi][(r + 1) % 3], c = faces[fi][(r + 2) % 3];
        int gi = -1, gr = 0;
        for (int k = 0; k < static_cast<int>(faces.size()) && gi == -1; ++k)
            for (int s = 0; s < 3; ++s)
                if (faces[k][s] == b && faces[k][(s + 1) % 3] == a) {
                    gi = k;
                    gr = s;
                }
        VertexId d = faces[gi][(gr + 2) % 3];
        if (c == d || edges.count(key(c, d)) || deg[a] <= 3 || deg[b] <= 3) continue;
        edges.erase(key(a, b));
        edges.insert(key(c, d));
        --deg[a];
        --deg[b];
        ++deg[c];
        ++deg[d];
        faces[fi] = {c, a, d};
        faces[gi] = {d, b, c};
    }
    return plane_from_faces(n, faces, pick(rng, static_cast<int>(faces.size())));
}

PlaneGraph random_planar(int n, double keep, Rng& rng) {
    if (n < 3) return small_graph(n);
    return drop_edges(random_triangulation(n, rng), keep, rng);
}

PlaneGraph random_bipartite_plane(int n, double keep, Rng& rng) {
    if (n < 4) return small_graph(n);
    Faces faces{{0, 1, 2, 3}, {0, 3, 2, 1}};
    for (VertexId x = 4; x < n; ++x) {
        int fi = pick(rng, static_cast<int>(faces.size()));
        auto f = faces[fi];
        std::rotate(f.begin(), f.begin() + pick(rng, 4), f.end());
        faces[fi] = {f[0], f[1], f[2], x};
        faces.push_back({f[0], x, f[2], f[3]});
    }
    auto q = plane_from_faces(n, faces, pick(rng, static_cast<int>(faces.size())));
    return drop_edges(q, keep, rng);
}

PlaneGraph random_subcubic_plane(int n, double keep, Rng& rng) {
    if (n < 4) return small_graph(n);
    const int m = n % 2 ? n + 1 : n;
    Faces faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    for (VertexId x = 4; x + 1 < m; x += 2) {
        const VertexId y = x + 1;
        int fi = pick(rng, static_cast<int>(faces.size()));
        const auto f = faces[fi];
        const int k = static_cast<int>(f.size());
        int i = pick(rng, k), j = pick(rng, k - 1);
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        subdivide(faces, f[i], f[(i + 1) % k], x);
        subdivide(faces, f[j], f[(j + 1) % k], y);
        // split the grown face along x-y
        auto& g = faces[fi];
        auto px = std::find(g.begin(), g.end(), x) - g.begin();
        auto py = std::find(g.begin(), g.end(), y) - g.begin();
        std::vector<VertexId> one(g.begin() + px, g.begin() + py + 1), two(g.begin() + py, g.end());
        two.insert(two.end(), g.begin(), g.begin() + px + 1);
        g = std::move(one);
        faces.push_back(std::move(two));
    }
    auto cubic = plane_from_faces(m, faces, pick(rng, static_cast<int>(faces.size())));
    std::vector<char> kv(m, 1), ke(cubic.num_edges());
    if (m != n) kv[pick(rng, m)] = 0;
    for (auto& k : ke) k = coin(rng, keep) ? 1 : 0;
    return restrict_plane(cubic, kv, ke).pg;
}

}  // namespace posh
