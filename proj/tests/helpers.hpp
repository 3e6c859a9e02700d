#pragma once
// Shared test utilities: independent oracles and small generators. These
// deliberately avoid the library's own code paths where they act as oracles.

#include <algorithm>
#include <set>
#include <vector>

#include "linwit/colouring.hpp"
#include "linwit/exact.hpp"
#include "linwit/pseudogrid.hpp"
#include "linwit/rng.hpp"

namespace testutil {

using namespace linwit;

// Brute-force box oracle: enumerate every object of the grid and keep those
// whose vertices all sit within L-infinity distance r of some endpoint of mu.
inline std::vector<GridObject> box_oracle(const GridGraph& g, const GridObject& mu, int r) {
    std::vector<std::pair<int, int>> centres{{mu.i, mu.j}};
    if (mu.kind == ObjKind::HEdge) centres.push_back({mu.i + 1, mu.j});
    if (mu.kind == ObjKind::VEdge) centres.push_back({mu.i, mu.j + 1});

    auto vertexIn = [&](int i, int j) {
        for (auto [ci, cj] : centres)
            if (std::abs(i - ci) <= r && std::abs(j - cj) <= r) return true;
        return false;
    };
    auto objectIn = [&](const GridObject& o) {
        switch (o.kind) {
        case ObjKind::Vertex: return vertexIn(o.i, o.j);
        case ObjKind::HEdge: return vertexIn(o.i, o.j) && vertexIn(o.i + 1, o.j);
        case ObjKind::VEdge: return vertexIn(o.i, o.j) && vertexIn(o.i, o.j + 1);
        }
        return false;
    };

    std::vector<GridObject> out;
    for (int k = 0; k < g.objectCount(); ++k)
        if (objectIn(g.objectAt(k))) out.push_back(g.objectAt(k));
    return out;
}

inline std::vector<int> object_indices(const GridGraph& g, const std::vector<GridObject>& objs) {
    std::vector<int> out;
    out.reserve(objs.size());
    for (const GridObject& o : objs) out.push_back(g.objectIndex(o));
    std::sort(out.begin(), out.end());
    return out;
}

// Independent path checker used against pick_up_two / pick_up_everything.
inline bool check_simple_path(const Pseudogrid& pg, const std::vector<int>& path) {
    if (path.empty()) return false;
    std::set<int> seen;
    for (int v : path) {
        if (v < 0 || v >= pg.n) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t k = 1; k < path.size(); ++k) {
        const auto& row = pg.adj[path[k - 1]];
        if (!std::binary_search(row.begin(), row.end(), path[k])) return false;
    }
    return true;
}

inline bool path_contains(const std::vector<int>& path, int v) {
    return std::find(path.begin(), path.end(), v) != path.end();
}

inline SmallGraph random_small_graph(int n, Rng& rng, int extraEdges) {
    SmallGraph g(n);
    // random spanning structure on a shuffled order, then extra edges
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    for (int v = 1; v < n; ++v) g.addEdge(order[v], order[(int)rng.below((uint64_t)v)]);
    for (int e = 0; e < extraEdges; ++e) {
        int u = (int)rng.below((uint64_t)n);
        int v = (int)rng.below((uint64_t)n);
        if (u != v && !g.hasEdge(u, v)) g.addEdge(u, v);
    }
    return g;
}

inline Colouring random_small_colouring(int n, int c, Rng& rng) {
    Colouring col;
    col.numColours = c;
    col.colourOf.resize(n);
    for (int v = 0; v < n; ++v) col.colourOf[v] = (int)rng.below((uint64_t)c);
    return col;
}

} // namespace testutil
