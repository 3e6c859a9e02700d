#include "linwit/colouring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "linwit/bipartite.hpp"

namespace linwit {

Colouring random_colouring(int n, int c, Rng& rng) {
    if (c < 1) throw std::invalid_argument("colour count must be positive");
    Colouring col;
    col.numColours = c;
    col.colourOf.resize(n);
    for (int v = 0; v < n; ++v) col.colourOf[v] = (int)rng.below(uint64_t(c));
    return col;
}

std::vector<int> colours_used(const Colouring& col) {
    std::vector<char> seen(col.numColours, 0);
    for (int c : col.colourOf) {
        if (c < 0 || c >= col.numColours)
            throw std::invalid_argument("colour id outside [0, numColours)");
        seen[c] = 1;
    }
    std::vector<int> used;
    for (int c = 0; c < col.numColours; ++c)
        if (seen[c]) used.push_back(c);
    return used;
}

std::optional<int> centre_of(const Colouring& col, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("centre_of: empty vertex set");
    std::vector<int> count(col.numColours, 0);
    for (int v : vertices) ++count[col.colourOf[v]];
    for (int v : vertices)
        if (count[col.colourOf[v]] == 1) return v;
    return std::nullopt;
}

int default_guard(int fallback) {
    if (const char* env = std::getenv("LINWIT_SIZE_GUARD")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

namespace {

void check_guard(size_t n, int guard, const char* what) {
    if ((int)n > guard)
        throw std::length_error(std::string(what) + ": graph exceeds the size guard of " +
                                std::to_string(guard) + " vertices");
}

struct PathSearch {
    const std::vector<std::vector<int>>& adj;
    const Colouring& col;
    std::vector<int> path;
    std::vector<char> onPath;
    std::vector<int> count;
    int uniques = 0; // number of colours occurring exactly once on the path
    std::vector<int> found;

    PathSearch(const std::vector<std::vector<int>>& adj_, const Colouring& col_)
        : adj(adj_), col(col_), onPath(adj_.size(), 0), count(col_.numColours, 0) {}

    void push(int v) {
        path.push_back(v);
        onPath[v] = 1;
        int c = col.colourOf[v];
        if (++count[c] == 1)
            ++uniques;
        else if (count[c] == 2)
            --uniques;
    }
    void pop() {
        int v = path.back();
        path.pop_back();
        onPath[v] = 0;
        int c = col.colourOf[v];
        if (--count[c] == 0)
            --uniques;
        else if (count[c] == 1)
            ++uniques;
    }

    // DFS over simple paths; each undirected path is examined once, in its
    // orientation with front < back. First uncentred path found wins.
    bool dfs() {
        if (path.size() >= 2 && path.front() < path.back() && uniques == 0) {
            found = path;
            return true;
        }
        int v = path.back();
        for (int w : adj[v]) {
            if (onPath[w]) continue;
            push(w);
            if (dfs()) return true;
            pop();
        }
        return false;
    }
};

} // namespace

LinearVerdict is_linear(const std::vector<std::vector<int>>& adj, const Colouring& col,
                        int guard) {
    check_guard(adj.size(), guard, "is_linear");
    PathSearch search(adj, col);
    for (int s = 0; s < (int)adj.size(); ++s) {
        search.push(s);
        if (search.dfs()) return {false, search.found};
        search.pop();
    }
    return {true, {}};
}

CentredVerdict is_centred(const std::vector<std::vector<int>>& adj, const Colouring& col,
                          int guard) {
    int n = (int)adj.size();
    check_guard(adj.size(), guard, "is_centred");
    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) nbr[v] |= 1u << w;

    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        // connectivity by flooding from the lowest set bit
        uint32_t comp = mask & (~mask + 1);
        for (;;) {
            uint32_t grown = comp;
            uint32_t bits = comp;
            while (bits) {
                int v = __builtin_ctz(bits);
                bits &= bits - 1;
                grown |= nbr[v] & mask;
            }
            if (grown == comp) break;
            comp = grown;
        }
        if (comp != mask) continue;

        std::vector<int> count(col.numColours, 0);
        uint32_t bits = mask;
        while (bits) {
            int v = __builtin_ctz(bits);
            bits &= bits - 1;
            ++count[col.colourOf[v]];
        }
        bool hasCentre = false;
        bits = mask;
        while (bits && !hasCentre) {
            int v = __builtin_ctz(bits);
            bits &= bits - 1;
            hasCentre = count[col.colourOf[v]] == 1;
        }
        if (!hasCentre) {
            std::vector<int> set;
            bits = mask;
            while (bits) {
                set.push_back(__builtin_ctz(bits));
                bits &= bits - 1;
            }
            return {false, set};
        }
    }
    return {true, {}};
}

ColourProfile profile(const Pseudogrid& pg, const Colouring& col) {
    if ((int)col.colourOf.size() != pg.n)
        throw std::invalid_argument("colouring not total on the pseudogrid");
    ColourProfile prof;
    prof.coloursOf.assign(pg.grid.objectCount(), {});
    prof.objectsOf.assign(col.numColours, {});
    for (int k = 0; k < pg.grid.objectCount(); ++k) {
        auto& set = prof.coloursOf[k];
        for (int v : pg.classes[k]) set.push_back(col.colourOf[v]);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (int c : set) prof.objectsOf[c].push_back(k);
    }
    return prof;
}

std::optional<std::vector<int>> deficiency_set(const ColourProfile& prof,
                                               const std::vector<int>& colours, int d, int r,
                                               const GridGraph& g) {
    if (d < 1) throw std::invalid_argument("deficiency_set: d must be positive");

    CoordRect inner = interior_rect(g, r);
    std::vector<int> rightIndex(g.objectCount(), -1);
    int nR = 0;
    BipartiteGraph h;
    h.nL = (int)colours.size();
    h.adj.assign(h.nL, {});
    for (int x = 0; x < h.nL; ++x)
        for (int k : prof.objectsOf[colours[x]]) {
            if (!inner.containsObject(g.objectAt(k))) continue;
            if (rightIndex[k] == -1) rightIndex[k] = nR++;
            h.adj[x].push_back(rightIndex[k]);
        }
    h.nR = nR;

    MatchResult res = polygamous_matching(h, d);
    if (res.ok) return std::nullopt;

    // Shrink the certificate to an inclusion-minimal violator.
    auto neighbourhoodSize = [&](const std::vector<int>& A) {
        std::vector<int> objs;
        for (int x : A)
            objs.insert(objs.end(), h.adj[x].begin(), h.adj[x].end());
        std::sort(objs.begin(), objs.end());
        objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
        return (int)objs.size();
    };

    std::vector<int> A = res.violator;
    if (neighbourhoodSize(A) >= d * (int)A.size())
        throw std::runtime_error("matching certificate is not a violator");
    bool shrunk = true;
    while (shrunk && A.size() > 1) {
        shrunk = false;
        for (size_t t = 0; t < A.size(); ++t) {
            std::vector<int> trial = A;
            trial.erase(trial.begin() + (long)t);
            if (neighbourhoodSize(trial) < d * (int)trial.size()) {
                A = std::move(trial);
                shrunk = true;
                break;
            }
        }
    }

    std::vector<int> out;
    out.reserve(A.size());
    for (int x : A) out.push_back(colours[x]);
    return out;
}

} // namespace linwit
