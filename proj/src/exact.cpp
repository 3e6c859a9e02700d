#include "linwit/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linwit {

SmallGraph::SmallGraph(int n_) : n(n_), adjMask(n_, 0) {
    if (n < 0 || n > 16) throw std::length_error("SmallGraph holds at most 16 vertices");
}

void SmallGraph::addEdge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("bad edge endpoints");
    adjMask[u] |= 1u << v;
    adjMask[v] |= 1u << u;
}

std::vector<std::vector<int>> SmallGraph::adjLists() const {
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (hasEdge(v, w)) adj[v].push_back(w);
    return adj;
}

SmallGraph SmallGraph::fromAdjLists(const std::vector<std::vector<int>>& adj) {
    SmallGraph g((int)adj.size());
    for (int v = 0; v < g.n; ++v)
        for (int w : adj[v])
            if (v < w) g.addEdge(v, w);
    return g;
}

SmallGraph SmallGraph::path(int n) {
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.addEdge(v, v + 1);
    return g;
}

SmallGraph SmallGraph::cycle(int n) {
    SmallGraph g = path(n);
    if (n >= 3) g.addEdge(n - 1, 0);
    return g;
}

SmallGraph SmallGraph::complete(int n) {
    SmallGraph g(n);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) g.addEdge(v, w);
    return g;
}

SmallGraph SmallGraph::gridGraph(int a, int b) {
    SmallGraph g(a * b);
    auto id = [a](int i, int j) { return j * a + i; };
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i) {
            if (i + 1 < a) g.addEdge(id(i, j), id(i + 1, j));
            if (j + 1 < b) g.addEdge(id(i, j), id(i, j + 1));
        }
    return g;
}

namespace {

void check_guard(int n, int guard, const char* what) {
    if (n > guard)
        throw std::length_error(std::string(what) + ": graph exceeds the size guard of " +
                                std::to_string(guard) + " vertices");
}

uint32_t flood(const SmallGraph& g, uint32_t mask) {
    uint32_t comp = mask & (~mask + 1);
    for (;;) {
        uint32_t grown = comp;
        uint32_t bits = comp;
        while (bits) {
            int v = __builtin_ctz(bits);
            bits &= bits - 1;
            grown |= g.adjMask[v] & mask;
        }
        if (grown == comp) return comp;
        comp = grown;
    }
}

struct TreedepthSolver {
    const SmallGraph& g;
    std::vector<int8_t> memo;

    explicit TreedepthSolver(const SmallGraph& g_) : g(g_), memo(size_t(1) << g_.n, -1) {}

    int solve(uint32_t mask) {
        if (mask == 0) return 0;
        int8_t& slot = memo[mask];
        if (slot >= 0) return slot;
        uint32_t comp = flood(g, mask);
        int result;
        if (comp != mask) {
            result = std::max(solve(comp), solve(mask & ~comp));
        } else {
            result = g.n + 1;
            uint32_t bits = mask;
            while (bits) {
                int v = __builtin_ctz(bits);
                bits &= bits - 1;
                result = std::min(result, 1 + solve(mask & ~(1u << v)));
            }
        }
        slot = (int8_t)result;
        return result;
    }
};

// Backtracking search for a colouring of g with c colours that passes
// `leafCheck` on complete assignments and is not cut by `stepCheck` after
// each single assignment. First-use colour ordering breaks colour symmetry.
template <class StepCheck, class LeafCheck>
bool colour_search(const SmallGraph& g, int c, std::vector<int>& colour, int v, int maxUsed,
                   StepCheck&& stepCheck, LeafCheck&& leafCheck) {
    if (v == g.n) return leafCheck(colour);
    int limit = std::min(c - 1, maxUsed + 1);
    for (int col = 0; col <= limit; ++col) {
        colour[v] = col;
        if (stepCheck(colour, v) &&
            colour_search(g, c, colour, v + 1, std::max(maxUsed, col), stepCheck, leafCheck))
            return true;
    }
    colour[v] = -1;
    return false;
}

bool mask_has_centre(uint32_t mask, const std::vector<int>& colour) {
    int count[17] = {0};
    uint32_t bits = mask;
    while (bits) {
        int v = __builtin_ctz(bits);
        bits &= bits - 1;
        ++count[colour[v]];
    }
    bits = mask;
    while (bits) {
        int v = __builtin_ctz(bits);
        bits &= bits - 1;
        if (count[colour[v]] == 1) return true;
    }
    return false;
}

// Does a fully-coloured connected subset containing v lack a centre?
bool centred_violation_at(const SmallGraph& g, const std::vector<int>& colour, int v) {
    uint32_t colouredMask = 0;
    for (int u = 0; u < g.n; ++u)
        if (colour[u] >= 0) colouredMask |= 1u << u;
    uint32_t rest = colouredMask & ~(1u << v);
    // enumerate submasks of rest, each joined with v
    uint32_t sub = rest;
    for (;;) {
        uint32_t mask = sub | (1u << v);
        if (flood(g, mask) == mask && !mask_has_centre(mask, colour)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & rest;
    }
    return false;
}

// Does some fully-coloured simple path with endpoint v lack a centre?
bool linear_violation_from(const SmallGraph& g, const std::vector<int>& colour, int v) {
    struct Dfs {
        const SmallGraph& g;
        const std::vector<int>& colour;
        int count[17] = {0};
        int uniques = 0;
        uint32_t onPath = 0;

        Dfs(const SmallGraph& g_, const std::vector<int>& c_) : g(g_), colour(c_) {}

        void add(int u) {
            onPath |= 1u << u;
            if (++count[colour[u]] == 1)
                ++uniques;
            else if (count[colour[u]] == 2)
                --uniques;
        }
        void remove(int u) {
            onPath &= ~(1u << u);
            if (--count[colour[u]] == 0)
                --uniques;
            else if (count[colour[u]] == 1)
                ++uniques;
        }
        bool run(int u, int length) {
            if (length >= 2 && uniques == 0) return true;
            uint32_t bits = g.adjMask[u] & ~onPath;
            while (bits) {
                int w = __builtin_ctz(bits);
                bits &= bits - 1;
                if (colour[w] < 0) continue;
                add(w);
                if (run(w, length + 1)) return true;
                remove(w);
            }
            return false;
        }
    } dfs(g, colour);
    dfs.add(v);
    return dfs.run(v, 1);
}

bool leaf_is_centred(const SmallGraph& g, const std::vector<int>& colour) {
    for (uint32_t mask = 1; mask < (1u << g.n); ++mask)
        if (flood(g, mask) == mask && !mask_has_centre(mask, colour)) return false;
    return true;
}

bool leaf_is_linear(const SmallGraph& g, const std::vector<int>& colour) {
    for (int s = 0; s < g.n; ++s)
        if (linear_violation_from(g, colour, s)) return false;
    return true;
}

} // namespace

int treedepth(const SmallGraph& g, int guard) {
    check_guard(g.n, guard, "treedepth");
    if (g.n == 0) return 0;
    TreedepthSolver solver(g);
    return solver.solve((uint32_t(1) << g.n) - 1);
}

int chi_cen(const SmallGraph& g, int guard) {
    check_guard(g.n, guard, "chi_cen");
    if (g.n == 0) return 0;
    for (int c = 1; c <= g.n; ++c) {
        std::vector<int> colour(g.n, -1);
        auto step = [&](const std::vector<int>& col, int v) {
            return !centred_violation_at(g, col, v);
        };
        auto leaf = [&](const std::vector<int>& col) { return leaf_is_centred(g, col); };
        if (colour_search(g, c, colour, 0, -1, step, leaf)) return c;
    }
    return g.n;
}

int chi_lin(const SmallGraph& g, int guard) {
    check_guard(g.n, guard, "chi_lin");
    if (g.n == 0) return 0;
    for (int c = 1; c <= g.n; ++c) {
        std::vector<int> colour(g.n, -1);
        auto step = [&](const std::vector<int>& col, int v) {
            return !linear_violation_from(g, col, v);
        };
        auto leaf = [&](const std::vector<int>& col) { return leaf_is_linear(g, col); };
        if (colour_search(g, c, colour, 0, -1, step, leaf)) return c;
    }
    return g.n;
}

std::optional<std::vector<int>> find_uncentred_path(const SmallGraph& g, const Colouring& col,
                                                    int guard) {
    check_guard(g.n, guard, "find_uncentred_path");
    if ((int)col.colourOf.size() != g.n)
        throw std::invalid_argument("colouring not total on the graph");

    // Iterative enumeration with per-path centre recount; intentionally a
    // different code path from is_linear's incremental DFS.
    std::vector<std::vector<int>> stack;
    for (int s = g.n - 1; s >= 0; --s) stack.push_back({s});
    while (!stack.empty()) {
        std::vector<int> path = std::move(stack.back());
        stack.pop_back();
        if (path.size() >= 2) {
            std::vector<int> count(col.numColours, 0);
            for (int v : path) ++count[col.colourOf[v]];
            bool hasCentre = false;
            for (int v : path)
                if (count[col.colourOf[v]] == 1) hasCentre = true;
            if (!hasCentre) return path;
        }
        uint32_t onPath = 0;
        for (int v : path) onPath |= 1u << v;
        int tail = path.back();
        for (int w = g.n - 1; w >= 0; --w) {
            if (!g.hasEdge(tail, w) || (onPath >> w) & 1u) continue;
            std::vector<int> longer = path;
            longer.push_back(w);
            stack.push_back(std::move(longer));
        }
    }
    return std::nullopt;
}

} // namespace linwit
