#pragma once
// Brute-force ground truth on small graphs: treedepth, centred and linear
// chromatic numbers, and uncentred-path search.

#include <optional>
#include <vector>

#include "linwit/colouring.hpp"

namespace linwit {

struct SmallGraph {
    int n = 0;
    std::vector<uint32_t> adjMask;

    SmallGraph() = default;
    explicit SmallGraph(int n_); // throws beyond 16 vertices
    void addEdge(int u, int v);
    bool hasEdge(int u, int v) const { return (adjMask[u] >> v) & 1u; }
    std::vector<std::vector<int>> adjLists() const;
    static SmallGraph fromAdjLists(const std::vector<std::vector<int>>& adj);
    static SmallGraph path(int n);
    static SmallGraph cycle(int n);
    static SmallGraph complete(int n);
    static SmallGraph gridGraph(int a, int b);
};

// td(G) by recursive vertex elimination with component splitting, memoized
// on vertex subsets. td of the empty graph is 0.
int treedepth(const SmallGraph& g, int guard = default_guard(16));

// Minimum c admitting a centred colouring; equals treedepth on every graph.
int chi_cen(const SmallGraph& g, int guard = default_guard(12));

// Minimum c admitting a linear colouring.
int chi_lin(const SmallGraph& g, int guard = default_guard(12));

// Some simple path without a centre, or nullopt exactly when the colouring
// is linear.
std::optional<std::vector<int>> find_uncentred_path(const SmallGraph& g, const Colouring& col,
                                                    int guard = default_guard(16));

} // namespace linwit
