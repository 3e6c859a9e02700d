#pragma once
// Bipartite matching with certificates: either a matching that is d-regular
// on the left side and sub-unit on the right, or a violator set A on the
// left with |N(A)| < d|A|.

#include <vector>

namespace linwit {

struct BipartiteGraph {
    int nL = 0, nR = 0;
    std::vector<std::vector<int>> adj; // left index -> right indices
};

struct DegreeMatching {
    int d = 1;
    std::vector<std::vector<int>> rightsOf; // left -> its d matched rights (sorted)
    std::vector<int> leftOf;                // right -> matched left or -1
};

struct MatchResult {
    bool ok = false;
    DegreeMatching matching;    // valid when ok
    std::vector<int> violator;  // sorted left subset when !ok
};

// Either a matching saturating the left side, or a Hall violator
// (the left vertices reachable by alternating paths from an unsaturated one).
MatchResult saturating_matching(const BipartiteGraph& h);

// The d-fold variant via the twin construction; violators are projected back
// to original left vertices.
MatchResult polygamous_matching(const BipartiteGraph& h, int d);

} // namespace linwit
