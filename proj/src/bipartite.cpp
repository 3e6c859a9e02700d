#include "linwit/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace linwit {

namespace {

struct Matcher {
    const BipartiteGraph& h;
    std::vector<int> matchL, matchR;
    std::vector<char> visitedR;

    explicit Matcher(const BipartiteGraph& h_)
        : h(h_), matchL(h_.nL, -1), matchR(h_.nR, -1), visitedR(h_.nR, 0) {}

    bool augment(int x) {
        for (int y : h.adj[x]) {
            if (visitedR[y]) continue;
            visitedR[y] = 1;
            if (matchR[y] == -1 || augment(matchR[y])) {
                matchR[y] = x;
                matchL[x] = y;
                return true;
            }
        }
        return false;
    }

    // Left vertices reachable by alternating paths from the unsaturated x.
    std::vector<int> hallViolator(int x) {
        std::vector<char> inA(h.nL, 0), seenR(h.nR, 0);
        std::vector<int> stack{x};
        inA[x] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int y : h.adj[u]) {
                if (seenR[y]) continue;
                seenR[y] = 1;
                int u2 = matchR[y]; // augmenting failed, so every neighbour is matched
                if (u2 >= 0 && !inA[u2]) {
                    inA[u2] = 1;
                    stack.push_back(u2);
                }
            }
        }
        std::vector<int> A;
        for (int u = 0; u < h.nL; ++u)
            if (inA[u]) A.push_back(u);
        return A;
    }
};

} // namespace

MatchResult saturating_matching(const BipartiteGraph& h) {
    for (int x = 0; x < h.nL; ++x)
        for (int y : h.adj[x])
            if (y < 0 || y >= h.nR) throw std::invalid_argument("right index out of range");

    Matcher m(h);
    // Greedy seed pass keeps the augmenting phase cheap on easy instances.
    for (int x = 0; x < h.nL; ++x)
        for (int y : h.adj[x]) {
            if (m.matchR[y] == -1) {
                m.matchR[y] = x;
                m.matchL[x] = y;
                break;
            }
        }
    for (int x = 0; x < h.nL; ++x) {
        if (m.matchL[x] != -1) continue;
        std::fill(m.visitedR.begin(), m.visitedR.end(), 0);
        if (!m.augment(x)) {
            MatchResult res;
            res.ok = false;
            res.violator = m.hallViolator(x);
            return res;
        }
    }

    MatchResult res;
    res.ok = true;
    res.matching.d = 1;
    res.matching.leftOf = m.matchR;
    res.matching.rightsOf.assign(h.nL, {});
    for (int x = 0; x < h.nL; ++x) res.matching.rightsOf[x] = {m.matchL[x]};
    return res;
}

MatchResult polygamous_matching(const BipartiteGraph& h, int d) {
    if (d < 1) throw std::invalid_argument("polygamous_matching: d must be positive");

    BipartiteGraph twins;
    twins.nL = h.nL * d;
    twins.nR = h.nR;
    twins.adj.reserve(twins.nL);
    for (int x = 0; x < h.nL; ++x)
        for (int t = 0; t < d; ++t) twins.adj.push_back(h.adj[x]);

    MatchResult sat = saturating_matching(twins);
    MatchResult res;
    if (!sat.ok) {
        res.ok = false;
        std::vector<char> inA(h.nL, 0);
        for (int tx : sat.violator) inA[tx / d] = 1;
        for (int x = 0; x < h.nL; ++x)
            if (inA[x]) res.violator.push_back(x);
        return res;
    }

    res.ok = true;
    res.matching.d = d;
    res.matching.leftOf.assign(h.nR, -1);
    res.matching.rightsOf.assign(h.nL, {});
    for (int tx = 0; tx < twins.nL; ++tx) {
        int y = sat.matching.rightsOf[tx][0];
        res.matching.rightsOf[tx / d].push_back(y);
        res.matching.leftOf[y] = tx / d;
    }
    for (auto& rights : res.matching.rightsOf) std::sort(rights.begin(), rights.end());
    return res;
}

} // namespace linwit
