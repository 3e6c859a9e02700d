#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "linwit/bipartite.hpp"
#include "linwit/rng.hpp"

using namespace linwit;

namespace {

// Exhaustive oracle: does H admit an assignment of d distinct rights to every
// left vertex, rights disjoint across lefts?
bool brute_dfold(const BipartiteGraph& h, int d, int x = 0, std::set<int> taken = {}) {
    if (x == h.nL) return true;
    const auto& opts = h.adj[x];
    std::vector<int> pick;
    std::function<bool(size_t, int)> choose = [&](size_t from, int need) -> bool {
        if (need == 0) {
            std::set<int> next = taken;
            next.insert(pick.begin(), pick.end());
            return brute_dfold(h, d, x + 1, next);
        }
        for (size_t t = from; t < opts.size(); ++t) {
            if (taken.count(opts[t])) continue;
            pick.push_back(opts[t]);
            if (choose(t + 1, need - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(0, d);
}

int neighbourhood_size(const BipartiteGraph& h, const std::vector<int>& A) {
    std::set<int> n;
    for (int x : A) n.insert(h.adj[x].begin(), h.adj[x].end());
    return (int)n.size();
}

void check_matching_shape(const BipartiteGraph& h, const DegreeMatching& m, int d) {
    std::set<int> rightsSeen;
    for (int x = 0; x < h.nL; ++x) {
        CHECK((int)m.rightsOf[x].size() == d);
        for (int y : m.rightsOf[x]) {
            CHECK(std::find(h.adj[x].begin(), h.adj[x].end(), y) != h.adj[x].end());
            CHECK(rightsSeen.insert(y).second); // right degree <= 1
            CHECK(m.leftOf[y] == x);
        }
    }
}

BipartiteGraph random_instance(Rng& rng, int maxL, int maxR) {
    BipartiteGraph h;
    h.nL = rng.intIn(1, maxL);
    h.nR = rng.intIn(1, maxR);
    h.adj.assign(h.nL, {});
    for (int x = 0; x < h.nL; ++x)
        for (int y = 0; y < h.nR; ++y)
            if (rng.below(100) < 45) h.adj[x].push_back(y);
    return h;
}

} // namespace

TEST_CASE("saturating matching basics") {
    BipartiteGraph single{1, 1, {{0}}};
    MatchResult res = saturating_matching(single);
    REQUIRE(res.ok);
    CHECK(res.matching.rightsOf[0] == std::vector<int>{0});

    BipartiteGraph pinched{2, 1, {{0}, {0}}};
    res = saturating_matching(pinched);
    REQUIRE(!res.ok);
    CHECK(res.violator == std::vector<int>{0, 1}); // |N({a,b})| = 1 < 2
}

TEST_CASE("saturating matching agrees with brute force on random instances") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        BipartiteGraph h = random_instance(rng, 6, 6);
        MatchResult res = saturating_matching(h);
        bool feasible = brute_dfold(h, 1);
        CHECK(res.ok == feasible);
        if (res.ok)
            check_matching_shape(h, res.matching, 1);
        else
            CHECK(neighbourhood_size(h, res.violator) < (int)res.violator.size());
    }
}

TEST_CASE("polygamous matching basics") {
    BipartiteGraph two{1, 2, {{0, 1}}};
    MatchResult res = polygamous_matching(two, 2);
    REQUIRE(res.ok);
    CHECK(res.matching.rightsOf[0] == std::vector<int>{0, 1});

    BipartiteGraph three{2, 3, {{0, 1, 2}, {0, 1, 2}}};
    res = polygamous_matching(three, 2);
    REQUIRE(!res.ok);
    CHECK(res.violator == std::vector<int>{0, 1}); // 3 < 2*2
    CHECK(neighbourhood_size(three, res.violator) < 2 * (int)res.violator.size());
}

TEST_CASE("polygamous matching agrees with the exhaustive oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        BipartiteGraph h = random_instance(rng, 5, 12);
        int d = rng.intIn(2, 3);
        MatchResult res = polygamous_matching(h, d);
        CHECK(res.ok == brute_dfold(h, d));
        if (res.ok)
            check_matching_shape(h, res.matching, d);
        else
            CHECK(neighbourhood_size(h, res.violator) < d * (int)res.violator.size());
    }
}

TEST_CASE("certificate dichotomy") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        BipartiteGraph h = random_instance(rng, 5, 8);
        MatchResult res = polygamous_matching(h, 2);
        if (res.ok) {
            CHECK(res.violator.empty());
        } else {
            CHECK(!res.violator.empty());
            CHECK(res.matching.rightsOf.empty());
        }
    }
}
