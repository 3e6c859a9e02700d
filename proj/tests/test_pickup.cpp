#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "linwit/witness.hpp"

using namespace linwit;
using namespace testutil;

namespace {

void check_pickup(const Pseudogrid& pg, const std::vector<int>& path, int s, int t, int v,
                  int w) {
    REQUIRE(check_simple_path(pg, path));
    CHECK(path.front() == s);
    CHECK(path.back() == t);
    CHECK(path_contains(path, v));
    CHECK(path_contains(path, w));
}

} // namespace

TEST_CASE("pick_up_two on the plain 5x5 grid") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(5, 5));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    int s = id(1, 3), t = id(5, 3), v = id(2, 2), w = id(4, 4);
    auto path = pick_up_two(pg, s, v, w, t);
    check_pickup(pg, path, s, t, v, w);
}

TEST_CASE("pick_up_two with a shared-column bent vertex") {
    PseudogridSpec spec(5, 5);
    spec.setVertex(3, 2, VertexKind::Q3, 3);
    Pseudogrid pg = build_pseudogrid(spec);
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    int v = pg.classOf(GridObject::vertex(3, 2))[1]; // an internal of the bent path
    int w = id(3, 4);                                // same column, above
    int s = id(1, 1), t = id(5, 5);
    auto path = pick_up_two(pg, s, v, w, t);
    check_pickup(pg, path, s, t, v, w);
}

TEST_CASE("pick_up_two precondition checks") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(5, 5));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    // s not in the first column
    CHECK_THROWS_AS(pick_up_two(pg, id(2, 2), id(3, 3), id(3, 3), id(5, 1)),
                    std::invalid_argument);
    // target on the boundary
    CHECK_THROWS_AS(pick_up_two(pg, id(1, 1), id(3, 1), id(3, 3), id(5, 1)),
                    std::invalid_argument);
    // window too small
    Pseudogrid tiny = build_pseudogrid(PseudogridSpec(4, 4));
    auto idT = [&](int i, int j) { return tiny.classOf(GridObject::vertex(i, j))[0]; };
    CHECK_THROWS_AS(pick_up_two(tiny, idT(1, 1), idT(2, 2), idT(3, 3), idT(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("pick_up_two exhaustive sweep over kinds, targets and entries") {
    // every interior object pair x replacement-kind combination x a sample of
    // boundary entry/exit points, on 5x5 and 6x6 hosts with subdivided edges
    const std::vector<VertexKind> kinds{VertexKind::Single, VertexKind::Q1, VertexKind::Q2,
                                        VertexKind::Q3};
    long long attempts = 0;
    for (int a : {5, 6}) {
        for (VertexKind kv : kinds)
            for (VertexKind kw : kinds) {
                PseudogridSpec spec(a, a);
                for (int k = spec.a * spec.b; k < GridGraph(a, a).objectCount(); ++k) {
                    GridObject e = GridGraph(a, a).objectAt(k);
                    spec.subdivAt(e) = 1;
                }
                // alternate kinds over the interior; overwrite the two target
                // vertices below per combination
                GridGraph g(a, a);
                for (int j = 2; j < a; ++j)
                    for (int i = 2; i < a; ++i)
                        spec.setVertex(i, j, (i + j) % 2 == 0 ? VertexKind::Q1 : VertexKind::Q3,
                                       2);
                spec.setVertex(2, 2, kv, kv == VertexKind::Single ? 1 : 2);
                spec.setVertex(a - 1, a - 1, kw, kw == VertexKind::Single ? 1 : 2);
                Pseudogrid pg = build_pseudogrid(spec);

                std::vector<int> targetsV, targetsW;
                for (const GridObject& o : interior_objects(pg.grid, 1)) {
                    const auto& cls = pg.classOf(o);
                    if (cls.empty()) continue;
                    targetsV.push_back(cls[cls.size() / 2]);
                }
                targetsW = targetsV;

                std::vector<int> starts, ends;
                for (int j = 1; j <= a; ++j) {
                    starts.push_back(pg.classOf(GridObject::vertex(1, j))[0]);
                    ends.push_back(pg.classOf(GridObject::vertex(a, j))[0]);
                }
                // mid-edge entries on the first/last columns
                starts.push_back(pg.classOf(GridObject::vedge(1, 1))[0]);
                starts.push_back(pg.classOf(GridObject::vedge(1, a - 1))[0]);
                ends.push_back(pg.classOf(GridObject::vedge(a, 1))[0]);
                ends.push_back(pg.classOf(GridObject::vedge(a, a - 1))[0]);

                for (int v : targetsV)
                    for (int w : targetsW) {
                        // sample entries deterministically to keep the sweep fast
                        int s = starts[(size_t)(v + w) % starts.size()];
                        int t = ends[(size_t)(v * 3 + w) % ends.size()];
                        auto path = pick_up_two(pg, s, v, w, t);
                        check_pickup(pg, path, s, t, v, w);
                        ++attempts;
                    }
            }
    }
    CHECK(attempts > 10000);
}

TEST_CASE("make_disjoint on far-apart vertex objects keeps X = S") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(60, 60));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    std::vector<int> S{id(15, 15), id(15, 45), id(45, 15), id(45, 45)};
    DisjointCover cover = make_disjoint(pg, S, 9, 1);
    REQUIRE(cover.centres.size() == 4);
    std::set<int> xs(cover.centres.begin(), cover.centres.end());
    CHECK(xs == std::set<int>(S.begin(), S.end()));
    for (const auto& covered : cover.covered) CHECK(covered.size() == 1);
}

TEST_CASE("make_disjoint covers a close pair with one centre") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(60, 60));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    std::vector<int> S{id(30, 30), id(31, 31)}; // a 2p-pair for p=1
    DisjointCover cover = make_disjoint(pg, S, 9, 1);
    REQUIRE(cover.centres.size() == 1);
    CHECK(cover.covered[0].size() == 2);
    CHECK(in_box(pg.grid, GridObject::vertex(30, 30), cover.centreVertex[0], 1));
    CHECK(in_box(pg.grid, GridObject::vertex(31, 31), cover.centreVertex[0], 1));
}

TEST_CASE("make_disjoint separates a loose pair into two centres") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(60, 60));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    std::vector<int> S{id(30, 30), id(30, 36)}; // an (r-1)-pair but not a 2p-pair
    DisjointCover cover = make_disjoint(pg, S, 9, 1);
    REQUIRE(cover.centres.size() == 2);
    CoordRect b1 = box_rect(pg.grid, cover.centreVertex[0], 2);
    CoordRect b2 = box_rect(pg.grid, cover.centreVertex[1], 2);
    bool disjoint = b1.iHi < b2.iLo || b2.iHi < b1.iLo || b1.jHi < b2.jLo || b2.jHi < b1.jLo;
    CHECK(disjoint);
}

TEST_CASE("make_disjoint rejects bad parameters and crowded sets") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(40, 40));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    CHECK_THROWS_AS(make_disjoint(pg, {id(20, 20)}, 9, 2), std::invalid_argument);
    // boundary elements violate the interior precondition
    CHECK_THROWS_AS(make_disjoint(pg, {id(1, 1)}, 9, 1), std::invalid_argument);
    // three mutually close elements break the at-most-one-pair property
    std::vector<int> S{id(20, 20), id(20, 21), id(21, 20)};
    CHECK_THROWS_AS(make_disjoint(pg, S, 9, 1), std::invalid_argument);
}

TEST_CASE("pick_up_everything with an empty set is the bare snake") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(24, 24));
    auto path = pick_up_everything(pg, {}, 9);
    CHECK(check_simple_path(pg, path));
}

TEST_CASE("pick_up_everything splices one deep pair") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(40, 40));
    auto id = [&](int i, int j) { return pg.classOf(GridObject::vertex(i, j))[0]; };
    std::vector<int> S{id(20, 20), id(21, 21)};
    auto path = pick_up_everything(pg, S, 9);
    CHECK(check_simple_path(pg, path));
    for (int v : S) CHECK(path_contains(path, v));
}

TEST_CASE("pick_up_everything on a random well-separated set at k = 200") {
    Pseudogrid pg = build_pseudogrid(PseudogridSpec(200, 200));
    Rng rng(17);
    // scatter 40 vertices with pairwise object distance beyond 2r
    std::vector<int> S;
    std::vector<GridObject> picked;
    while ((int)S.size() < 40) {
        int i = rng.intIn(10, 190), j = rng.intIn(10, 190);
        GridObject cand = GridObject::vertex(i, j);
        bool clash = false;
        for (const GridObject& o : picked)
            if (in_box(pg.grid, cand, o, 19)) clash = true;
        if (clash) continue;
        picked.push_back(cand);
        S.push_back(pg.classOf(cand)[0]);
    }
    auto path = pick_up_everything(pg, S, 9);
    CHECK(check_simple_path(pg, path));
    for (int v : S) CHECK(path_contains(path, v));
}

TEST_CASE("pick_up_everything on a random pseudogrid host") {
    Rng rng(400);
    Pseudogrid pg = build_pseudogrid(random_pseudogrid_spec(60, 60, rng, 1, 2));
    // pick interior vertices with strong separation
    std::vector<int> S;
    std::vector<GridObject> picked;
    for (int v = 0; v < pg.n && (int)S.size() < 4; ++v) {
        GridObject o = pg.grid.objectAt(pg.owner[v]);
        if (!in_interior(pg.grid, o, 9)) continue;
        bool clash = false;
        for (const GridObject& q : picked)
            if (in_box(pg.grid, o, q, 19) || in_box(pg.grid, q, o, 19)) clash = true;
        if (clash) continue;
        picked.push_back(o);
        S.push_back(v);
    }
    REQUIRE(S.size() == 4);
    auto path = pick_up_everything(pg, S, 9);
    CHECK(check_simple_path(pg, path));
    for (int v : S) CHECK(path_contains(path, v));
}

TEST_CASE("packing census basics") {
    GridGraph g(50, 50);
    CHECK(packing_census({GridObject::vertex(25, 25)}, 10, g) == 1);

    // two objects just beyond the (2r+1) packing distance; anything between
    // them sits in both (3r+1)-boxes
    int r = 10;
    std::vector<GridObject> q{GridObject::vertex(5, 25), GridObject::vertex(5 + 2 * r + 2, 25)};
    CHECK(packing_census(q, r, g) == 2);

    // packing violation is rejected
    std::vector<GridObject> bad{GridObject::vertex(5, 25), GridObject::vertex(6, 25)};
    CHECK_THROWS_AS(packing_census(bad, r, g), std::invalid_argument);
}
