#include "linwit/witness.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace linwit {

namespace {

GridObject object_of(const Pseudogrid& pg, int v) { return pg.grid.objectAt(pg.owner[v]); }

std::string obj_str(const GridObject& o) {
    const char* k = o.kind == ObjKind::Vertex ? "v" : o.kind == ObjKind::HEdge ? "h" : "v|";
    return std::string(k) + "(" + std::to_string(o.i) + "," + std::to_string(o.j) + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// prune_to_frequent

PruneResult prune_to_frequent(const Pseudogrid& pg0, const Colouring& col0, int d, int r) {
    if (pg0.grid.a != pg0.grid.b)
        throw std::invalid_argument("prune_to_frequent needs a square pseudogrid");
    if (d < 1 || r < 0) throw std::invalid_argument("bad pruning parameters");
    if ((int)col0.colourOf.size() != pg0.n)
        throw std::invalid_argument("colouring not total on the pseudogrid");

    int k0 = pg0.grid.a;
    auto used0 = colours_used(col0);
    if ((long long)used0.size() * (d + 2 * r) > k0)
        throw StageError("prune", "colour count " + std::to_string(used0.size()) +
                                      " exceeds k/(d+2r) = " +
                                      std::to_string(k0 / (d + 2 * r)));

    PruneResult res;
    res.pg = pg0;
    res.colouring = col0;
    res.origOf.resize(pg0.n);
    for (int v = 0; v < pg0.n; ++v) res.origOf[v] = v;

    for (;;) {
        auto used = colours_used(res.colouring);
        if (used.empty()) throw StageError("prune", "pruning removed every colour");
        ColourProfile prof = profile(res.pg, res.colouring);
        auto violator = deficiency_set(prof, used, d, r, res.pg.grid);
        if (!violator) break;

        int k = res.pg.grid.a;
        std::set<int> rows, cols;
        for (int alpha : *violator)
            for (int objIdx : prof.objectsOf[alpha]) {
                GridObject o = res.pg.grid.objectAt(objIdx);
                if (!in_interior(res.pg.grid, o, r)) continue;
                switch (o.kind) {
                case ObjKind::Vertex:
                    rows.insert(o.j);
                    cols.insert(o.i);
                    break;
                case ObjKind::HEdge:
                    rows.insert(o.j);
                    break;
                case ObjKind::VEdge:
                    // a vertical edge-path lies in a column
                    cols.insert(o.i);
                    break;
                }
            }
        for (int t = 1; t <= r && t <= k; ++t) {
            rows.insert(t);
            rows.insert(k + 1 - t);
            cols.insert(t);
            cols.insert(k + 1 - t);
        }
        // pad with the smallest unused lines until |rows| == |cols|
        for (int j = 1; rows.size() < cols.size() && j <= k; ++j) rows.insert(j);
        for (int i = 1; cols.size() < rows.size() && i <= k; ++i) cols.insert(i);
        if (rows.size() != cols.size() || (int)rows.size() >= k - 1)
            throw StageError("prune", "pruning exhausts the grid");

        std::vector<int> rowList(rows.begin(), rows.end());
        std::vector<int> colList(cols.begin(), cols.end());
        auto applyDeletion = [&](Axis axis, int index) {
            DeleteResult dr = delete_line(res.pg, axis, index);
            std::vector<int> orig(dr.pg.n);
            Colouring ccol;
            ccol.numColours = res.colouring.numColours;
            ccol.colourOf.resize(dr.pg.n);
            for (int v = 0; v < dr.pg.n; ++v) {
                orig[v] = res.origOf[dr.origOf[v]];
                ccol.colourOf[v] = res.colouring.colourOf[dr.origOf[v]];
            }
            res.pg = std::move(dr.pg);
            res.origOf = std::move(orig);
            res.colouring = std::move(ccol);
        };
        for (auto it = rowList.rbegin(); it != rowList.rend(); ++it) {
            if (res.pg.grid.b < 3) throw StageError("prune", "pruning exhausts the grid");
            applyDeletion(Axis::Row, *it);
        }
        for (auto it = colList.rbegin(); it != colList.rend(); ++it) {
            if (res.pg.grid.a < 3) throw StageError("prune", "pruning exhausts the grid");
            applyDeletion(Axis::Column, *it);
        }
    }

    res.kPrime = res.pg.grid.a;
    if (res.kPrime != res.pg.grid.b)
        throw std::runtime_error("pruning lost squareness");
    if (res.kPrime < k0 - (d + 2 * r) * (int)used0.size())
        throw std::runtime_error("pruning deleted more lines than the bound allows");
    return res;
}

// ---------------------------------------------------------------------------
// choose_representatives

RepColouring choose_representatives(const Pseudogrid& pg, const Colouring& col, int d, int r) {
    ColourProfile prof = profile(pg, col);
    auto used = colours_used(col);
    const GridGraph& g = pg.grid;
    CoordRect inner = interior_rect(g, r);

    std::vector<int> rightObj; // right index -> object index
    std::vector<int> rightIndex(g.objectCount(), -1);
    BipartiteGraph h;
    h.nL = (int)used.size();
    h.adj.assign(h.nL, {});
    for (int x = 0; x < h.nL; ++x)
        for (int objIdx : prof.objectsOf[used[x]]) {
            if (!inner.containsObject(g.objectAt(objIdx))) continue;
            if (rightIndex[objIdx] == -1) {
                rightIndex[objIdx] = (int)rightObj.size();
                rightObj.push_back(objIdx);
            }
            h.adj[x].push_back(rightIndex[objIdx]);
        }
    h.nR = (int)rightObj.size();
    // Present candidates in a fixed hash-scattered order so the matched
    // representatives spread across the interior instead of clustering in the
    // first rows; any d-regular matching satisfies the contract, but spread
    // picks is what lets the greedy separation round work at practical d.
    for (auto& row : h.adj)
        std::sort(row.begin(), row.end(), [&](int y1, int y2) {
            return mix64((uint64_t)rightObj[y1]) < mix64((uint64_t)rightObj[y2]);
        });

    MatchResult res = polygamous_matching(h, d);
    if (!res.ok)
        throw StageError("representatives",
                         "matching violator of size " + std::to_string(res.violator.size()) +
                             " (deficiency precondition broken)");

    RepColouring rep;
    rep.colourOf.assign(g.objectCount(), -1);
    for (int x = 0; x < h.nL; ++x)
        for (int y : res.matching.rightsOf[x]) rep.colourOf[rightObj[y]] = used[x];
    return rep;
}

// ---------------------------------------------------------------------------
// greedy_round1

Round1Result greedy_round1(const RepColouring& rep, int r, const GridGraph& g) {
    std::unordered_map<int, std::vector<int>> perColour;
    std::vector<int> coloursPresent;
    for (int objIdx = 0; objIdx < (int)rep.colourOf.size(); ++objIdx) {
        int alpha = rep.colourOf[objIdx];
        if (alpha < 0) continue;
        auto [it, fresh] = perColour.try_emplace(alpha);
        if (fresh) coloursPresent.push_back(alpha);
        it->second.push_back(objIdx);
    }
    std::sort(coloursPresent.begin(), coloursPresent.end());

    int R = 2 * r + 1;
    std::vector<char> blocked(g.objectCount(), 0);
    Round1Result out;

    auto blockBox = [&](int objIdx) {
        for (const GridObject& nu : box_objects(g, g.objectAt(objIdx), R))
            blocked[g.objectIndex(nu)] = 1;
    };

    for (int alpha : coloursPresent) {
        const auto& cand = perColour[alpha];
        bool settled = false;
        for (size_t s1 = 0; s1 < cand.size() && !settled; ++s1) {
            int mu1 = cand[s1];
            if (blocked[mu1]) continue;
            GridObject o1 = g.objectAt(mu1);
            for (size_t s2 = s1 + 1; s2 < cand.size() && !settled; ++s2) {
                int mu2 = cand[s2];
                if (blocked[mu2]) continue;
                GridObject o2 = g.objectAt(mu2);
                if (in_box(g, o2, o1, R) || in_box(g, o1, o2, R)) continue;
                // keep the stronger invariant: no established pick may lie in
                // the new boxes either
                bool clash = false;
                for (int q : out.q1) {
                    GridObject oq = g.objectAt(q);
                    if (in_box(g, oq, o1, R) || in_box(g, oq, o2, R)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                out.q1.push_back(mu1);
                out.q1.push_back(mu2);
                out.successes.push_back(alpha);
                blockBox(mu1);
                blockBox(mu2);
                settled = true;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// claiming_round2

ClaimGraph claiming_round2(const std::vector<int>& order, const std::vector<int>& failed,
                           const RepColouring& rep, int r, const GridGraph& g) {
    for (size_t x = 0; x < order.size(); ++x)
        for (size_t y = x + 1; y < order.size(); ++y)
            if (in_box(g, g.objectAt(order[x]), g.objectAt(order[y]), 2 * r + 1) ||
                in_box(g, g.objectAt(order[y]), g.objectAt(order[x]), 2 * r + 1))
                throw std::invalid_argument("claiming_round2: picks are not (2r+1)-separated");

    ClaimGraph cg;
    cg.colours = failed;
    cg.order = order;
    cg.adj.assign(failed.size(), {});
    cg.claimed.assign(failed.size(), std::vector<int>(order.size(), -1));

    std::unordered_map<int, int> colourIndex;
    for (size_t x = 0; x < failed.size(); ++x) colourIndex[failed[x]] = (int)x;

    std::vector<char> marked(g.objectCount(), 0);
    for (size_t pos = 0; pos < order.size(); ++pos) {
        GridObject mu = g.objectAt(order[pos]);
        CoordRect inner = box_rect(g, mu, r);
        // claim the unmarked objects of the (2r+1)-box, preferring claims
        // from the r-box, then mark the (3r+1)-box
        for (const GridObject& nu : box_objects(g, mu, 2 * r + 1)) {
            int nuIdx = g.objectIndex(nu);
            if (marked[nuIdx]) continue;
            int alpha = rep.colourOf[nuIdx];
            if (alpha < 0) continue;
            auto it = colourIndex.find(alpha);
            if (it == colourIndex.end()) continue;
            int& slot = cg.claimed[it->second][pos];
            auto rank = [&](int objIdx) {
                GridObject o = g.objectAt(objIdx);
                return std::pair<int, int>(inner.containsObject(o) ? 0 : 1, objIdx);
            };
            if (slot == -1 || rank(nuIdx) < rank(slot)) slot = nuIdx;
        }
        for (const GridObject& nu : box_objects(g, mu, 3 * r + 1))
            marked[g.objectIndex(nu)] = 1;
    }
    for (size_t x = 0; x < failed.size(); ++x)
        for (size_t pos = 0; pos < order.size(); ++pos)
            if (cg.claimed[x][pos] != -1) cg.adj[x].push_back((int)pos);
    return cg;
}

// ---------------------------------------------------------------------------
// doubled_colour_set

namespace {

// |VE(G_r(mu)) ∩ Q| <= 2 for every mu in Q.
bool spread_ok(const std::vector<int>& q, int r, const GridGraph& g) {
    for (int mu : q) {
        GridObject o = g.objectAt(mu);
        CoordRect rect = box_rect(g, o, r);
        int inside = 0;
        for (int nu : q)
            if (rect.containsObject(g.objectAt(nu))) ++inside;
        if (inside > 2) return false;
    }
    return true;
}

} // namespace

std::vector<int> doubled_colour_set(const Pseudogrid& pg, const Colouring& col,
                                    const RepColouring& rep, const PipelineParams& params,
                                    Rng& rng, Telemetry& telemetry) {
    const GridGraph& g = pg.grid;
    int r = params.r;

    Round1Result round1 = greedy_round1(rep, r, g);
    telemetry.q1 = (int)round1.q1.size();

    auto used = colours_used(col);
    std::vector<int> failed;
    std::set_difference(used.begin(), used.end(), round1.successes.begin(),
                        round1.successes.end(), std::back_inserter(failed));
    telemetry.x = (int)failed.size();

    std::vector<int> q = round1.q1;
    telemetry.q2 = 0;
    telemetry.retries = 0;

    if (!failed.empty()) {
        bool settled = false;
        for (int attempt = 0; attempt < params.retryBudget && !settled; ++attempt) {
            telemetry.retries = attempt;
            std::vector<int> pi = round1.q1;
            rng.shuffle(pi);
            ClaimGraph cg = claiming_round2(pi, failed, rep, r, g);

            BipartiteGraph h;
            h.nL = (int)failed.size();
            h.nR = (int)pi.size();
            h.adj = cg.adj;
            MatchResult m = polygamous_matching(h, 2);
            if (!m.ok) continue;

            std::vector<int> q2;
            for (int x = 0; x < h.nL; ++x)
                for (int pos : m.matching.rightsOf[x]) q2.push_back(cg.claimed[x][pos]);

            std::vector<int> trial = round1.q1;
            trial.insert(trial.end(), q2.begin(), q2.end());
            std::sort(trial.begin(), trial.end());
            if (std::adjacent_find(trial.begin(), trial.end()) != trial.end())
                throw std::runtime_error("claimed object coincides with a round-1 pick");
            if (!spread_ok(trial, r, g)) continue;

            q = std::move(trial);
            telemetry.q2 = (int)q2.size();
            settled = true;
        }
        if (!settled) {
            telemetry.retries = params.retryBudget;
            throw StageError("doubled", "retry budget exhausted after " +
                                            std::to_string(params.retryBudget) +
                                            " permutations");
        }
    } else {
        std::sort(q.begin(), q.end());
        if (!spread_ok(q, r, g))
            throw std::runtime_error("round-1 picks violate the spread property");
    }

    // one vertex of the representative colour from each selected object
    std::sort(q.begin(), q.end());
    std::vector<int> s;
    s.reserve(q.size());
    for (int mu : q) {
        int alpha = rep.colourOf[mu];
        int chosen = -1;
        for (int v : pg.classes[mu])
            if (col.colourOf[v] == alpha && (chosen == -1 || v < chosen)) chosen = v;
        if (chosen == -1)
            throw std::runtime_error("representative colour missing from its class at " +
                                     obj_str(g.objectAt(mu)));
        s.push_back(chosen);
    }
    std::sort(s.begin(), s.end());

    // direct audit of the two stated properties
    std::unordered_map<int, int> perColour;
    for (int v : s) ++perColour[col.colourOf[v]];
    for (int alpha : used)
        if (perColour[alpha] != 2)
            throw std::runtime_error("doubled set misses colour " + std::to_string(alpha));
    telemetry.s = (int)s.size();
    return s;
}

// ---------------------------------------------------------------------------
// make_disjoint

namespace {

bool rects_disjoint(const CoordRect& x, const CoordRect& y) {
    return x.iHi < y.iLo || y.iHi < x.iLo || x.jHi < y.jLo || y.jHi < x.jLo;
}

bool objects_pair(const GridGraph& g, const GridObject& a, const GridObject& b, int q) {
    return in_box(g, a, b, q) || in_box(g, b, a, q);
}

} // namespace

DisjointCover make_disjoint(const Pseudogrid& pg, const std::vector<int>& S, int r, int p) {
    const GridGraph& g = pg.grid;
    if (p < 1 || r - 1 < 4 * p + 4)
        throw std::invalid_argument("make_disjoint needs 1 <= p and 4p+4 <= r-1");
    CoordRect inner = interior_rect(g, r);
    for (int v : S)
        if (!inner.containsObject(object_of(pg, v)))
            throw std::invalid_argument("make_disjoint: element outside the r-interior");

    std::vector<int> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end());

    for (int v : sorted) {
        int inside = 0;
        for (int w : sorted)
            if (in_box(g, object_of(pg, w), object_of(pg, v), r)) ++inside;
        if (inside > 2)
            throw std::invalid_argument("make_disjoint: an r-box holds three elements of S");
    }

    // each element has at most one (r-1)-pair partner
    int n = (int)sorted.size();
    std::vector<int> partner(n, -1);
    for (int x = 0; x < n; ++x) {
        GridObject ox = object_of(pg, sorted[x]);
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (objects_pair(g, ox, object_of(pg, sorted[y]), r - 1)) {
                if (partner[x] != -1)
                    throw std::invalid_argument(
                        "make_disjoint: an element takes part in two (r-1)-pairs");
                partner[x] = y;
            }
        }
    }

    // grid vertices m with mu inside the p-box around m, in scan order
    auto coverCandidates = [&](const GridObject& mu) {
        std::vector<GridObject> out;
        int iHi = mu.kind == ObjKind::HEdge ? mu.i + 1 : mu.i;
        int jHi = mu.kind == ObjKind::VEdge ? mu.j + 1 : mu.j;
        for (int j = std::max(1, mu.j - p); j <= std::min(g.b, jHi + p); ++j)
            for (int i = std::max(1, mu.i - p); i <= std::min(g.a, iHi + p); ++i) {
                GridObject m = GridObject::vertex(i, j);
                if (in_box(g, mu, m, p)) out.push_back(m);
            }
        return out;
    };

    DisjointCover cover;
    auto addCentre = [&](const GridObject& m, std::vector<int> covered) {
        cover.centres.push_back(pg.classOf(m).front());
        cover.centreVertex.push_back(m);
        cover.covered.push_back(std::move(covered));
    };

    for (int x = 0; x < n; ++x) {
        int v = sorted[x];
        GridObject ov = object_of(pg, v);
        if (partner[x] == -1) {
            // covers itself; edge classes borrow an endpoint's class for x
            GridObject m = ov.isVertex() ? ov : GridObject::vertex(ov.i, ov.j);
            if (ov.isVertex())
                cover.centres.push_back(v);
            else
                cover.centres.push_back(pg.classOf(m).front());
            cover.centreVertex.push_back(m);
            cover.covered.push_back({v});
            continue;
        }
        if (partner[x] < x) continue; // handled with its mate
        int w = sorted[partner[x]];
        GridObject ow = object_of(pg, w);

        if (objects_pair(g, ov, ow, 2 * p)) {
            // one shared centre holds both
            bool placed = false;
            for (const GridObject& m : coverCandidates(ov))
                if (in_box(g, ow, m, p)) {
                    addCentre(m, {v, w});
                    placed = true;
                    break;
                }
            if (!placed)
                throw StageError("disjoint", "no shared centre for a 2p-pair at " + obj_str(ov));
        } else {
            // two centres with disjoint (p+1)-boxes
            bool placed = false;
            auto candV = coverCandidates(ov);
            auto candW = coverCandidates(ow);
            for (const GridObject& m1 : candV) {
                CoordRect b1 = box_rect(g, m1, p + 1);
                for (const GridObject& m2 : candW)
                    if (rects_disjoint(b1, box_rect(g, m2, p + 1))) {
                        addCentre(m1, {v});
                        addCentre(m2, {w});
                        placed = true;
                        break;
                    }
                if (placed) break;
            }
            if (!placed)
                throw StageError("disjoint",
                                 "no separated centres for an (r-1)-pair at " + obj_str(ov));
        }
    }

    // direct audit of the three stated properties
    for (size_t c = 0; c < cover.centres.size(); ++c) {
        int within = 0;
        for (int s : sorted)
            if (in_box(g, object_of(pg, s), cover.centreVertex[c], p)) ++within;
        if (within > 2) throw StageError("disjoint", "a p-box covers three elements");
        for (int s : cover.covered[c])
            if (!in_box(g, object_of(pg, s), cover.centreVertex[c], p))
                throw StageError("disjoint", "cover map inconsistent");
    }
    for (size_t c1 = 0; c1 < cover.centres.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < cover.centres.size(); ++c2)
            if (!rects_disjoint(box_rect(g, cover.centreVertex[c1], p + 1),
                                box_rect(g, cover.centreVertex[c2], p + 1)))
                throw StageError("disjoint", "(p+1)-boxes intersect");
    return cover;
}

// ---------------------------------------------------------------------------
// pick_up_two

namespace {

Dir dir_to(const GridObject& from, const GridObject& to) {
    if (to.i == from.i + 1) return Dir::East;
    if (to.i == from.i - 1) return Dir::West;
    if (to.j == from.j + 1) return Dir::Up;
    return Dir::Down;
}

GridObject edge_between(const GridObject& u, const GridObject& w) {
    if (u.j == w.j) return GridObject::hedge(std::min(u.i, w.i), u.j);
    return GridObject::vedge(u.i, std::min(u.j, w.j));
}

int position_in(const std::vector<int>& cls, int v) {
    for (size_t t = 0; t < cls.size(); ++t)
        if (cls[t] == v) return (int)t;
    throw std::logic_error("vertex not in its class");
}

// Lift a simple grid path to the pseudogrid path from s to t. Every traversed
// grid edge contributes its whole chain; a grid vertex contributes the
// subchain between its entry and exit ports. s and t may live mid-chain on an
// incident edge class, in which case a partial head/tail walk is emitted.
std::vector<int> lift_grid_path(const Pseudogrid& pg, const std::vector<GridObject>& gpath,
                                int s, int t) {
    const GridGraph& g = pg.grid;
    std::vector<int> out;

    auto emitSegment = [&](const std::vector<int>& cls, int fromV, int toV) {
        int x = position_in(cls, fromV), y = position_in(cls, toV);
        if (x <= y)
            for (int k = x; k <= y; ++k) out.push_back(cls[k]);
        else
            for (int k = x; k >= y; --k) out.push_back(cls[k]);
    };

    int entryVertex;
    GridObject first = gpath.front();
    if (pg.owner[s] == g.objectIndex(first)) {
        entryVertex = s;
    } else {
        // s sits inside an edge class incident to the first grid vertex
        GridObject e = g.objectAt(pg.owner[s]);
        GridObject lo = GridObject::vertex(e.i, e.j);
        GridObject hi = e.kind == ObjKind::HEdge ? GridObject::vertex(e.i + 1, e.j)
                                                 : GridObject::vertex(e.i, e.j + 1);
        bool firstIsHi = first == hi;
        if (!firstIsHi && !(first == lo))
            throw std::invalid_argument("start vertex not incident to the path head");
        const auto& cls = pg.classOf(e);
        int idx = position_in(cls, s);
        if (firstIsHi)
            for (int k = idx; k < (int)cls.size(); ++k) out.push_back(cls[k]);
        else
            for (int k = idx; k >= 0; --k) out.push_back(cls[k]);
        GridObject other = firstIsHi ? lo : hi;
        entryVertex = pg.port(first.i, first.j, dir_to(first, other));
    }

    for (size_t k = 0; k < gpath.size(); ++k) {
        const GridObject& cur = gpath[k];
        const auto& cls = pg.classOf(cur);
        int exitVertex;
        bool tailIntoEdge = false;
        if (k + 1 < gpath.size()) {
            exitVertex = pg.port(cur.i, cur.j, dir_to(cur, gpath[k + 1]));
        } else if (pg.owner[t] == g.objectIndex(cur)) {
            exitVertex = t;
        } else {
            GridObject e = g.objectAt(pg.owner[t]);
            GridObject lo = GridObject::vertex(e.i, e.j);
            GridObject hi = e.kind == ObjKind::HEdge ? GridObject::vertex(e.i + 1, e.j)
                                                     : GridObject::vertex(e.i, e.j + 1);
            bool curIsHi = cur == hi;
            if (!curIsHi && !(cur == lo))
                throw std::invalid_argument("end vertex not incident to the path tail");
            GridObject other = curIsHi ? lo : hi;
            exitVertex = pg.port(cur.i, cur.j, dir_to(cur, other));
            tailIntoEdge = true;
        }
        emitSegment(cls, entryVertex, exitVertex);
        if (k + 1 < gpath.size()) {
            GridObject e = edge_between(cur, gpath[k + 1]);
            const auto& internals = pg.classOf(e);
            bool forward = cur.i < gpath[k + 1].i || cur.j < gpath[k + 1].j;
            if (forward)
                out.insert(out.end(), internals.begin(), internals.end());
            else
                out.insert(out.end(), internals.rbegin(), internals.rend());
            entryVertex = pg.port(gpath[k + 1].i, gpath[k + 1].j, dir_to(gpath[k + 1], cur));
        } else if (tailIntoEdge) {
            GridObject e = g.objectAt(pg.owner[t]);
            const auto& cls2 = pg.classOf(e);
            int idx = position_in(cls2, t);
            bool fromHi = cur == (e.kind == ObjKind::HEdge ? GridObject::vertex(e.i + 1, e.j)
                                                           : GridObject::vertex(e.i, e.j + 1));
            if (fromHi)
                for (int k2 = (int)cls2.size() - 1; k2 >= idx; --k2) out.push_back(cls2[k2]);
            else
                for (int k2 = 0; k2 <= idx; ++k2) out.push_back(cls2[k2]);
        }
    }
    return out;
}

bool path_valid(const Pseudogrid& pg, const std::vector<int>& path, int s, int t, int v, int w,
                const CoordRect& rect) {
    if (path.empty() || path.front() != s || path.back() != t) return false;
    std::vector<int> copy = path;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) return false;
    for (size_t k = 1; k < path.size(); ++k)
        if (!pg.hasEdge(path[k - 1], path[k])) return false;
    if (!std::binary_search(copy.begin(), copy.end(), v)) return false;
    if (!std::binary_search(copy.begin(), copy.end(), w)) return false;
    for (int u : path)
        if (!rect.containsObject(pg.grid.objectAt(pg.owner[u]))) return false;
    return true;
}

// A full-height column sweep with up to two horizontal jogs. Together with
// the boundary approach legs these realize the generic
// boundary-column-column route; the jog shape encodes how a replaced vertex
// must be passed (straight through for Q1/Q2, an L-turn for Q3).
struct Sweep {
    struct Jog {
        int row;
        int toCol;
    };
    int col0 = 0;
    std::vector<Jog> jogs;
    int colEnd = 0;
};

struct RouteBuilder {
    CoordRect rect;
    std::vector<char> used;
    std::vector<GridObject> path;
    bool ok = true;
    int ci = 0, cj = 0;

    explicit RouteBuilder(const CoordRect& r)
        : rect(r), used(size_t(r.iHi - r.iLo + 1) * size_t(r.jHi - r.jLo + 1), 0) {}

    char& usedAt(int i, int j) {
        return used[size_t(j - rect.jLo) * size_t(rect.iHi - rect.iLo + 1) + size_t(i - rect.iLo)];
    }
    void start(int i, int j) {
        if (!rect.containsVertex(i, j)) {
            ok = false;
            return;
        }
        ci = i;
        cj = j;
        usedAt(i, j) = 1;
        path.push_back(GridObject::vertex(i, j));
    }
    void step(int di, int dj) {
        if (!ok) return;
        int i = ci + di, j = cj + dj;
        if (!rect.containsVertex(i, j) || usedAt(i, j)) {
            ok = false;
            return;
        }
        ci = i;
        cj = j;
        usedAt(i, j) = 1;
        path.push_back(GridObject::vertex(i, j));
    }
    void walkVert(int j2) {
        while (ok && cj != j2) step(0, cj < j2 ? 1 : -1);
    }
    void walkHoriz(int i2) {
        while (ok && ci != i2) step(ci < i2 ? 1 : -1, 0);
    }
};

// Execute a sweep from the current position (assumed at col0 on startRow or a
// merged entry row) toward the far boundary row, or exitRow when given.
void exec_sweep(RouteBuilder& rb, const Sweep& sw, bool up, const int* exitRow) {
    const CoordRect& rect = rb.rect;
    for (const Sweep::Jog& jog : sw.jogs) {
        rb.walkVert(jog.row);
        rb.walkHoriz(jog.toCol);
    }
    rb.walkVert(exitRow ? *exitRow : (up ? rect.jHi : rect.jLo));
}

enum class ReqType { FreeVertex, StraightPass, BentTurn, EdgeH, EdgeV };

struct Req {
    ReqType type;
    GridObject obj;
};

Req requirement_of(const Pseudogrid& pg, const GridObject& o) {
    if (o.kind == ObjKind::HEdge) return {ReqType::EdgeH, o};
    if (o.kind == ObjKind::VEdge) return {ReqType::EdgeV, o};
    switch (pg.effectiveKind(o.i, o.j)) {
    case VertexKind::Single: return {ReqType::FreeVertex, o};
    case VertexKind::Q3: return {ReqType::BentTurn, o};
    default: return {ReqType::StraightPass, o};
    }
}

std::vector<Sweep> req_variants(const Req& rq, const CoordRect& rect) {
    std::vector<Sweep> out;
    int c = rq.obj.i, y = rq.obj.j;
    auto colOk = [&](int col) { return col >= rect.iLo && col <= rect.iHi; };
    switch (rq.type) {
    case ReqType::FreeVertex:
    case ReqType::StraightPass:
        out.push_back({c, {}, c});
        if (colOk(c - 1) && colOk(c + 1)) {
            out.push_back({c - 1, {{y, c + 1}}, c + 1});
            out.push_back({c + 1, {{y, c - 1}}, c - 1});
        }
        break;
    case ReqType::EdgeV:
        out.push_back({c, {}, c});
        break;
    case ReqType::EdgeH:
        out.push_back({c, {{y, c + 1}}, c + 1});
        out.push_back({c + 1, {{y, c}}, c});
        break;
    case ReqType::BentTurn:
        if (colOk(c - 1)) out.push_back({c - 1, {{y, c}}, c});
        if (colOk(c + 1)) out.push_back({c, {{y, c + 1}}, c + 1});
        if (colOk(c - 1)) out.push_back({c, {{y, c - 1}}, c - 1});
        if (colOk(c + 1)) out.push_back({c + 1, {{y, c}}, c});
        break;
    }
    return out;
}

struct Plan {
    std::vector<Sweep> sweeps; // one or two
};

std::vector<Plan> route_plans(const Req& rv, const Req& rw, const CoordRect& rect,
                              bool sameObject) {
    std::vector<Sweep> vv = req_variants(rv, rect);
    std::vector<Sweep> vw = req_variants(rw, rect);
    std::vector<Plan> plans;

    if (sameObject) {
        for (const Sweep& s : vv) plans.push_back({{s}});
        return plans;
    }
    // joint single sweeps covering both requirements
    auto compose = [&](const Sweep& a, const Sweep& b) {
        if (a.colEnd != b.col0) return;
        Sweep joint{a.col0, a.jogs, b.colEnd};
        joint.jogs.insert(joint.jogs.end(), b.jogs.begin(), b.jogs.end());
        plans.push_back({{joint}});
    };
    for (const Sweep& a : vv)
        for (const Sweep& b : vw) compose(a, b);
    for (const Sweep& b : vw)
        for (const Sweep& a : vv) compose(b, a);
    // one sweep may cover both targets on its own track
    for (const Sweep& s : vv) plans.push_back({{s}});
    for (const Sweep& s : vw) plans.push_back({{s}});
    // two sweeps with a boundary transfer
    for (const Sweep& a : vv)
        for (const Sweep& b : vw) plans.push_back({{a, b}});
    for (const Sweep& a : vw)
        for (const Sweep& b : vv) plans.push_back({{a, b}});
    return plans;
}

std::optional<std::vector<GridObject>> assemble_route(const CoordRect& rect,
                                                      const GridObject& gs,
                                                      const GridObject& gt, const Plan& plan,
                                                      bool firstUp) {
    RouteBuilder rb(rect);
    rb.start(gs.i, gs.j);

    const Sweep& A = plan.sweeps.front();
    bool mergedExit = plan.sweeps.back().colEnd == rect.iHi;
    int exitRow = gt.j;

    if (A.col0 == rect.iLo) {
        // merged entry: the sweep starts right at s
        exec_sweep(rb, A, firstUp, plan.sweeps.size() == 1 && mergedExit ? &exitRow : nullptr);
    } else {
        rb.walkVert(firstUp ? rect.jLo : rect.jHi);
        rb.walkHoriz(A.col0);
        exec_sweep(rb, A, firstUp, plan.sweeps.size() == 1 && mergedExit ? &exitRow : nullptr);
    }
    if (plan.sweeps.size() == 2) {
        const Sweep& B = plan.sweeps[1];
        rb.walkHoriz(B.col0);
        exec_sweep(rb, B, !firstUp, mergedExit ? &exitRow : nullptr);
    }
    if (!mergedExit) {
        rb.walkHoriz(rect.iHi);
        rb.walkVert(gt.j);
    }
    if (!rb.ok || rb.path.back() != gt) return std::nullopt;
    return rb.path;
}

std::vector<GridObject> grid_endpoint_choices(const Pseudogrid& pg, int vtx, int wantColumn,
                                              const CoordRect& rect) {
    GridObject o = pg.grid.objectAt(pg.owner[vtx]);
    std::vector<GridObject> out;
    if (o.isVertex()) {
        if (o.i == wantColumn && rect.containsObject(o)) out.push_back(o);
    } else if (o.kind == ObjKind::VEdge && o.i == wantColumn && rect.containsObject(o)) {
        out.push_back(GridObject::vertex(o.i, o.j));
        out.push_back(GridObject::vertex(o.i, o.j + 1));
    }
    return out;
}

} // namespace

std::vector<int> pick_up_two(const Pseudogrid& pg, const CoordRect& rect, int s, int v, int w,
                             int t) {
    const GridGraph& g = pg.grid;
    if (rect.iLo < 1 || rect.jLo < 1 || rect.iHi > g.a || rect.jHi > g.b || rect.empty())
        throw std::invalid_argument("pick_up_two: window outside the grid");
    if (rect.iHi - rect.iLo + 1 < 5 || rect.jHi - rect.jLo + 1 < 5)
        throw std::invalid_argument("pick_up_two: window must be at least 5x5");

    CoordRect inner{rect.iLo + 1, rect.iHi - 1, rect.jLo + 1, rect.jHi - 1};
    GridObject ov = g.objectAt(pg.owner[v]);
    GridObject ow = g.objectAt(pg.owner[w]);
    if (!inner.containsObject(ov) || !inner.containsObject(ow))
        throw std::invalid_argument("pick_up_two: targets must sit in the 1-interior");

    auto gsChoices = grid_endpoint_choices(pg, s, rect.iLo, rect);
    auto gtChoices = grid_endpoint_choices(pg, t, rect.iHi, rect);
    if (gsChoices.empty())
        throw std::invalid_argument("pick_up_two: s must lie in the window's first column");
    if (gtChoices.empty())
        throw std::invalid_argument("pick_up_two: t must lie in the window's last column");

    bool sameObject = ov == ow;
    std::vector<Plan> plans = route_plans(requirement_of(pg, ov), requirement_of(pg, ow), rect,
                                          sameObject);

    for (const GridObject& gs : gsChoices)
        for (const GridObject& gt : gtChoices)
            for (const Plan& plan : plans)
                for (bool up : {true, false}) {
                    auto route = assemble_route(rect, gs, gt, plan, up);
                    if (!route) continue;
                    std::vector<int> lifted = lift_grid_path(pg, *route, s, t);
                    if (path_valid(pg, lifted, s, t, v, w, rect)) return lifted;
                }
    throw StageError("pickup", "no route through " + obj_str(ov) + " and " + obj_str(ow));
}

std::vector<int> pick_up_two(const Pseudogrid& pg, int s, int v, int w, int t) {
    if (pg.grid.a != pg.grid.b)
        throw std::invalid_argument("pick_up_two: pseudogrid must be square");
    return pick_up_two(pg, CoordRect{1, pg.grid.a, 1, pg.grid.b}, s, v, w, t);
}

// ---------------------------------------------------------------------------
// pick_up_everything

namespace {

std::vector<int> build_snake(const Pseudogrid& pg, int sigma) {
    const GridGraph& g = pg.grid;
    std::vector<int> rows;
    for (int j = 1; j <= g.b; j += sigma) rows.push_back(j);

    auto columnPath = [&](int i) { return line_path(pg, Axis::Column, i); };
    std::vector<int> colLeft = columnPath(1);
    std::vector<int> colRight = columnPath(g.a);
    std::unordered_map<int, int> posLeft, posRight;
    for (size_t k = 0; k < colLeft.size(); ++k) posLeft[colLeft[k]] = (int)k;
    for (size_t k = 0; k < colRight.size(); ++k) posRight[colRight[k]] = (int)k;

    std::vector<int> path = line_path(pg, Axis::Row, rows[0]);
    for (size_t t = 1; t < rows.size(); ++t) {
        bool rightSide = t % 2 == 1;
        const auto& colPath = rightSide ? colRight : colLeft;
        const auto& pos = rightSide ? posRight : posLeft;
        int column = rightSide ? g.a : 1;
        int vPrev = pg.classOf(GridObject::vertex(column, rows[t - 1])).front();
        int vCur = pg.classOf(GridObject::vertex(column, rows[t])).front();
        int from = pos.at(vPrev), to = pos.at(vCur);
        if (path.back() != colPath[from])
            throw std::runtime_error("snake junction mismatch");
        for (int k = from + 1; k <= to; ++k) path.push_back(colPath[k]);
        std::vector<int> row = line_path(pg, Axis::Row, rows[t]);
        if (rightSide) std::reverse(row.begin(), row.end());
        if (row.front() != path.back()) throw std::runtime_error("snake junction mismatch");
        path.insert(path.end(), row.begin() + 1, row.end());
    }
    return path;
}

} // namespace

std::vector<int> pick_up_everything(const Pseudogrid& pg, const std::vector<int>& S, int r) {
    if (r < 9) throw std::invalid_argument("pick_up_everything needs r >= 9");
    const GridGraph& g = pg.grid;
    int p = (r - 5) / 4;
    int sigma = 2 * p + 3;

    DisjointCover cover = make_disjoint(pg, S, r, p);
    std::vector<int> snake = build_snake(pg, sigma);

    std::unordered_map<int, int> pos;
    for (size_t k = 0; k < snake.size(); ++k)
        if (!pos.emplace(snake[k], (int)k).second)
            throw std::runtime_error("snake revisits a vertex");

    struct Splice {
        int lo, hi;
        std::vector<int> replacement;
    };
    std::vector<Splice> splices;

    for (size_t c = 0; c < cover.centres.size(); ++c) {
        GridObject m = cover.centreVertex[c];
        CoordRect rect{m.i - p - 1, m.i + p + 1, m.j - p - 1, m.j + p + 1};
        if (rect.iLo < 1 || rect.jLo < 1 || rect.iHi > g.a || rect.jHi > g.b)
            throw StageError("path", "cover box leaves the grid at " + obj_str(m));

        int snakeRow = -1;
        for (int j = rect.jLo; j <= rect.jHi; ++j)
            if ((j - 1) % sigma == 0) {
                if (snakeRow != -1)
                    throw StageError("path", "two snake rows cross one cover box");
                snakeRow = j;
            }
        if (snakeRow == -1) throw StageError("path", "no snake row crosses a cover box");

        int sV = pg.port(rect.iLo, snakeRow, Dir::West);
        int tV = pg.port(rect.iHi, snakeRow, Dir::East);
        int v = cover.covered[c][0];
        int w = cover.covered[c].size() > 1 ? cover.covered[c][1] : v;
        std::vector<int> sub = pick_up_two(pg, rect, sV, v, w, tV);

        int ps = pos.at(sV), pt = pos.at(tV);
        if (ps < pt) {
            splices.push_back({ps, pt, std::move(sub)});
        } else {
            std::reverse(sub.begin(), sub.end());
            splices.push_back({pt, ps, std::move(sub)});
        }
    }

    std::sort(splices.begin(), splices.end(),
              [](const Splice& x, const Splice& y) { return x.lo < y.lo; });
    for (size_t k = 1; k < splices.size(); ++k)
        if (splices[k].lo <= splices[k - 1].hi)
            throw StageError("path", "overlapping splices");

    std::vector<int> result;
    result.reserve(snake.size());
    int cursor = 0;
    for (const Splice& sp : splices) {
        result.insert(result.end(), snake.begin() + cursor, snake.begin() + sp.lo);
        result.insert(result.end(), sp.replacement.begin(), sp.replacement.end());
        cursor = sp.hi + 1;
    }
    result.insert(result.end(), snake.begin() + cursor, snake.end());

    // final audit: simple, connected, contains S
    std::vector<int> copy = result;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw StageError("path", "threaded path is not simple");
    for (size_t k = 1; k < result.size(); ++k)
        if (!pg.hasEdge(result[k - 1], result[k]))
            throw StageError("path", "threaded path breaks adjacency");
    for (int v : S)
        if (!std::binary_search(copy.begin(), copy.end(), v))
            throw StageError("path", "threaded path misses an element of S");
    return result;
}

// ---------------------------------------------------------------------------
// packing_census

int packing_census(const std::vector<GridObject>& q, int r, const GridGraph& g) {
    for (size_t x = 0; x < q.size(); ++x)
        for (size_t y = x + 1; y < q.size(); ++y)
            if (in_box(g, q[x], q[y], 2 * r + 1) || in_box(g, q[y], q[x], 2 * r + 1))
                throw std::invalid_argument("packing_census: set is not (2r+1)-packed");

    int R = 3 * r + 1;
    auto planeMax = [&](int W, int H, auto clip) {
        if (W <= 0 || H <= 0) return 0;
        std::vector<int> diff(size_t(W + 2) * size_t(H + 2), 0);
        auto at = [&](int i, int j) -> int& { return diff[size_t(j) * size_t(W + 2) + size_t(i)]; };
        for (const GridObject& mu : q) {
            CoordRect rect = clip(box_rect(g, mu, R));
            if (rect.empty()) continue;
            at(rect.iLo, rect.jLo) += 1;
            at(rect.iHi + 1, rect.jLo) -= 1;
            at(rect.iLo, rect.jHi + 1) -= 1;
            at(rect.iHi + 1, rect.jHi + 1) += 1;
        }
        int best = 0;
        for (int j = 1; j <= H; ++j)
            for (int i = 1; i <= W; ++i) {
                at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
                best = std::max(best, at(i, j));
            }
        return best;
    };

    int best = planeMax(g.a, g.b, [](CoordRect rect) { return rect; });
    best = std::max(best, planeMax(g.a - 1, g.b, [](CoordRect rect) {
                        rect.iHi -= 1;
                        return rect;
                    }));
    best = std::max(best, planeMax(g.a, g.b - 1, [](CoordRect rect) {
                        rect.jHi -= 1;
                        return rect;
                    }));
    return best;
}

std::vector<GridObject> random_maximal_packing(const GridGraph& g, int r, Rng& rng) {
    int R = 2 * r + 1;
    std::vector<int> order(g.objectCount());
    for (int k = 0; k < g.objectCount(); ++k) order[k] = k;
    rng.shuffle(order);

    std::vector<char> blocked(g.objectCount(), 0);
    // mark both directions of the packing relation around mu: nu inside mu's
    // box, and every nu whose own box swallows all of mu's endpoints
    auto blockAround = [&](const GridObject& mu) {
        for (const GridObject& nu : box_objects(g, mu, R)) blocked[g.objectIndex(nu)] = 1;
        int loI = mu.i, hiI = mu.kind == ObjKind::HEdge ? mu.i + 1 : mu.i;
        int loJ = mu.j, hiJ = mu.kind == ObjKind::VEdge ? mu.j + 1 : mu.j;
        for (ObjKind kind : {ObjKind::Vertex, ObjKind::HEdge, ObjKind::VEdge}) {
            int spanI = kind == ObjKind::HEdge ? 1 : 0;
            int spanJ = kind == ObjKind::VEdge ? 1 : 0;
            int xLo = std::max(1, hiI - R - spanI), xHi = std::min(g.a - spanI, loI + R);
            int yLo = std::max(1, hiJ - R - spanJ), yHi = std::min(g.b - spanJ, loJ + R);
            for (int y = yLo; y <= yHi; ++y)
                for (int x = xLo; x <= xHi; ++x)
                    blocked[g.objectIndex(GridObject{kind, x, y})] = 1;
        }
    };

    std::vector<GridObject> q;
    for (int objIdx : order) {
        if (blocked[objIdx]) continue;
        GridObject mu = g.objectAt(objIdx);
        q.push_back(mu);
        blockAround(mu);
    }
    return q;
}

// ---------------------------------------------------------------------------
// build_witness and verification

bool verify_uncentred_path(const Pseudogrid& pg, const Colouring& col,
                           const std::vector<int>& path, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (path.empty()) return fail("empty path");
    for (int v : path)
        if (v < 0 || v >= pg.n) return fail("vertex id out of range");
    std::vector<int> copy = path;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        return fail("path is not simple");
    for (size_t k = 1; k < path.size(); ++k)
        if (!pg.hasEdge(path[k - 1], path[k]))
            return fail("consecutive vertices not adjacent at position " + std::to_string(k));
    if (centre_of(col, path).has_value()) return fail("path has a centre");
    return true;
}

WitnessReport build_witness(const Pseudogrid& pg, const Colouring& col,
                            const PipelineParams& params) {
    WitnessReport report;
    report.params = params;
    report.k = pg.grid.a;
    report.colours = col.numColours;
    Telemetry telemetry;

    try {
        if (pg.grid.a != pg.grid.b) throw StageError("params", "pseudogrid must be square");
        if (params.r < 9) throw StageError("params", "box radius must be at least 9");
        if (params.d < 1) throw StageError("params", "frequency demand must be positive");
        if (params.retryBudget < 1) throw StageError("params", "retry budget must be positive");
        if ((int)col.colourOf.size() != pg.n)
            throw StageError("params", "colouring not total on the pseudogrid");

        PruneResult pruned = prune_to_frequent(pg, col, params.d, params.r);
        telemetry.kPrime = pruned.kPrime;

        RepColouring rep = choose_representatives(pruned.pg, pruned.colouring, params.d,
                                                  params.r);
        Rng rng(split_seed(params.seed, {0x9d0bu}));
        std::vector<int> s =
            doubled_colour_set(pruned.pg, pruned.colouring, rep, params, rng, telemetry);
        std::vector<int> path = pick_up_everything(pruned.pg, s, params.r);

        report.path.reserve(path.size());
        for (int v : path) report.path.push_back(pruned.origOf[v]);

        std::string why;
        report.verified = verify_uncentred_path(pg, col, report.path, &why);
        if (!report.verified) {
            report.failureStage = "verify";
            report.failureDetail = why;
        } else {
            for (int v : report.path) ++report.colourMultiplicity[col.colourOf[v]];
        }
    } catch (const StageError& e) {
        report.failureStage = e.stage;
        report.failureDetail = e.what();
    } catch (const std::exception& e) {
        report.failureStage = "internal";
        report.failureDetail = e.what();
    }
    report.telemetry = telemetry;
    report.retriesUsed = telemetry.retries;
    return report;
}

} // namespace linwit
