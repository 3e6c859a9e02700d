#include "linwit/pseudogrid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace linwit {

namespace {

std::string coord_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void sort_adjacency(std::vector<std::vector<int>>& adj) {
    for (auto& row : adj) std::sort(row.begin(), row.end());
}

void remove_arc(std::vector<int>& list, int v) {
    auto it = std::find(list.begin(), list.end(), v);
    if (it != list.end()) list.erase(it);
}

} // namespace

const char* kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::Single: return "single";
    case VertexKind::Q1: return "q1";
    case VertexKind::Q2: return "q2";
    case VertexKind::Q3: return "q3";
    }
    return "?";
}

PseudogridSpec::PseudogridSpec(int a_, int b_) : a(a_), b(b_) {
    GridGraph g(a, b);
    subdivH.assign(g.hEdgeCount(), 0);
    subdivV.assign(g.vEdgeCount(), 0);
    kind.assign(g.vertexCount(), VertexKind::Single);
    pathLen.assign(g.vertexCount(), 1);
}

int& PseudogridSpec::subdivAt(const GridObject& e) {
    GridGraph g(a, b);
    if (!g.hasObject(e) || e.isVertex())
        throw std::invalid_argument("subdivAt: not an edge of the grid");
    int idx = g.objectIndex(e) - g.vertexCount();
    return e.kind == ObjKind::HEdge ? subdivH[idx] : subdivV[idx - g.hEdgeCount()];
}

int PseudogridSpec::subdivAt(const GridObject& e) const {
    return const_cast<PseudogridSpec*>(this)->subdivAt(e);
}

void PseudogridSpec::setVertex(int i, int j, VertexKind k, int len) {
    GridGraph g(a, b);
    if (!g.hasVertex(i, j))
        throw std::invalid_argument("setVertex: " + coord_str(i, j) + " outside grid");
    int idx = g.objectIndex(GridObject::vertex(i, j));
    kind[idx] = k;
    pathLen[idx] = len;
}

void PseudogridSpec::validate() const {
    GridGraph g(a, b);
    if ((int)subdivH.size() != g.hEdgeCount() || (int)subdivV.size() != g.vEdgeCount() ||
        (int)kind.size() != g.vertexCount() || (int)pathLen.size() != g.vertexCount())
        throw std::invalid_argument("spec arrays inconsistent with dimensions");
    for (int s : subdivH)
        if (s < 0) throw std::invalid_argument("negative subdivision count");
    for (int s : subdivV)
        if (s < 0) throw std::invalid_argument("negative subdivision count");
    for (int j = 1; j <= b; ++j)
        for (int i = 1; i <= a; ++i) {
            int idx = g.objectIndex(GridObject::vertex(i, j));
            if (pathLen[idx] < 1)
                throw std::invalid_argument("pathLen < 1 at " + coord_str(i, j));
            if (kind[idx] == VertexKind::Single) {
                if (pathLen[idx] != 1)
                    throw std::invalid_argument("single vertex with pathLen >= 2 at " +
                                                coord_str(i, j));
            } else if (g.degree(i, j) < 4) {
                throw std::invalid_argument("replacement path on a boundary vertex at " +
                                            coord_str(i, j));
            }
        }
}

long long PseudogridSpec::expectedVertexCount() const {
    long long total = (long long)a * b;
    for (int s : subdivH) total += s;
    for (int s : subdivV) total += s;
    for (size_t v = 0; v < kind.size(); ++v)
        if (kind[v] != VertexKind::Single) total += pathLen[v] - 1;
    return total;
}

VertexKind Pseudogrid::effectiveKind(int i, int j) const {
    int idx = grid.objectIndex(GridObject::vertex(i, j));
    if (classes[idx].size() <= 1) return VertexKind::Single;
    return kindOf[idx];
}

int Pseudogrid::port(int i, int j, Dir d) const {
    const auto& cls = classOf(GridObject::vertex(i, j));
    if (cls.size() == 1) return cls[0];
    switch (kindOf[grid.objectIndex(GridObject::vertex(i, j))]) {
    case VertexKind::Q1:
        return (d == Dir::West || d == Dir::Down) ? cls.front() : cls.back();
    case VertexKind::Q2:
        return (d == Dir::Up || d == Dir::West) ? cls.front() : cls.back();
    case VertexKind::Q3:
        return (d == Dir::West || d == Dir::East) ? cls.front() : cls.back();
    case VertexKind::Single:
        break;
    }
    throw std::logic_error("multi-vertex class marked single");
}

bool Pseudogrid::hasEdge(int u, int v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

long long Pseudogrid::edgeCount() const {
    long long deg = 0;
    for (const auto& row : adj) deg += (long long)row.size();
    return deg / 2;
}

namespace {

// The full chain realizing a grid edge: [port, internals..., port], ordered
// from the lexicographically smaller endpoint.
std::vector<int> edge_chain(const Pseudogrid& pg, const GridObject& e) {
    std::vector<int> chain;
    if (e.kind == ObjKind::HEdge) {
        chain.push_back(pg.port(e.i, e.j, Dir::East));
        const auto& cls = pg.classOf(e);
        chain.insert(chain.end(), cls.begin(), cls.end());
        chain.push_back(pg.port(e.i + 1, e.j, Dir::West));
    } else {
        chain.push_back(pg.port(e.i, e.j, Dir::Up));
        const auto& cls = pg.classOf(e);
        chain.insert(chain.end(), cls.begin(), cls.end());
        chain.push_back(pg.port(e.i, e.j + 1, Dir::Down));
    }
    return chain;
}

} // namespace

Pseudogrid build_pseudogrid(const PseudogridSpec& spec) {
    spec.validate();
    GridGraph g(spec.a, spec.b);

    Pseudogrid pg;
    pg.grid = g;
    pg.classes.assign(g.objectCount(), {});
    pg.kindOf.assign(g.vertexCount(), VertexKind::Single);

    int next = 0;
    for (int j = 1; j <= g.b; ++j)
        for (int i = 1; i <= g.a; ++i) {
            int idx = g.objectIndex(GridObject::vertex(i, j));
            int len = spec.kind[idx] == VertexKind::Single ? 1 : spec.pathLen[idx];
            pg.kindOf[idx] = spec.kind[idx];
            for (int t = 0; t < len; ++t) pg.classes[idx].push_back(next++);
        }
    for (int k = g.vertexCount(); k < g.objectCount(); ++k) {
        GridObject e = g.objectAt(k);
        int s = spec.subdivAt(e);
        for (int t = 0; t < s; ++t) pg.classes[k].push_back(next++);
    }

    pg.n = next;
    pg.owner.assign(pg.n, -1);
    for (int k = 0; k < g.objectCount(); ++k)
        for (int v : pg.classes[k]) pg.owner[v] = k;

    pg.adj.assign(pg.n, {});
    auto link = [&](int u, int v) {
        pg.adj[u].push_back(v);
        pg.adj[v].push_back(u);
    };
    for (int k = 0; k < g.vertexCount(); ++k)
        for (size_t t = 1; t < pg.classes[k].size(); ++t)
            link(pg.classes[k][t - 1], pg.classes[k][t]);
    for (int k = g.vertexCount(); k < g.objectCount(); ++k) {
        auto chain = edge_chain(pg, g.objectAt(k));
        for (size_t t = 1; t < chain.size(); ++t) link(chain[t - 1], chain[t]);
    }
    sort_adjacency(pg.adj);
    return pg;
}

std::vector<int> line_path(const Pseudogrid& pg, Axis axis, int index) {
    const GridGraph& g = pg.grid;
    int limit = axis == Axis::Row ? g.b : g.a;
    if (index < 1 || index > limit)
        throw std::invalid_argument("line index out of range");

    std::vector<int> path;
    auto appendClass = [&](int i, int j) {
        const auto& cls = pg.classOf(GridObject::vertex(i, j));
        switch (pg.effectiveKind(i, j)) {
        case VertexKind::Single:
            path.push_back(cls[0]);
            break;
        case VertexKind::Q1:
            // rows enter at p and leave at q, columns likewise
            path.insert(path.end(), cls.begin(), cls.end());
            break;
        case VertexKind::Q2:
            // rows pass p..q, columns q..p
            if (axis == Axis::Row)
                path.insert(path.end(), cls.begin(), cls.end());
            else
                path.insert(path.end(), cls.rbegin(), cls.rend());
            break;
        case VertexKind::Q3:
            // bent: the row passes through p only, the column through q only
            path.push_back(axis == Axis::Row ? cls.front() : cls.back());
            break;
        }
    };

    if (axis == Axis::Row) {
        for (int i = 1; i <= g.a; ++i) {
            appendClass(i, index);
            if (i < g.a) {
                const auto& cls = pg.classOf(GridObject::hedge(i, index));
                path.insert(path.end(), cls.begin(), cls.end());
            }
        }
    } else {
        for (int j = 1; j <= g.b; ++j) {
            appendClass(index, j);
            if (j < g.b) {
                const auto& cls = pg.classOf(GridObject::vedge(index, j));
                path.insert(path.end(), cls.begin(), cls.end());
            }
        }
    }
    return path;
}

namespace {

// Endpoint of a replacement path that does not serve the lost direction;
// it becomes the grid vertex once the deletion turns v into a boundary vertex.
bool designate_front(VertexKind k, Dir lost) {
    switch (k) {
    case VertexKind::Q1:
        return lost == Dir::Up || lost == Dir::East; // front = p serves W,D
    case VertexKind::Q2:
        return lost == Dir::Down || lost == Dir::East; // front serves U,W
    case VertexKind::Q3:
        return lost == Dir::Down || lost == Dir::Up; // front serves W,E
    case VertexKind::Single:
        break;
    }
    throw std::logic_error("designate_front on single kind");
}

} // namespace

DeleteResult delete_line(const Pseudogrid& pg, Axis axis, int index) {
    const GridGraph& g = pg.grid;
    if (g.a < 2 || g.b < 2)
        throw std::invalid_argument("cannot delete a line of a degenerate pseudogrid");
    if (axis == Axis::Row) {
        if (index < 1 || index > g.b) throw std::invalid_argument("row index out of range");
        if (g.b < 3)
            throw std::invalid_argument("deleting a row of a 2-row pseudogrid leaves a path");
    } else {
        if (index < 1 || index > g.a) throw std::invalid_argument("column index out of range");
        if (g.a < 3)
            throw std::invalid_argument("deleting a column of a 2-column pseudogrid leaves a path");
    }

    // 1. drop the chain edges of every grid edge on the line
    std::vector<std::vector<int>> adj = pg.adj;
    auto dropChain = [&](const GridObject& e) {
        auto chain = edge_chain(pg, e);
        for (size_t t = 1; t < chain.size(); ++t) {
            remove_arc(adj[chain[t - 1]], chain[t]);
            remove_arc(adj[chain[t]], chain[t - 1]);
        }
    };
    if (axis == Axis::Row)
        for (int i = 1; i < g.a; ++i) dropChain(GridObject::hedge(i, index));
    else
        for (int j = 1; j < g.b; ++j) dropChain(GridObject::vedge(index, j));

    // 2. cascade vertices of degree <= 1 (isolated ones included)
    std::vector<char> alive(pg.n, 1);
    std::deque<int> queue;
    for (int v = 0; v < pg.n; ++v)
        if (adj[v].size() <= 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v] || adj[v].size() > 1) continue;
        alive[v] = 0;
        for (int w : adj[v])
            if (alive[w]) {
                remove_arc(adj[w], v);
                if (adj[w].size() <= 1) queue.push_back(w);
            }
        adj[v].clear();
    }

    // 3. the new grid and the class designation on it
    int a2 = axis == Axis::Column ? g.a - 1 : g.a;
    int b2 = axis == Axis::Row ? g.b - 1 : g.b;
    GridGraph g2(a2, b2);

    std::vector<int> assign(pg.n, -1); // old vertex id -> new object index
    std::vector<std::vector<int>> newClasses(g2.objectCount());
    std::vector<VertexKind> newKinds(g2.vertexCount(), VertexKind::Single);

    auto oldCoord = [&](int i2, int j2) {
        int i1 = i2, j1 = j2;
        if (axis == Axis::Column && i2 >= index) i1 = i2 + 1;
        if (axis == Axis::Row && j2 >= index) j1 = j2 + 1;
        return GridObject::vertex(i1, j1);
    };

    for (int j2 = 1; j2 <= b2; ++j2)
        for (int i2 = 1; i2 <= a2; ++i2) {
            GridObject oldV = oldCoord(i2, j2);
            const auto& cls = pg.classOf(oldV);
            int newIdx = g2.objectIndex(GridObject::vertex(i2, j2));
            VertexKind k = pg.kindOf[g.objectIndex(oldV)];
            bool boundaryNow = i2 == 1 || i2 == a2 || j2 == 1 || j2 == b2;

            std::vector<int> designated;
            if (cls.size() == 1 || !boundaryNow) {
                designated = cls;
                if (cls.size() > 1) newKinds[newIdx] = k;
            } else {
                Dir lost;
                if (axis == Axis::Row)
                    lost = index == 1 ? Dir::Down : Dir::Up;
                else
                    lost = index == 1 ? Dir::West : Dir::East;
                designated = {designate_front(k, lost) ? cls.front() : cls.back()};
            }
            for (int v : designated) {
                if (!alive[v])
                    throw std::runtime_error("deletion removed a surviving grid vertex at " +
                                             coord_str(i2, j2));
                assign[v] = newIdx;
            }
            newClasses[newIdx] = std::move(designated);
        }

    // 4. recover each new grid edge's chain by walking unassigned degree-2
    //    vertices between designated classes
    auto walkFrom = [&](int x, int y, std::vector<int>& internals) -> int {
        internals.clear();
        int prev = x, cur = y;
        int steps = 0;
        while (assign[cur] == -1) {
            if (adj[cur].size() != 2)
                throw std::runtime_error("unassigned vertex of degree " +
                                         std::to_string(adj[cur].size()) + " after deletion");
            internals.push_back(cur);
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            if (++steps > pg.n) throw std::runtime_error("cycle of unassigned vertices");
        }
        return cur; // first assigned vertex reached
    };

    for (int k2 = g2.vertexCount(); k2 < g2.objectCount(); ++k2) {
        GridObject e2 = g2.objectAt(k2);
        GridObject v2 = GridObject::vertex(e2.i, e2.j);
        GridObject w2 = e2.kind == ObjKind::HEdge ? GridObject::vertex(e2.i + 1, e2.j)
                                                  : GridObject::vertex(e2.i, e2.j + 1);
        int vObj = g2.objectIndex(v2);
        int wObj = g2.objectIndex(w2);

        bool found = false;
        std::vector<int> chainInternals;
        for (int x : newClasses[vObj]) {
            for (int y : adj[x]) {
                std::vector<int> internals;
                int end;
                if (assign[y] == wObj) {
                    end = y;
                } else if (assign[y] == -1) {
                    end = walkFrom(x, y, internals);
                    if (assign[end] != wObj) continue;
                } else {
                    continue;
                }
                (void)end;
                if (found)
                    throw std::runtime_error("parallel chains between adjacent grid vertices");
                found = true;
                chainInternals = internals;
            }
        }
        if (!found)
            throw std::runtime_error("no chain realizes grid edge after deletion");
        for (int v : chainInternals) assign[v] = k2;
        newClasses[k2] = std::move(chainInternals);
    }

    for (int v = 0; v < pg.n; ++v)
        if (alive[v] && assign[v] == -1)
            throw std::runtime_error("surviving vertex not covered by the rebuilt partition");

    // 5. assemble the result with dense ids
    DeleteResult res;
    std::vector<int> newId(pg.n, -1);
    for (int v = 0; v < pg.n; ++v)
        if (alive[v]) {
            newId[v] = (int)res.origOf.size();
            res.origOf.push_back(v);
        }

    Pseudogrid& out = res.pg;
    out.grid = g2;
    out.n = (int)res.origOf.size();
    out.kindOf = std::move(newKinds);
    out.classes.assign(g2.objectCount(), {});
    for (int k2 = 0; k2 < g2.objectCount(); ++k2) {
        out.classes[k2].reserve(newClasses[k2].size());
        for (int v : newClasses[k2]) out.classes[k2].push_back(newId[v]);
    }
    out.owner.assign(out.n, -1);
    for (int k2 = 0; k2 < g2.objectCount(); ++k2)
        for (int v : out.classes[k2]) out.owner[v] = k2;
    out.adj.assign(out.n, {});
    for (int v = 0; v < pg.n; ++v)
        if (alive[v])
            for (int w : adj[v]) out.adj[newId[v]].push_back(newId[w]);
    sort_adjacency(out.adj);

    audit_pseudogrid(out);
    return res;
}

std::vector<int> tilde_box(const Pseudogrid& pg, int v, int r) {
    if (v < 0 || v >= pg.n) throw std::invalid_argument("tilde_box: no such vertex");
    GridObject mu = pg.grid.objectAt(pg.owner[v]);
    std::vector<int> out;
    for (const GridObject& nu : box_objects(pg.grid, mu, r)) {
        const auto& cls = pg.classOf(nu);
        out.insert(out.end(), cls.begin(), cls.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> interior_vertices(const Pseudogrid& pg, int r) {
    std::vector<int> out;
    for (const GridObject& nu : interior_objects(pg.grid, r)) {
        const auto& cls = pg.classOf(nu);
        out.insert(out.end(), cls.begin(), cls.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

void audit_pseudogrid(const Pseudogrid& pg) {
    const GridGraph& g = pg.grid;
    auto fail = [](const std::string& msg) { throw std::runtime_error("pseudogrid audit: " + msg); };

    if ((int)pg.adj.size() != pg.n || (int)pg.owner.size() != pg.n) fail("size mismatch");
    if ((int)pg.classes.size() != g.objectCount()) fail("class table size mismatch");
    if ((int)pg.kindOf.size() != g.vertexCount()) fail("kind table size mismatch");

    long long degSum = 0;
    for (int v = 0; v < pg.n; ++v) {
        const auto& row = pg.adj[v];
        if (!std::is_sorted(row.begin(), row.end())) fail("adjacency not sorted");
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) fail("duplicate edge");
        if (row.size() > 4) fail("degree exceeds 4");
        if (g.a >= 2 && g.b >= 2 && row.size() < 2) fail("vertex of degree < 2");
        for (int w : row) {
            if (w < 0 || w >= pg.n) fail("neighbour id out of range");
            if (w == v) fail("self loop");
            if (!pg.hasEdge(w, v)) fail("asymmetric adjacency");
        }
        degSum += (long long)row.size();
    }

    std::vector<char> seen(pg.n, 0);
    for (int k = 0; k < g.objectCount(); ++k) {
        const auto& cls = pg.classes[k];
        GridObject o = g.objectAt(k);
        if (o.isVertex()) {
            if (cls.empty()) fail("empty vertex class");
            if (cls.size() > 1) {
                if (g.degree(o.i, o.j) < 4) fail("replacement path on low-degree vertex");
                if (pg.kindOf[k] == VertexKind::Single) fail("multi-vertex class marked single");
            }
        }
        for (int v : cls) {
            if (v < 0 || v >= pg.n) fail("class member out of range");
            if (seen[v]) fail("vertex in two classes");
            seen[v] = 1;
            if (pg.owner[v] != k) fail("owner map inconsistent");
        }
        // induced path: consecutive adjacent, nothing else adjacent
        for (size_t s = 0; s < cls.size(); ++s)
            for (size_t t = s + 1; t < cls.size(); ++t) {
                bool adjacent = pg.hasEdge(cls[s], cls[t]);
                if (t == s + 1 && !adjacent) fail("class not a path");
                if (t > s + 1 && adjacent) fail("class not induced");
            }
    }
    for (int v = 0; v < pg.n; ++v)
        if (!seen[v]) fail("vertex in no class");

    long long chained = 0;
    for (int k = g.vertexCount(); k < g.objectCount(); ++k) {
        auto chain = edge_chain(pg, g.objectAt(k));
        for (size_t t = 1; t < chain.size(); ++t)
            if (!pg.hasEdge(chain[t - 1], chain[t])) fail("grid edge chain broken");
        chained += (long long)chain.size() - 1;
    }
    long long intra = 0;
    for (int k = 0; k < g.vertexCount(); ++k)
        if (!pg.classes[k].empty()) intra += (long long)pg.classes[k].size() - 1;
    if (degSum != 2 * (chained + intra)) fail("edges not accounted for by chains and classes");
}

bool structurally_equal(const Pseudogrid& x, const Pseudogrid& y) {
    if (x.grid.a != y.grid.a || x.grid.b != y.grid.b || x.n != y.n) return false;
    std::vector<int> map(x.n, -1);
    for (int k = 0; k < x.grid.objectCount(); ++k) {
        if (x.classes[k].size() != y.classes[k].size()) return false;
        for (size_t t = 0; t < x.classes[k].size(); ++t) map[x.classes[k][t]] = y.classes[k][t];
    }
    for (int v = 0; v < x.n; ++v) {
        std::vector<int> mapped;
        mapped.reserve(x.adj[v].size());
        for (int w : x.adj[v]) mapped.push_back(map[w]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != y.adj[map[v]]) return false;
    }
    return true;
}

PseudogridSpec random_pseudogrid_spec(int a, int b, Rng& rng, int maxSubdiv, int maxPathLen) {
    PseudogridSpec spec(a, b);
    for (auto& s : spec.subdivH) s = (int)rng.below(uint64_t(maxSubdiv + 1));
    for (auto& s : spec.subdivV) s = (int)rng.below(uint64_t(maxSubdiv + 1));
    GridGraph g(a, b);
    for (int j = 2; j < b; ++j)
        for (int i = 2; i < a; ++i) {
            int pick = (int)rng.below(4);
            if (pick == 0) continue;
            VertexKind k = pick == 1 ? VertexKind::Q1 : pick == 2 ? VertexKind::Q2 : VertexKind::Q3;
            int len = 1 + (int)rng.below(uint64_t(maxPathLen));
            spec.setVertex(i, j, k, len);
        }
    (void)g;
    return spec;
}

} // namespace linwit
