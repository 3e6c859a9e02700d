#pragma once
// Grid graphs G_{a x b} and their objects (vertices and edges), interiors,
// boxes and the vol() size bound. Coordinates are 1-based: i indexes columns
// (1..a), j indexes rows (1..b). An edge is horizontal when its endpoints
// share a row and vertical when they share a column.

#include <cstdint>
#include <vector>

namespace linwit {

enum class ObjKind : uint8_t { Vertex, HEdge, VEdge };

// A vertex (i,j), or an edge stored by its lexicographically smaller
// endpoint: HEdge = (i,j)-(i+1,j), VEdge = (i,j)-(i,j+1).
struct GridObject {
    ObjKind kind = ObjKind::Vertex;
    int i = 0, j = 0;

    static GridObject vertex(int i, int j) { return {ObjKind::Vertex, i, j}; }
    static GridObject hedge(int i, int j) { return {ObjKind::HEdge, i, j}; }
    static GridObject vedge(int i, int j) { return {ObjKind::VEdge, i, j}; }

    bool isVertex() const { return kind == ObjKind::Vertex; }
    bool isEdge() const { return kind != ObjKind::Vertex; }

    friend bool operator==(const GridObject& x, const GridObject& y) {
        return x.kind == y.kind && x.i == y.i && x.j == y.j;
    }
    friend bool operator<(const GridObject& x, const GridObject& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.j != y.j) return x.j < y.j;
        return x.i < y.i;
    }
};

struct GridGraph {
    int a = 0, b = 0;

    GridGraph() = default;
    GridGraph(int a_, int b_); // throws std::invalid_argument on a==0 or b==0

    int vertexCount() const { return a * b; }
    int hEdgeCount() const { return (a - 1) * b; }
    int vEdgeCount() const { return a * (b - 1); }
    int edgeCount() const { return hEdgeCount() + vEdgeCount(); }
    int objectCount() const { return vertexCount() + edgeCount(); }

    bool hasVertex(int i, int j) const { return i >= 1 && i <= a && j >= 1 && j <= b; }
    bool hasObject(const GridObject& o) const;
    int degree(int i, int j) const;

    // Dense object indexing: vertices, then horizontal edges, then vertical.
    int objectIndex(const GridObject& o) const;
    GridObject objectAt(int index) const;
};

GridGraph make_grid(int a, int b);

// vol(r) = 12r^2 + 14r + 3, an upper bound on |VE(G_r(mu))|.
long long vol(int r);

// An axis-aligned coordinate window [iLo..iHi] x [jLo..jHi].
struct CoordRect {
    int iLo = 1, iHi = 0, jLo = 1, jHi = 0;
    bool empty() const { return iLo > iHi || jLo > jHi; }
    bool containsVertex(int i, int j) const {
        return i >= iLo && i <= iHi && j >= jLo && j <= jHi;
    }
    // An object is inside iff all its endpoints are.
    bool containsObject(const GridObject& o) const {
        switch (o.kind) {
        case ObjKind::Vertex: return containsVertex(o.i, o.j);
        case ObjKind::HEdge: return containsVertex(o.i, o.j) && containsVertex(o.i + 1, o.j);
        case ObjKind::VEdge: return containsVertex(o.i, o.j) && containsVertex(o.i, o.j + 1);
        }
        return false;
    }
    friend bool operator==(const CoordRect& x, const CoordRect& y) {
        return x.iLo == y.iLo && x.iHi == y.iHi && x.jLo == y.jLo && x.jHi == y.jHi;
    }
};

std::vector<GridObject> rect_objects(const CoordRect& rect);

// The r-interior window {1+r..a-r} x {1+r..b-r}; empty once r >= min(a,b)/2.
CoordRect interior_rect(const GridGraph& g, int r);
std::vector<GridObject> interior_objects(const GridGraph& g, int r);
bool in_interior(const GridGraph& g, const GridObject& o, int r);

// B_r(mu) clipped to the grid. For an edge the union of the endpoint boxes is
// again a rectangle because the endpoints are adjacent.
CoordRect box_rect(const GridGraph& g, const GridObject& mu, int r);
std::vector<GridObject> box_objects(const GridGraph& g, const GridObject& mu, int r);
bool in_box(const GridGraph& g, const GridObject& nu, const GridObject& mu, int r);

} // namespace linwit
