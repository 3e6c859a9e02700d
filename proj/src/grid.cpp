#include "linwit/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linwit {

GridGraph::GridGraph(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("grid dimensions must be positive, got " +
                                    std::to_string(a_) + "x" + std::to_string(b_));
}

GridGraph make_grid(int a, int b) { return GridGraph(a, b); }

bool GridGraph::hasObject(const GridObject& o) const {
    switch (o.kind) {
    case ObjKind::Vertex: return hasVertex(o.i, o.j);
    case ObjKind::HEdge: return hasVertex(o.i, o.j) && hasVertex(o.i + 1, o.j);
    case ObjKind::VEdge: return hasVertex(o.i, o.j) && hasVertex(o.i, o.j + 1);
    }
    return false;
}

int GridGraph::degree(int i, int j) const {
    int d = 0;
    if (i > 1) ++d;
    if (i < a) ++d;
    if (j > 1) ++d;
    if (j < b) ++d;
    return d;
}

int GridGraph::objectIndex(const GridObject& o) const {
    switch (o.kind) {
    case ObjKind::Vertex: return (o.j - 1) * a + (o.i - 1);
    case ObjKind::HEdge: return vertexCount() + (o.j - 1) * (a - 1) + (o.i - 1);
    case ObjKind::VEdge: return vertexCount() + hEdgeCount() + (o.j - 1) * a + (o.i - 1);
    }
    return -1;
}

GridObject GridGraph::objectAt(int index) const {
    if (index < vertexCount())
        return GridObject::vertex(index % a + 1, index / a + 1);
    index -= vertexCount();
    if (index < hEdgeCount())
        return GridObject::hedge(index % (a - 1) + 1, index / (a - 1) + 1);
    index -= hEdgeCount();
    return GridObject::vedge(index % a + 1, index / a + 1);
}

long long vol(int r) {
    long long rr = r;
    return 12 * rr * rr + 14 * rr + 3;
}

std::vector<GridObject> rect_objects(const CoordRect& rect) {
    std::vector<GridObject> out;
    if (rect.empty()) return out;
    for (int j = rect.jLo; j <= rect.jHi; ++j)
        for (int i = rect.iLo; i <= rect.iHi; ++i)
            out.push_back(GridObject::vertex(i, j));
    for (int j = rect.jLo; j <= rect.jHi; ++j)
        for (int i = rect.iLo; i < rect.iHi; ++i)
            out.push_back(GridObject::hedge(i, j));
    for (int j = rect.jLo; j < rect.jHi; ++j)
        for (int i = rect.iLo; i <= rect.iHi; ++i)
            out.push_back(GridObject::vedge(i, j));
    return out;
}

CoordRect interior_rect(const GridGraph& g, int r) {
    return CoordRect{1 + r, g.a - r, 1 + r, g.b - r};
}

std::vector<GridObject> interior_objects(const GridGraph& g, int r) {
    return rect_objects(interior_rect(g, r));
}

bool in_interior(const GridGraph& g, const GridObject& o, int r) {
    return interior_rect(g, r).containsObject(o);
}

CoordRect box_rect(const GridGraph& g, const GridObject& mu, int r) {
    if (!g.hasObject(mu))
        throw std::invalid_argument("box centre lies outside the grid");
    int iHi = mu.i, jHi = mu.j;
    if (mu.kind == ObjKind::HEdge) iHi = mu.i + 1;
    if (mu.kind == ObjKind::VEdge) jHi = mu.j + 1;
    CoordRect rect{mu.i - r, iHi + r, mu.j - r, jHi + r};
    rect.iLo = std::max(rect.iLo, 1);
    rect.jLo = std::max(rect.jLo, 1);
    rect.iHi = std::min(rect.iHi, g.a);
    rect.jHi = std::min(rect.jHi, g.b);
    return rect;
}

std::vector<GridObject> box_objects(const GridGraph& g, const GridObject& mu, int r) {
    return rect_objects(box_rect(g, mu, r));
}

bool in_box(const GridGraph& g, const GridObject& nu, const GridObject& mu, int r) {
    return box_rect(g, mu, r).containsObject(nu);
}

} // namespace linwit
