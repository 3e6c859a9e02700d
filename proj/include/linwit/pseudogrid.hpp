#pragma once
// Pseudogrids: grids with every edge subdivided arbitrarily and every
// degree-4 vertex replaced by a path wired per one of the patterns Q1/Q2/Q3.
// A Pseudogrid keeps the realized simple graph together with its
// grid-partition (object -> induced path P_mu) and the reverse owner map.
//
// Wiring of a replacement path P_v = p..q at v=(i,j):
//   Q1: p serves (i-1,j) and (i,j-1); q serves (i+1,j) and (i,j+1)
//   Q2: p serves (i,j+1) and (i-1,j); q serves (i,j-1) and (i+1,j)
//   Q3: p serves (i-1,j) and (i+1,j); q serves (i,j-1) and (i,j+1)
// Q1/Q2 vertices are "straight", Q3 vertices are "bent".

#include <string>
#include <vector>

#include "linwit/grid.hpp"
#include "linwit/rng.hpp"

namespace linwit {

enum class VertexKind : uint8_t { Single, Q1, Q2, Q3 };
enum class Axis : uint8_t { Row, Column };
enum class Dir : uint8_t { West, East, Down, Up };

const char* kind_name(VertexKind k);

struct PseudogridSpec {
    int a = 0, b = 0;
    std::vector<int> subdivH;        // per horizontal grid edge
    std::vector<int> subdivV;        // per vertical grid edge
    std::vector<VertexKind> kind;    // per grid vertex
    std::vector<int> pathLen;        // per grid vertex, >= 1

    PseudogridSpec() = default;
    PseudogridSpec(int a_, int b_); // trivial: no subdivisions, all Single

    int& subdivAt(const GridObject& e);
    int subdivAt(const GridObject& e) const;
    void setVertex(int i, int j, VertexKind k, int len);

    void validate() const; // throws std::invalid_argument
    long long expectedVertexCount() const;
};

struct Pseudogrid {
    GridGraph grid;
    int n = 0;
    std::vector<std::vector<int>> adj;     // sorted neighbour lists
    std::vector<std::vector<int>> classes; // object index -> P_mu (path order)
    std::vector<int> owner;                // vertex -> object index
    std::vector<VertexKind> kindOf;        // grid-vertex object index -> kind

    const std::vector<int>& classOf(const GridObject& o) const {
        return classes[grid.objectIndex(o)];
    }
    VertexKind effectiveKind(int i, int j) const; // Single when |P_v| == 1
    // The vertex of P_{(i,j)} that attaches toward direction d.
    int port(int i, int j, Dir d) const;
    bool hasEdge(int u, int v) const;
    long long edgeCount() const;
};

Pseudogrid build_pseudogrid(const PseudogridSpec& spec);

// The row/column path of the pseudogrid, ordered by increasing i (rows) or j
// (columns). Contains all edge-path vertices; for a bent vertex only the
// endpoint of P_v that the path passes through.
std::vector<int> line_path(const Pseudogrid& pg, Axis axis, int index);

struct DeleteResult {
    Pseudogrid pg;
    std::vector<int> origOf; // new vertex id -> id in the input pseudogrid
};

// Delete a row or column: drop the chain edges of every grid edge on the
// line, cascade vertices of degree <= 1, then rebuild the grid-partition
// from the surviving structure. Result is an a x (b-1) (resp. (a-1) x b)
// pseudogrid; audited before returning.
DeleteResult delete_line(const Pseudogrid& pg, Axis axis, int index);

// ~B_r(v): union of the partition classes over the box around v's object.
std::vector<int> tilde_box(const Pseudogrid& pg, int v, int r);
// Vertices of all classes whose object lies in the r-interior.
std::vector<int> interior_vertices(const Pseudogrid& pg, int r);

// Full invariant audit; throws std::runtime_error describing the violation.
void audit_pseudogrid(const Pseudogrid& pg);

// Equality up to the canonical relabeling (object index, position in class).
bool structurally_equal(const Pseudogrid& x, const Pseudogrid& y);

PseudogridSpec random_pseudogrid_spec(int a, int b, Rng& rng, int maxSubdiv = 2,
                                      int maxPathLen = 3);

} // namespace linwit
