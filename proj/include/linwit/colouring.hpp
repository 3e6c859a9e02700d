#pragma once
// Vertex colourings, centre checks, exhaustive linear/centred verdicts on
// small graphs, colour profiles over grid objects and the deficiency query
// answered through a polygamous matching certificate.

#include <optional>
#include <vector>

#include "linwit/pseudogrid.hpp"
#include "linwit/rng.hpp"

namespace linwit {

struct Colouring {
    std::vector<int> colourOf; // vertex id -> colour in [0, numColours)
    int numColours = 0;
};

Colouring random_colouring(int n, int c, Rng& rng);
std::vector<int> colours_used(const Colouring& col);

// A vertex of `vertices` whose colour occurs exactly once among them
// (the first such in the given order), or nullopt.
std::optional<int> centre_of(const Colouring& col, const std::vector<int>& vertices);

struct LinearVerdict {
    bool linear = false;
    std::vector<int> counterexample; // an uncentred simple path when !linear
};

struct CentredVerdict {
    bool centred = false;
    std::vector<int> counterexample; // an uncentred connected vertex set
};

// The LINWIT_SIZE_GUARD environment variable overrides `fallback` when set.
int default_guard(int fallback);

// Exhaustive verdicts; `guard` caps the vertex count (std::length_error
// beyond it).
LinearVerdict is_linear(const std::vector<std::vector<int>>& adj, const Colouring& col,
                        int guard = default_guard(16));
CentredVerdict is_centred(const std::vector<std::vector<int>>& adj, const Colouring& col,
                          int guard = default_guard(14));

struct ColourProfile {
    std::vector<std::vector<int>> coloursOf; // object index -> sorted colour set
    std::vector<std::vector<int>> objectsOf; // colour -> ascending object indices
};

ColourProfile profile(const Pseudogrid& pg, const Colouring& col);

// A colour set A with |profile^{-1}(A) ∩ interior_r| < d|A| if one exists
// (inclusion-minimal, extracted from the matching's failure certificate),
// otherwise nullopt.
std::optional<std::vector<int>> deficiency_set(const ColourProfile& prof,
                                               const std::vector<int>& colours, int d, int r,
                                               const GridGraph& g);

} // namespace linwit
