#pragma once
// The constructive pipeline: prune to frequent colours, pick one
// representative colour per grid object, build a doubled well-separated
// vertex set (greedy round plus a random-permutation claiming round with
// resampling), cover it with disjoint boxes, and thread a single simple path
// through everything. A report is only marked verified after the independent
// centre check passes on the final path.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linwit/bipartite.hpp"
#include "linwit/colouring.hpp"
#include "linwit/pseudogrid.hpp"
#include "linwit/rng.hpp"

namespace linwit {

struct StageError : std::runtime_error {
    std::string stage;
    StageError(std::string stage_, const std::string& msg)
        : std::runtime_error(msg), stage(std::move(stage_)) {}
};

struct PipelineParams {
    int r = 9;          // box radius, >= 9
    int d = 2;          // frequency demand
    int retryBudget = 64;
    uint64_t seed = 0;
    int p() const { return (r - 5) / 4; } // cover radius
};

struct Telemetry {
    int kPrime = 0;
    int q1 = 0, x = 0, q2 = 0, s = 0;
    int retries = 0;
};

struct WitnessReport {
    std::vector<int> path; // in the ORIGINAL pseudogrid's vertex ids
    bool verified = false;
    std::map<int, int> colourMultiplicity; // colour -> count along the path
    int retriesUsed = 0;
    PipelineParams params;
    Telemetry telemetry;
    std::string failureStage;  // empty on success
    std::string failureDetail; // empty on success
    int k = 0;
    int colours = 0;
};

struct PruneResult {
    Pseudogrid pg;
    Colouring colouring;
    std::vector<int> origOf; // pruned vertex id -> input vertex id
    int kPrime = 0;
};

// Delete rows/columns until no colour set is deficient in the r-interior.
// Guarantees kPrime >= k - (d+2r)*|colours used|.
PruneResult prune_to_frequent(const Pseudogrid& pg, const Colouring& col, int d, int r);

// One representative colour per interior object (or -1), d-regular per colour.
struct RepColouring {
    std::vector<int> colourOf; // object index -> colour or -1
};
RepColouring choose_representatives(const Pseudogrid& pg, const Colouring& col, int d, int r);

struct Round1Result {
    std::vector<int> q1;        // object indices, insertion order
    std::vector<int> successes; // colours settled in round 1, ascending
};
Round1Result greedy_round1(const RepColouring& rep, int r, const GridGraph& g);

// The claiming round for one permutation. order = Q1 in permutation order.
// Edge (colour x, position i) exists iff position i claimed an unmarked
// object of that representative colour; claimedObj records which.
struct ClaimGraph {
    std::vector<int> colours;              // the failed colours X
    std::vector<int> order;                // Q1 object indices in pi order
    std::vector<std::vector<int>> adj;     // colour idx -> positions
    std::vector<std::vector<int>> claimed; // [colour idx][position] -> object or -1
};
ClaimGraph claiming_round2(const std::vector<int>& order, const std::vector<int>& failed,
                           const RepColouring& rep, int r, const GridGraph& g);

// The doubled well-separated set S: two vertices per colour, spread out.
// Resamples the claiming permutation until the direct post-check passes or
// the retry budget runs out (then throws StageError).
std::vector<int> doubled_colour_set(const Pseudogrid& pg, const Colouring& col,
                                    const RepColouring& rep, const PipelineParams& params,
                                    Rng& rng, Telemetry& telemetry);

struct DisjointCover {
    std::vector<int> centres;               // pseudogrid vertices x
    std::vector<GridObject> centreVertex;   // the grid vertex whose class holds x
    std::vector<std::vector<int>> covered;  // centre -> one or two S elements
};
DisjointCover make_disjoint(const Pseudogrid& pg, const std::vector<int>& S, int r, int p);

// A simple s-t path through v and w inside `rect` (s on rect's first column,
// t on its last, v and w in its 1-interior).
std::vector<int> pick_up_two(const Pseudogrid& pg, const CoordRect& rect, int s, int v, int w,
                             int t);
// Convenience form on a whole a x a pseudogrid.
std::vector<int> pick_up_two(const Pseudogrid& pg, int s, int v, int w, int t);

// A simple path containing every vertex of S: snake backbone plus one
// pick_up_two splice per cover box.
std::vector<int> pick_up_everything(const Pseudogrid& pg, const std::vector<int>& S, int r);

// max over objects mu of |{mu1 in Q : mu in VE(G_{3r+1}(mu1))}| for a
// (2r+1)-packed Q; <= 16 whenever r >= 10.
int packing_census(const std::vector<GridObject>& q, int r, const GridGraph& g);

// Greedy maximal set with no two members in each other's (2r+1)-boxes,
// built over a uniformly shuffled object order.
std::vector<GridObject> random_maximal_packing(const GridGraph& g, int r, Rng& rng);

WitnessReport build_witness(const Pseudogrid& pg, const Colouring& col,
                            const PipelineParams& params);

// Independent final check: simple, consecutive edges present, no centre.
bool verify_uncentred_path(const Pseudogrid& pg, const Colouring& col,
                           const std::vector<int>& path, std::string* why = nullptr);

} // namespace linwit
