#pragma once
// Seeded experiment runner: plain k x k grids with random colourings per
// (k, c) cell, one CSV row per trial, witness files for successes and a
// success-rate summary block. Identical configs produce identical bytes
// (timing is zeroed unless explicitly enabled).

#include <string>
#include <vector>

#include "linwit/witness.hpp"

namespace linwit {

struct ExperimentConfig {
    std::vector<int> ks;     // grid sizes
    int colourDivisor = 32;  // c = max(1, k / colourDivisor)
    int r = 9;
    int d = 0;               // 0 = derive max(1, k/c - 2r) per cell
    int retryBudget = 64;
    int trials = 0;
    uint64_t masterSeed = 0;
    std::string outPath;     // CSV path; witness files go to <outPath>.witnesses/
    bool timing = false;     // write real wall_ms instead of 0
};

struct ExperimentRow {
    int k = 0, c = 0, r = 0, d = 0;
    uint64_t seed = 0;
    bool success = false;
    int retries = 0;
    int pathLength = 0;
    long long wallMs = 0;
    std::string failureStage;
};

// Per-trial seed derivation, shared with the CLI witness command.
uint64_t trial_seed(uint64_t master, int k, int trial);

std::string experiment_csv(const std::vector<ExperimentRow>& rows,
                           const std::vector<int>& ks);

// Runs all cells, writes the CSV (and witness files) and returns the rows.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

} // namespace linwit
