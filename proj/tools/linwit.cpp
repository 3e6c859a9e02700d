// linwit: build and colour pseudogrids, search for uncentred-path witnesses,
// verify them, run the exact small-graph solvers and batch experiments.
// Exit codes: 0 success, 1 verification/pipeline failure, 2 usage error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linwit/exact.hpp"
#include "linwit/experiment.hpp"
#include "linwit/io.hpp"
#include "linwit/witness.hpp"

using namespace linwit;

namespace {

PseudogridSpec load_spec(const std::string& path) {
    std::istringstream is(load_text(path));
    return read_spec(is);
}

Colouring load_colouring(const std::string& path) {
    std::istringstream is(load_text(path));
    return read_colouring(is);
}

void dump_graph_file(const Pseudogrid& pg, const std::string& path) {
    std::ostringstream os;
    write_graph(os, pg.adj);
    save_text(path, os.str());
}

// Colouring used by both `witness` and `verify` when no colouring file is
// given: derived from the witness seed, so reports are self-contained.
Colouring derived_colouring(int n, int c, uint64_t seed) {
    Rng rng(split_seed(seed, {0xc01u}));
    return random_colouring(n, c, rng);
}

int run_witness_pipeline(const Pseudogrid& pg, const Colouring& col,
                         const PipelineParams& params, const std::string& outPath) {
    WitnessReport report = build_witness(pg, col, params);
    std::ostringstream os;
    write_witness(os, report);
    if (!outPath.empty())
        save_text(outPath, os.str());
    else
        std::cout << os.str();
    if (!report.verified) {
        std::cerr << "witness failed at stage '" << report.failureStage
                  << "': " << report.failureDetail << "\n";
        return 1;
    }
    std::cerr << "witness verified: path length " << report.path.size() << ", k'="
              << report.telemetry.kPrime << ", retries " << report.retriesUsed << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uncentred-path witnesses on pseudogrid colourings"};
    app.require_subcommand(1);

    // --- gen-grid ---------------------------------------------------------
    auto* genGrid = app.add_subcommand("gen-grid", "write a plain grid pseudogrid spec");
    int ggK = 8, ggB = 0;
    std::string ggOut, ggGraph;
    genGrid->add_option("--k", ggK, "grid side (square unless --b is given)");
    genGrid->add_option("--b", ggB, "optional second dimension");
    genGrid->add_option("--out", ggOut, "spec file path")->required();
    genGrid->add_option("--graph", ggGraph, "also dump the realized graph");

    // --- gen-pseudogrid ----------------------------------------------------
    auto* genPg = app.add_subcommand("gen-pseudogrid", "write a random pseudogrid spec");
    int gpK = 8, gpMaxSub = 2, gpMaxLen = 3;
    uint64_t gpSeed = 0;
    std::string gpOut, gpGraph;
    genPg->add_option("--k", gpK, "grid side");
    genPg->add_option("--seed", gpSeed, "random seed");
    genPg->add_option("--max-subdiv", gpMaxSub, "max internal vertices per edge path");
    genPg->add_option("--max-pathlen", gpMaxLen, "max replacement path length");
    genPg->add_option("--out", gpOut, "spec file path")->required();
    genPg->add_option("--graph", gpGraph, "also dump the realized graph");

    // --- colour-random ------------------------------------------------------
    auto* colourCmd = app.add_subcommand("colour-random", "random colouring of a spec's graph");
    std::string crSpec, crOut;
    int crColours = 4;
    uint64_t crSeed = 0;
    colourCmd->add_option("--spec", crSpec, "pseudogrid spec file")->required();
    colourCmd->add_option("--colours", crColours, "colour count");
    colourCmd->add_option("--seed", crSeed, "random seed");
    colourCmd->add_option("--out", crOut, "colouring file path")->required();

    // --- witness -------------------------------------------------------------
    auto* witnessCmd = app.add_subcommand("witness", "run the witness pipeline");
    std::string wSpec, wColouring, wOut;
    int wK = 0, wColours = 4, wR = 9, wD = 0, wBudget = 64;
    uint64_t wSeed = 0;
    witnessCmd->add_option("--spec", wSpec, "pseudogrid spec file (else --k plain grid)");
    witnessCmd->add_option("--k", wK, "plain grid side when no spec is given");
    witnessCmd->add_option("--colouring", wColouring, "colouring file (else random)");
    witnessCmd->add_option("--colours", wColours, "colours for the derived random colouring");
    witnessCmd->add_option("--r", wR, "box radius (>= 9)");
    witnessCmd->add_option("--d", wD, "frequency demand (0 = derive k/c - 2r)");
    witnessCmd->add_option("--budget", wBudget, "permutation retry budget");
    witnessCmd->add_option("--seed", wSeed, "master seed");
    witnessCmd->add_option("--out", wOut, "witness report path (stdout if omitted)");

    // --- verify ----------------------------------------------------------------
    auto* verifyCmd = app.add_subcommand("verify", "re-check a witness report");
    std::string vWitness, vSpec, vColouring;
    verifyCmd->add_option("--witness", vWitness, "witness report file")->required();
    verifyCmd->add_option("--spec", vSpec, "pseudogrid spec file (else plain grid from header)");
    verifyCmd->add_option("--colouring", vColouring,
                          "colouring file (else derived from the header seed)");

    // --- exact ---------------------------------------------------------------
    auto* exactCmd = app.add_subcommand("exact", "brute-force solvers on a small graph");
    std::string exWhich, exGraph;
    exactCmd->add_option("solver", exWhich, "one of treedepth|chicen|chilin")->required();
    exactCmd->add_option("--graph", exGraph, "graph dump file")->required();

    // --- experiment -------------------------------------------------------------
    auto* expCmd = app.add_subcommand("experiment", "seeded witness trials to CSV");
    ExperimentConfig cfg;
    std::string ksArg = "64";
    std::string format = "csv";
    expCmd->add_option("--k", ksArg, "comma-separated grid sides");
    expCmd->add_option("--divisor", cfg.colourDivisor, "c = k / divisor");
    expCmd->add_option("--r", cfg.r, "box radius");
    expCmd->add_option("--d", cfg.d, "frequency demand (0 = derive)");
    expCmd->add_option("--budget", cfg.retryBudget, "retry budget");
    expCmd->add_option("--trials", cfg.trials, "trials per cell");
    expCmd->add_option("--seed", cfg.masterSeed, "master seed");
    expCmd->add_option("--out", cfg.outPath, "CSV output path")->required();
    expCmd->add_option("--format", format, "output format (csv)");
    expCmd->add_flag("--timing", cfg.timing, "record real wall-clock ms");

    // --- packing-census -----------------------------------------------------------
    auto* packCmd = app.add_subcommand("packing-census", "census of random maximal packings");
    int pcK = 200, pcR = 10, pcTrials = 100;
    uint64_t pcSeed = 0;
    packCmd->add_option("--k", pcK, "grid side");
    packCmd->add_option("--r", pcR, "packing radius parameter");
    packCmd->add_option("--trials", pcTrials, "number of random maximal packings");
    packCmd->add_option("--seed", pcSeed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*genGrid) {
            PseudogridSpec spec(ggK, ggB > 0 ? ggB : ggK);
            std::ostringstream os;
            write_spec(os, spec);
            save_text(ggOut, os.str());
            if (!ggGraph.empty()) dump_graph_file(build_pseudogrid(spec), ggGraph);
            return 0;
        }
        if (*genPg) {
            Rng rng(split_seed(gpSeed, {0x5e9u}));
            PseudogridSpec spec = random_pseudogrid_spec(gpK, gpK, rng, gpMaxSub, gpMaxLen);
            std::ostringstream os;
            write_spec(os, spec);
            save_text(gpOut, os.str());
            if (!gpGraph.empty()) dump_graph_file(build_pseudogrid(spec), gpGraph);
            return 0;
        }
        if (*colourCmd) {
            Pseudogrid pg = build_pseudogrid(load_spec(crSpec));
            Rng rng(split_seed(crSeed, {0xc01u}));
            Colouring col = random_colouring(pg.n, crColours, rng);
            std::ostringstream os;
            write_colouring(os, col);
            save_text(crOut, os.str());
            return 0;
        }
        if (*witnessCmd) {
            Pseudogrid pg;
            if (!wSpec.empty()) {
                pg = build_pseudogrid(load_spec(wSpec));
            } else if (wK > 0) {
                pg = build_pseudogrid(PseudogridSpec(wK, wK));
            } else {
                std::cerr << "witness needs --spec or --k\n";
                return 2;
            }
            Colouring col = wColouring.empty() ? derived_colouring(pg.n, wColours, wSeed)
                                               : load_colouring(wColouring);
            PipelineParams params;
            params.r = wR;
            params.d = wD > 0 ? wD
                              : std::max(1, pg.grid.a / std::max(1, (int)colours_used(col).size()) -
                                                2 * wR);
            params.retryBudget = wBudget;
            params.seed = wSeed;
            return run_witness_pipeline(pg, col, params, wOut);
        }
        if (*verifyCmd) {
            std::istringstream is(load_text(vWitness));
            WitnessReport report = read_witness(is);
            Pseudogrid pg = vSpec.empty()
                                ? build_pseudogrid(PseudogridSpec(report.k, report.k))
                                : build_pseudogrid(load_spec(vSpec));
            Colouring col = vColouring.empty()
                                ? derived_colouring(pg.n, report.colours, report.params.seed)
                                : load_colouring(vColouring);
            std::string why;
            if (!report.verified) {
                std::cerr << "report is not marked verified\n";
                return 1;
            }
            if (!verify_uncentred_path(pg, col, report.path, &why)) {
                std::cerr << "verification failed: " << why << "\n";
                return 1;
            }
            std::cerr << "witness verifies: uncentred path of length " << report.path.size()
                      << "\n";
            return 0;
        }
        if (*exactCmd) {
            std::istringstream is(load_text(exGraph));
            SmallGraph g = SmallGraph::fromAdjLists(read_graph(is));
            if (exWhich == "treedepth")
                std::cout << treedepth(g) << "\n";
            else if (exWhich == "chicen")
                std::cout << chi_cen(g) << "\n";
            else if (exWhich == "chilin")
                std::cout << chi_lin(g) << "\n";
            else {
                std::cerr << "unknown solver '" << exWhich << "'\n";
                return 2;
            }
            return 0;
        }
        if (*expCmd) {
            if (format != "csv") {
                std::cerr << "unsupported format '" << format << "'\n";
                return 2;
            }
            std::stringstream ks(ksArg);
            std::string tok;
            cfg.ks.clear();
            while (std::getline(ks, tok, ',')) cfg.ks.push_back(std::stoi(tok));
            auto rows = run_experiment(cfg);
            int wins = 0;
            for (const auto& row : rows) wins += row.success ? 1 : 0;
            std::cerr << "experiment: " << wins << "/" << rows.size() << " successes -> "
                      << cfg.outPath << "\n";
            return 0;
        }
        if (*packCmd) {
            GridGraph g(pcK, pcK);
            int worst = 0;
            for (int trial = 0; trial < pcTrials; ++trial) {
                Rng rng(split_seed(pcSeed, {0xacu, uint64_t(trial)}));
                std::vector<GridObject> q = random_maximal_packing(g, pcR, rng);
                worst = std::max(worst, packing_census(q, pcR, g));
            }
            std::cout << worst << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
