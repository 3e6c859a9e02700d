#include "linwit/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "linwit/io.hpp"

namespace linwit {

uint64_t trial_seed(uint64_t master, int k, int trial) {
    return split_seed(master, {uint64_t(k), uint64_t(trial)});
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows,
                           const std::vector<int>& ks) {
    std::ostringstream os;
    os << "k,c,r,d,seed,success,retries,path_length,wall_ms,failure_stage\n";
    for (const ExperimentRow& row : rows)
        os << row.k << "," << row.c << "," << row.r << "," << row.d << "," << row.seed << ","
           << (row.success ? 1 : 0) << "," << row.retries << "," << row.pathLength << ","
           << row.wallMs << "," << row.failureStage << "\n";
    // success-rate summary per (k, c) cell
    for (int k : ks) {
        int c = -1, wins = 0, total = 0;
        for (const ExperimentRow& row : rows)
            if (row.k == k) {
                c = row.c;
                ++total;
                if (row.success) ++wins;
            }
        if (total > 0)
            os << "# summary k=" << k << " c=" << c << " success=" << wins << "/" << total
               << "\n";
    }
    return os.str();
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.ks.empty()) throw std::invalid_argument("experiment needs at least one k");
    if (cfg.trials < 0) throw std::invalid_argument("negative trial count");
    if (cfg.outPath.empty()) throw std::invalid_argument("experiment needs an output path");

    std::vector<ExperimentRow> rows;
    std::string witnessDir = cfg.outPath + ".witnesses";
    if (cfg.trials > 0) {
        std::error_code ec;
        std::filesystem::create_directories(witnessDir, ec);
        if (ec)
            throw std::runtime_error("cannot create witness directory " + witnessDir + ": " +
                                     ec.message());
    }

    for (int k : cfg.ks) {
        int c = std::max(1, k / std::max(1, cfg.colourDivisor));
        int d = cfg.d > 0 ? cfg.d : std::max(1, k / c - 2 * cfg.r);
        Pseudogrid pg = build_pseudogrid(PseudogridSpec(k, k));
        for (int trial = 0; trial < cfg.trials; ++trial) {
            PipelineParams params;
            params.r = cfg.r;
            params.d = d;
            params.retryBudget = cfg.retryBudget;
            params.seed = trial_seed(cfg.masterSeed, k, trial);

            Rng colourRng(split_seed(params.seed, {0xc01u}));
            Colouring col = random_colouring(pg.n, c, colourRng);

            auto t0 = std::chrono::steady_clock::now();
            WitnessReport report = build_witness(pg, col, params);
            auto t1 = std::chrono::steady_clock::now();

            ExperimentRow row;
            row.k = k;
            row.c = c;
            row.r = cfg.r;
            row.d = d;
            row.seed = params.seed;
            row.retries = report.retriesUsed;
            row.pathLength = (int)report.path.size();
            row.wallMs = cfg.timing
                             ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                   .count()
                             : 0;
            row.failureStage = report.failureStage;

            // a row only counts as a success after the independent re-check
            row.success = report.verified && verify_uncentred_path(pg, col, report.path);
            if (row.success) {
                std::ostringstream name;
                name << witnessDir << "/witness-k" << k << "-t" << trial << ".txt";
                std::ostringstream body;
                write_witness(body, report);
                save_text(name.str(), body.str());
            }
            rows.push_back(std::move(row));
        }
    }
    save_text(cfg.outPath, experiment_csv(rows, cfg.ks));
    return rows;
}

} // namespace linwit
