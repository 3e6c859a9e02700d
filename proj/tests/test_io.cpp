#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "linwit/experiment.hpp"
#include "linwit/io.hpp"

using namespace linwit;
using namespace testutil;

namespace {

template <class T, class W, class R>
T roundtrip(const T& value, W&& write, R&& read) {
    std::ostringstream os;
    write(os, value);
    std::istringstream is(os.str());
    return read(is);
}

} // namespace

TEST_CASE("pseudogrid spec files round-trip") {
    Rng rng(140);
    for (int trial = 0; trial < 40; ++trial) {
        PseudogridSpec spec = random_pseudogrid_spec(rng.intIn(1, 7), rng.intIn(1, 7), rng);
        PseudogridSpec back = roundtrip(
            spec, [](std::ostream& os, const PseudogridSpec& s) { write_spec(os, s); },
            [](std::istream& is) { return read_spec(is); });
        CHECK(back.a == spec.a);
        CHECK(back.b == spec.b);
        CHECK(back.subdivH == spec.subdivH);
        CHECK(back.subdivV == spec.subdivV);
        CHECK(back.kind == spec.kind);
        CHECK(back.pathLen == spec.pathLen);
    }
}

TEST_CASE("spec parser accepts either endpoint order and defaults") {
    std::istringstream is("pseudogrid 3 3\nedge 2 1 1 1 2\nvertex 2 2 q3 2\n");
    PseudogridSpec spec = read_spec(is);
    CHECK(spec.subdivAt(GridObject::hedge(1, 1)) == 2);
    CHECK(spec.subdivAt(GridObject::hedge(2, 1)) == 0);
    CHECK(spec.kind[spec.a * 1 + 1] == VertexKind::Q3);

    std::istringstream bad("pseudogrid 3 3\nedge 1 1 3 1 1\n");
    CHECK_THROWS_AS(read_spec(bad), std::runtime_error);
    std::istringstream bad2("pseudogrid 3 3\nvertex 1 1 q1 2\n");
    CHECK_THROWS_AS(read_spec(bad2), std::invalid_argument);
}

TEST_CASE("graph dumps round-trip") {
    Rng rng(23);
    Pseudogrid pg = build_pseudogrid(random_pseudogrid_spec(5, 4, rng));
    auto back = roundtrip(
        pg.adj, [](std::ostream& os, const std::vector<std::vector<int>>& adj) { write_graph(os, adj); },
        [](std::istream& is) { return read_graph(is); });
    CHECK(back == pg.adj);
}

TEST_CASE("colouring files round-trip and validate") {
    Rng rng(5);
    Colouring col = random_colouring(17, 5, rng);
    Colouring back = roundtrip(
        col, [](std::ostream& os, const Colouring& c) { write_colouring(os, c); },
        [](std::istream& is) { return read_colouring(is); });
    CHECK(back.colourOf == col.colourOf);
    CHECK(back.numColours == col.numColours);

    std::istringstream missing("colouring 2 2\n0 1\n");
    CHECK_THROWS_AS(read_colouring(missing), std::runtime_error);
    std::istringstream outOfRange("colouring 1 2\n0 2\n");
    CHECK_THROWS_AS(read_colouring(outOfRange), std::runtime_error);
}

TEST_CASE("witness reports round-trip") {
    WitnessReport report;
    report.k = 64;
    report.colours = 4;
    report.params.r = 9;
    report.params.d = 7;
    report.params.seed = 0xfeedfaceULL;
    report.verified = true;
    report.path = {4, 5, 6, 70, 71};
    report.telemetry = {46, 8, 0, 0, 8, 0};
    WitnessReport back = roundtrip(
        report, [](std::ostream& os, const WitnessReport& r) { write_witness(os, r); },
        [](std::istream& is) { return read_witness(is); });
    CHECK(back.k == report.k);
    CHECK(back.colours == report.colours);
    CHECK(back.params.r == report.params.r);
    CHECK(back.params.d == report.params.d);
    CHECK(back.params.seed == report.params.seed);
    CHECK(back.verified == report.verified);
    CHECK(back.path == report.path);
    CHECK(back.telemetry.kPrime == report.telemetry.kPrime);
    CHECK(back.telemetry.s == report.telemetry.s);
}

TEST_CASE("experiment csv has the documented schema") {
    std::vector<ExperimentRow> rows;
    CHECK(experiment_csv(rows, {64}) ==
          "k,c,r,d,seed,success,retries,path_length,wall_ms,failure_stage\n");

    ExperimentRow row;
    row.k = 64;
    row.c = 2;
    row.r = 9;
    row.d = 14;
    row.seed = 1;
    row.success = true;
    row.retries = 0;
    row.pathLength = 1500;
    rows.push_back(row);
    std::string csv = experiment_csv(rows, {64});
    CHECK(csv.find("64,2,9,14,1,1,0,1500,0,\n") != std::string::npos);
    CHECK(csv.find("# summary k=64 c=2 success=1/1") != std::string::npos);
}

TEST_CASE("trial seeds are stable and distinct") {
    CHECK(trial_seed(42, 64, 0) == trial_seed(42, 64, 0));
    CHECK(trial_seed(42, 64, 0) != trial_seed(42, 64, 1));
    CHECK(trial_seed(42, 64, 0) != trial_seed(42, 128, 0));
    CHECK(trial_seed(42, 64, 0) != trial_seed(43, 64, 0));
}

TEST_CASE("run_experiment writes reproducible CSVs and re-verifying witnesses") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "linwit-unit-exp";
    fs::remove_all(dir);
    fs::create_directories(dir);

    ExperimentConfig cfg;
    cfg.ks = {64, 128};
    cfg.colourDivisor = 32;
    cfg.trials = 0;
    cfg.masterSeed = 5;
    cfg.outPath = (dir / "empty.csv").string();
    run_experiment(cfg);
    CHECK(load_text(cfg.outPath) ==
          "k,c,r,d,seed,success,retries,path_length,wall_ms,failure_stage\n");

    cfg.trials = 4;
    cfg.outPath = (dir / "run1.csv").string();
    auto rows = run_experiment(cfg);
    CHECK(rows.size() == 8);
    std::string csv = load_text(cfg.outPath);
    CHECK(csv.find("# summary k=64 c=2") != std::string::npos);
    CHECK(csv.find("# summary k=128 c=4") != std::string::npos);

    int successes = 0;
    for (const auto& row : rows) {
        if (!row.success) continue;
        ++successes;
        // the emitted witness file re-verifies from scratch
        std::ostringstream name;
        name << cfg.outPath << ".witnesses/witness-k" << row.k << "-t";
        // find the trial index by seed
        int trial = -1;
        for (int t = 0; t < cfg.trials; ++t)
            if (trial_seed(cfg.masterSeed, row.k, t) == row.seed) trial = t;
        REQUIRE(trial >= 0);
        name << trial << ".txt";
        std::istringstream ws(load_text(name.str()));
        WitnessReport rep = read_witness(ws);
        Pseudogrid pg = build_pseudogrid(PseudogridSpec(row.k, row.k));
        Rng colourRng(split_seed(row.seed, {0xc01u}));
        Colouring col = random_colouring(pg.n, row.c, colourRng);
        CHECK(verify_uncentred_path(pg, col, rep.path));
    }
    CHECK(successes >= 6);

    cfg.outPath = (dir / "run2.csv").string();
    run_experiment(cfg);
    CHECK(load_text((dir / "run1.csv").string()) == load_text((dir / "run2.csv").string()));
}
