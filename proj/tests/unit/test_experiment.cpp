#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dqc/experiment.hpp"
#include "dqc/network.hpp"

using namespace dqc;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config() {
    return parse_experiment_config(R"({
        "circuits": [{"qubits": 6, "depth": 8, "seed": 3}],
        "topologies": ["grid:2x2", "star:3"],
        "capacity": 2,
        "algorithms": ["sa", "ea", "gp", "seq", "randseq"],
        "seeds": [0, 1],
        "sa": {"max_iterations": 2000},
        "ea": {"population_size": 12, "generations": 20},
        "threads": 1
    })");
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("dqc_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config parsing") {
    const ExperimentConfig cfg = small_config();
    REQUIRE(cfg.circuits.size() == 1);
    CHECK(cfg.circuits[0].id == "q6_d8_s3");
    CHECK(cfg.topologies.size() == 2);
    CHECK(cfg.algorithms.size() == 5);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{0, 1});
    CHECK(cfg.sa.max_iterations == 2000);
    CHECK(cfg.ea.population_size == 12);

    CHECK_NOTHROW(parse_experiment_config(R"({"note": "anything", "seeds": [1]})"));
    CHECK_THROWS_AS(parse_experiment_config(R"({"sedes": [1]})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"sa": {"iterations": 5}})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"algorithms": ["magic"]})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"seeds": []})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"capacity": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config("[1, 2"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"circuits": [{"qubits": 4}]})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"ea": {"population_size": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"qco": {"scheduler": "xx"}})"), ConfigError);

    const ExperimentConfig rel = parse_experiment_config(R"({"circuits": [{"file": "c/a.txt"}]})", "/base");
    REQUIRE(rel.circuits[0].file);
    CHECK(*rel.circuits[0].file == fs::path("/base/c/a.txt"));
    CHECK(rel.circuits[0].id == "a");
}

TEST_CASE("shipped configs parse") {
    for (const char* name : {"grid_star.json", "qco.json", "smoke.json"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load_experiment_config(fs::path(DQC_SOURCE_DIR) / "configs" / name));
    }
}

TEST_CASE("empty circuit list gives an empty result") {
    ExperimentConfig cfg = small_config();
    cfg.circuits.clear();
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.runs.empty());
    CHECK(raw_csv(r) == std::string(kRawCsvHeader) + "\n");
}

TEST_CASE("runs are recomputable and gp is the reference") {
    const ExperimentConfig cfg = small_config();
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.runs.size() == 2 * 5 * 2);
    for (const RunReport& run : r.runs) {
        const NetworkTopology net = topology_from_spec(run.topology, cfg.capacity);
        CHECK(cost(run.schedule, layerize(run.circuit_used), net) == run.cost);
        REQUIRE(run.gp_mean);
        if (run.algorithm == Algorithm::Gp) {
            CHECK(run.cost.total == *run.gp_mean);
        }
    }
    for (const SummaryRow& s : summarize(r))
        if (s.algorithm == Algorithm::Gp && s.improvement_vs_gp) CHECK(*s.improvement_vs_gp == doctest::Approx(0.0));
}

TEST_CASE("seq runs are deterministic") {
    ExperimentConfig cfg = small_config();
    cfg.algorithms = {Algorithm::Seq};
    const ExperimentResult a = run_experiment(cfg), b = run_experiment(cfg);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) CHECK(a.runs[i].schedule == b.runs[i].schedule);
    for (const RunReport& run : a.runs) CHECK(run.algorithm == Algorithm::Seq);
}

TEST_CASE("raw csv round trip and byte stability across thread counts") {
    ExperimentConfig cfg = small_config();
    const ExperimentResult one = run_experiment(cfg);
    cfg.threads = 3;
    const ExperimentResult three = run_experiment(cfg);
    CHECK(raw_csv(one, false) == raw_csv(three, false));

    const std::vector<RawRow> rows = parse_raw_csv(raw_csv(one));
    REQUIRE(rows.size() == one.runs.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].circuit == one.runs[i].circuit);
        CHECK(rows[i].topology == one.runs[i].topology);
        CHECK(rows[i].algorithm == algorithm_name(one.runs[i].algorithm));
        CHECK(rows[i].seed == one.runs[i].seed);
        CHECK(rows[i].a == one.runs[i].cost.a);
        CHECK(rows[i].b == one.runs[i].cost.b);
        CHECK(rows[i].total == one.runs[i].cost.total);
        CHECK(rows[i].wall_ms.has_value());
        CHECK_FALSE(rows[i].fidelity.has_value());
    }
    CHECK_THROWS_AS(parse_raw_csv("nope\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_raw_csv(std::string(kRawCsvHeader) + "\nx,y\n"), std::invalid_argument);
}

TEST_CASE("summary json shape") {
    const ExperimentResult r = run_experiment(small_config());
    const auto rows = summarize(r);
    CHECK(rows.size() == 2 * 5);
    const nlohmann::json doc = nlohmann::json::parse(summary_json(rows));
    REQUIRE(doc.at("cells").size() == rows.size());
    for (const auto& cell : doc.at("cells")) {
        for (const char* key : {"circuit", "topology", "algorithm", "runs", "mean_total", "min_total", "max_total",
                                "improvement_vs_gp"})
            CHECK(cell.contains(key));
        CHECK(cell.at("runs") == 2);
        CHECK(cell.at("min_total").get<double>() <= cell.at("mean_total").get<double>());
        CHECK(cell.at("mean_total").get<double>() <= cell.at("max_total").get<double>());
    }
}

TEST_CASE("infeasible pairs are skipped") {
    ExperimentConfig cfg = small_config();
    cfg.topologies = {"grid:1x2"};
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.runs.empty());
    CHECK(r.skipped.size() == 1);
}

TEST_CASE("write report emits re-verifiable schedules") {
    const ExperimentConfig cfg = small_config();
    const ExperimentResult r = run_experiment(cfg);
    const fs::path dir = scratch_dir("report");
    const auto written = write_report(r, dir);
    CHECK(fs::exists(dir / "raw.csv"));
    CHECK(fs::exists(dir / "summary.csv"));
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(written.size() == 3 + r.circuits.size() + r.runs.size());
    for (const RunReport& run : r.runs) {
        const Schedule s = schedule_from_csv(slurp(dir / "schedules" / (run_file_stem(run) + ".csv")));
        CHECK(s == run.schedule);
        const Circuit c = parse_circuit(slurp(dir / "circuits" / (run.circuit + ".txt")));
        const NetworkTopology net = topology_from_spec(run.topology, cfg.capacity);
        CHECK(cost(s, layerize(c), net).total == run.cost.total);
    }
    fs::remove_all(dir);
}

}
