#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/annealer.hpp"
#include "dqc/baselines.hpp"
#include "dqc/circuit.hpp"
#include "dqc/ea_scheduler.hpp"
#include "dqc/qco.hpp"
#include "dqc/schedule.hpp"

namespace dqc {

enum class Algorithm { Sa, Ea, Gp, Seq, RandSeq, Qco };

std::string_view algorithm_name(Algorithm alg);
/// Accepts sa, ea, gp, seq, randseq, qco.
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// A circuit source: either a file or a random_circuit recipe.
struct CircuitSpec {
    std::string id;
    std::optional<std::filesystem::path> file;
    std::size_t qubits = 8;
    std::size_t depth = 30;
    std::uint64_t seed = 0;
    double p_cx = 0.5;
};

struct ExperimentConfig {
    std::vector<CircuitSpec> circuits;
    /// Topology specs as accepted by topology_from_spec.
    std::vector<std::string> topologies;
    std::size_t capacity = 2;
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
    SaParams sa;
    EaParams ea;
    QcoParams qco;
    GpOptions gp;
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the JSON experiment document. Relative circuit file paths resolve
/// against `base_dir`. Throws ConfigError.
ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct RunReport {
    std::string circuit;
    std::string topology;
    Algorithm algorithm = Algorithm::Gp;
    std::uint64_t seed = 0;
    CostBreakdown cost;
    std::optional<double> fidelity;  // QCO only
    double wall_ms = 0.0;
    /// Mean GP-baseline total over the seed set for this circuit/topology.
    std::optional<double> gp_mean;
    /// (gp_mean - total) / gp_mean in percent; empty when gp_mean is 0.
    std::optional<double> improvement_vs_gp;

    Schedule schedule;
    /// The circuit the schedule belongs to (the optimized one for QCO).
    Circuit circuit_used;
};

struct ExperimentResult {
    std::vector<RunReport> runs;
    /// "circuit/topology: reason" for pairs that were infeasible or rejected.
    std::vector<std::string> skipped;
    /// Circuits by id, in config order, for emission next to the results.
    std::vector<std::pair<std::string, Circuit>> circuits;
};

/// Runs every (circuit, topology, algorithm, seed) cell. Runs come back
/// ordered by (circuit, topology, algorithm, seed) in config order whatever
/// the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct SummaryRow {
    std::string circuit;
    std::string topology;
    Algorithm algorithm = Algorithm::Gp;
    std::size_t runs = 0;
    double mean_total = 0.0;
    double min_total = 0.0;
    double max_total = 0.0;
    std::optional<double> improvement_vs_gp;
};

std::vector<SummaryRow> summarize(const ExperimentResult& result);

inline constexpr std::string_view kRawCsvHeader = "circuit,topology,algorithm,seed,a,b,c,total,fidelity,wall_ms";

/// One row per run under kRawCsvHeader. With `include_wall_time` false the
/// wall_ms column is left empty, which makes the output byte-stable.
std::string raw_csv(const ExperimentResult& result, bool include_wall_time = true);

struct RawRow {
    std::string circuit;
    std::string topology;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    double c = 0.0;
    double total = 0.0;
    std::optional<double> fidelity;
    std::optional<double> wall_ms;
};

std::vector<RawRow> parse_raw_csv(std::string_view text);

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string summary_json(const std::vector<SummaryRow>& rows);

/// Writes raw.csv, summary.csv, summary.json, circuits/ and schedules/ into
/// `dir` (created if missing). Returns the written paths. Throws
/// std::runtime_error when a file cannot be written.
std::vector<std::filesystem::path> write_report(const ExperimentResult& result, const std::filesystem::path& dir);

/// File stem used for a run's emitted schedule.
std::string run_file_stem(const RunReport& run);

}  // namespace dqc
