#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/network.hpp"
#include "dqc/rng.hpp"
#include "dqc/schedule.hpp"

namespace dqc {

/// Shared evolutionary hyperparameters. Offspring and replacement counts are
/// fractions of the population, rounded up.
struct EvolutionParams {
    std::size_t population_size = 100;
    std::size_t generations = 500;
    double crossover_rate = 0.9;
    double mutation_rate = 0.5;
    double offspring_rate = 0.5;
    double replace_rate = 0.5;
    std::uint64_t seed = 0;

    std::size_t offspring_count() const;
    /// Never the whole population, so the incumbent best always survives.
    std::size_t replace_count() const;
    void validate() const;
};

struct EaParams : EvolutionParams {
    double lambda = kDefaultCapacityPenalty;
    std::size_t tournament_size = 2;
};

struct EaTracePoint {
    std::size_t generation;
    double best_cost;
    double mean_cost;
};

struct EaResult {
    Schedule schedule;
    CostBreakdown cost;
    std::vector<EaTracePoint> trace;
};

enum class InitMethod { ShuffledSequential, UniformRandom };

/// ShuffledSequential: time-constant sequential fill with rows shuffled.
/// UniformRandom: every cell uniform over the nodes (may break capacity).
Schedule init_individual(const LayeredCircuit& layered, const NetworkTopology& net, InitMethod method, Rng& rng);
/// Picks either method with probability 1/2.
Schedule init_individual(const LayeredCircuit& layered, const NetworkTopology& net, Rng& rng);

/// Rows [0, cut) from p1, the rest from p2.
Schedule crossover_rows(const Schedule& p1, const Schedule& p2, std::size_t cut);
/// Columns [0, cut) from p1, the rest from p2.
Schedule crossover_columns(const Schedule& p1, const Schedule& p2, std::size_t cut);
/// Row- or column-wise single-point crossover, variant and cut drawn uniformly.
Schedule crossover(const Schedule& p1, const Schedule& p2, Rng& rng);

/// Copy of `s` with one uniformly chosen mutation from all seven applied.
Schedule mutate(const Schedule& s, std::size_t num_nodes, Rng& rng);

/// Generational EA with tournament selection and elitist replacement.
EaResult evolve(const LayeredCircuit& layered, const NetworkTopology& net, const EaParams& params = {});

/// `generation,best_cost,mean_cost` rows.
std::string ea_trace_to_csv(const std::vector<EaTracePoint>& trace);

}  // namespace dqc
