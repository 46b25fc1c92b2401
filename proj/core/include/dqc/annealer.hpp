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

struct SaParams {
    std::size_t max_iterations = 100000;
    double initial_temp = 1.0;
    double cooling_rate = 0.99995;
    double temp_floor = 1e-5;
    std::uint64_t seed = 0;
    double lambda = kDefaultCapacityPenalty;
    /// Record a trace point every `trace_stride` iterations (0 disables the trace).
    std::size_t trace_stride = 1000;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct SaTracePoint {
    std::size_t iteration;
    double current_cost;
    double best_cost;
};

struct SaResult {
    Schedule schedule;
    CostBreakdown cost;
    double initial_cost = 0.0;
    std::vector<SaTracePoint> trace;
};

/// Metropolis acceptance: 1 when the neighbour is cheaper, otherwise
/// exp(-(neighbour - current) / temperature).
double accept_probability(double current_cost, double neighbor_cost, double temperature);

/// Copy of `s` with one uniformly chosen neighbour move applied.
Schedule neighbor(const Schedule& s, std::size_t num_nodes, Rng& rng);

/// Simulated annealing from the sequential-fill schedule. Returns the best
/// schedule seen; deterministic for a fixed seed.
SaResult anneal(const LayeredCircuit& layered, const NetworkTopology& net, const SaParams& params = {});

/// `iteration,current_cost,best_cost` rows.
std::string sa_trace_to_csv(const std::vector<SaTracePoint>& trace);

}  // namespace dqc
