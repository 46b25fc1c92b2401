#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqc/annealer.hpp"
#include "dqc/circuit.hpp"
#include "dqc/ea_scheduler.hpp"
#include "dqc/network.hpp"
#include "dqc/rng.hpp"
#include "dqc/schedule.hpp"
#include "dqc/statevector.hpp"

namespace dqc {

/// Genome of the circuit optimizer: one gate per gene, in program order.
using GateGene = Gate;
using GeneSequence = std::vector<GateGene>;

/// Which assignment algorithm turns a circuit into the schedule whose cost is u(circuit).
enum class CommCostScheduler { Gp, Sa, Ea };

struct QcoParams : EvolutionParams {
    double epsilon = 0.003;
    double penalty = -100.0;
    /// Length cap for freshly generated circuits, and for children unless the
    /// original circuit is longer (then its length is the cap).
    std::size_t max_gates = 100;
    double lambda = kDefaultCapacityPenalty;
    CommCostScheduler scheduler = CommCostScheduler::Gp;
    SaParams sa;  // used when scheduler == Sa
    EaParams ea;  // used when scheduler == Ea

    void validate() const;
};

/// Raised when the original circuit already has zero communication cost.
class CommunicationFreeError : public std::runtime_error {
public:
    CommunicationFreeError() : std::runtime_error("already communication-free: u(original) = 0") {}
};

struct CommCost {
    Schedule schedule;
    CostBreakdown cost;
};

/// u(circuit): the cost of the schedule produced by the configured assignment
/// algorithm (graph partitioning by default, seeded with params.seed).
CommCost communication_cost(const Circuit& circuit, const NetworkTopology& net, const QcoParams& params);

struct QcoScore {
    double fitness = 0.0;
    double fidelity = 0.0;
    double u = 0.0;
};

/// Fitness of candidates against a fixed original. u(original) and the target
/// state are computed once at construction.
class QcoObjective {
public:
    QcoObjective(const Circuit& original, const NetworkTopology& net, const QcoParams& params);

    double u_original() const { return u_original_; }
    const StateVector& target() const { return target_; }

    /// penalty when fidelity < 1 - epsilon, else fidelity - u(candidate) / u(original).
    /// Throws CommunicationFreeError when u(original) = 0.
    QcoScore score(const Circuit& candidate) const;

private:
    const Circuit* original_;
    const NetworkTopology* net_;
    QcoParams params_;
    StateVector target_;
    double u_original_;
};

double qco_fitness(const Circuit& original, const Circuit& candidate, const NetworkTopology& net,
                   const QcoParams& params = {});

/// Uniform random gate on `num_qubits` qubits; RZ angles uniform in [0, 2pi).
GateGene random_gene(std::size_t num_qubits, Rng& rng);
/// Length uniform in [1, max_gates], genes drawn with random_gene.
GeneSequence random_genes(std::size_t num_qubits, std::size_t max_gates, Rng& rng);

/// p1[0, cut1) followed by p2[cut2, end).
GeneSequence single_point_crossover(const GeneSequence& p1, const GeneSequence& p2, std::size_t cut1,
                                    std::size_t cut2);
/// Slot-by-slot coin flips over the common prefix, then the longer parent's
/// tail with probability 1/2.
GeneSequence uniform_crossover(const GeneSequence& p1, const GeneSequence& p2, Rng& rng);
/// Single-point (independent cut per parent) or uniform, equally likely;
/// the child is truncated to `max_gates`.
GeneSequence qco_crossover(const GeneSequence& p1, const GeneSequence& p2, Rng& rng, std::size_t max_gates);

enum class GeneMutation { AddGate, RemoveGate, SwapGates, ShuffleSubset, MutateGate };

void apply_gene_mutation(GeneSequence& genes, GeneMutation method, std::size_t num_qubits, std::size_t max_gates,
                         Rng& rng);
/// One uniformly chosen mutation.
GeneSequence qco_mutate(const GeneSequence& genes, Rng& rng, std::size_t max_gates, std::size_t num_qubits);

struct QcoTracePoint {
    std::size_t generation;
    double best_fitness;
    double mean_fitness;
};

struct QcoReport {
    double best_fitness = 0.0;
    double fidelity = 0.0;
    double u_original = 0.0;
    double u_optimized = 0.0;
    std::size_t generations_run = 0;
    std::uint64_t seed = 0;
    /// False when every individual ended below the fidelity threshold.
    bool success = false;
};

struct QcoResult {
    Circuit circuit;
    double fitness = 0.0;
    QcoReport report;
    Schedule schedule;
    CostBreakdown cost;
    std::vector<QcoTracePoint> trace;
};

/// Elitist EA over gate sequences. Throws CommunicationFreeError when the
/// original has nothing to optimize.
QcoResult qco_evolve(const Circuit& original, const NetworkTopology& net, const QcoParams& params = {});

std::string qco_report_to_json(const QcoReport& report);

}  // namespace dqc
