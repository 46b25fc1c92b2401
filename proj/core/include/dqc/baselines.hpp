#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/network.hpp"
#include "dqc/schedule.hpp"

namespace dqc {

/// Qubit interaction graph: weights[i][j] counts CX gates on {i, j} in either
/// orientation. Symmetric with a zero diagonal.
struct InteractionGraph {
    std::size_t num_qubits = 0;
    std::vector<std::vector<std::size_t>> weights;

    std::size_t total_weight() const;
};

InteractionGraph interaction_graph(const Circuit& circuit);

/// Part index per qubit.
using PartAssignment = std::vector<std::size_t>;

/// Sum of weights over qubit pairs placed in different parts.
std::size_t cut_weight(const InteractionGraph& g, const PartAssignment& parts);

/// Capacity-bounded k-way min-cut partition: recursive bisection with
/// Kernighan-Lin pairwise-swap refinement at every level, then a k-way
/// move/swap refinement pass. Deterministic per seed. Throws InfeasibleError
/// when the capacities cannot hold every qubit.
PartAssignment partition(const InteractionGraph& g, std::size_t k, const std::vector<std::size_t>& part_capacity,
                         std::uint64_t seed);

/// Greedy k-way refinement: applies the best improving single move (into a part
/// with a free slot) or pairwise swap until none remains. Never increases the
/// cut; ties go to the lowest qubit indices. Returns the number of steps applied.
std::size_t refine_partition(const InteractionGraph& g, PartAssignment& parts,
                             const std::vector<std::size_t>& part_capacity);

/// Expands a per-qubit node assignment into a time-constant schedule.
Schedule static_schedule(const std::vector<NodeId>& assignment, std::size_t num_steps);

struct GpOptions {
    /// Permute part labels onto nodes to lower cost on non-uniform-distance
    /// networks. Off by default: part p runs on node p.
    bool remap_parts = false;
    double lambda = kDefaultCapacityPenalty;
};

/// Graph-partitioning baseline: k = number of nodes, part capacity = node capacity.
Schedule gp_schedule(const Circuit& circuit, const LayeredCircuit& layered, const NetworkTopology& net,
                     std::uint64_t seed, const GpOptions& options = {});

/// Fills node 0 to capacity with qubits 0, 1, ..., then node 1, and so on.
std::vector<NodeId> sequential_assignment(std::size_t num_qubits, const NetworkTopology& net);

Schedule sequential_schedule(const LayeredCircuit& layered, const NetworkTopology& net);

/// Sequential fill with the qubit-to-node mapping shuffled.
Schedule random_sequential_schedule(const LayeredCircuit& layered, const NetworkTopology& net, std::uint64_t seed);

}  // namespace dqc
