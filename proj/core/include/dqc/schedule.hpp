#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/network.hpp"

namespace dqc {

inline constexpr double kDefaultCapacityPenalty = 100.0;

/// Qubit-by-time-step matrix of QPU assignments. Row q, column t holds the node
/// that qubit q occupies during layer t. Stored row-major.
class Schedule {
public:
    Schedule() = default;
    Schedule(std::size_t num_qubits, std::size_t num_steps, NodeId fill = 0)
        : num_qubits_(num_qubits), num_steps_(num_steps), cells_(num_qubits * num_steps, fill) {}

    /// Builds a schedule from explicit rows; all rows must be the same length.
    static Schedule from_rows(const std::vector<std::vector<NodeId>>& rows);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_steps() const { return num_steps_; }

    NodeId& at(std::size_t q, std::size_t t) { return cells_[q * num_steps_ + t]; }
    NodeId at(std::size_t q, std::size_t t) const { return cells_[q * num_steps_ + t]; }

    const std::vector<NodeId>& cells() const { return cells_; }
    std::vector<NodeId>& cells() { return cells_; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_columns(std::size_t a, std::size_t b);
    /// True when no qubit ever changes node.
    bool is_time_constant() const;
    /// Largest entry + 1, or 0 when empty.
    std::size_t max_node_plus_one() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::size_t num_qubits_ = 0;
    std::size_t num_steps_ = 0;
    std::vector<NodeId> cells_;
};

/// f = a + b + c. `a` sums hop distances of remote CX gates, `b` sums hop
/// distances of teleportations between consecutive steps, `c` is the capacity
/// penalty (lambda per overfull node per step).
struct CostBreakdown {
    std::int64_t a = 0;
    std::int64_t b = 0;
    double c = 0.0;
    double total = 0.0;

    friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Precomputed per-layer CX lists against a fixed network, for repeated
/// evaluation inside optimizers.
class CostModel {
public:
    CostModel(const LayeredCircuit& layered, const NetworkTopology& net,
              double lambda = kDefaultCapacityPenalty);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_steps() const { return cx_.size(); }
    std::size_t num_nodes() const { return net_->num_nodes(); }
    double lambda() const { return lambda_; }
    const NetworkTopology& network() const { return *net_; }
    const std::vector<std::vector<CxPair>>& cx_pairs() const { return cx_; }

    /// Throws std::invalid_argument on dimension mismatch or out-of-range nodes.
    CostBreakdown evaluate(const Schedule& s) const;
    double total(const Schedule& s) const { return evaluate(s).total; }

private:
    std::size_t num_qubits_;
    std::vector<std::vector<CxPair>> cx_;
    const NetworkTopology* net_;
    double lambda_;
};

CostBreakdown cost(const Schedule& s, const LayeredCircuit& layered, const NetworkTopology& net,
                   double lambda = kDefaultCapacityPenalty);

struct OptimumResult {
    Schedule schedule;
    CostBreakdown cost;
};

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 20;

/// Exhaustive search over all num_nodes^(Q*T) schedules. Ties resolve to the
/// lexicographically smallest row-major cell vector. Throws std::length_error
/// when the search space exceeds `bound`.
OptimumResult brute_force_optimum(const LayeredCircuit& layered, const NetworkTopology& net,
                                  double lambda = kDefaultCapacityPenalty,
                                  std::uint64_t bound = kDefaultEnumerationBound);

/// CSV with header `t0,t1,...` and one row of node indices per qubit.
std::string schedule_to_csv(const Schedule& s);
Schedule schedule_from_csv(std::string_view text);

}  // namespace dqc
