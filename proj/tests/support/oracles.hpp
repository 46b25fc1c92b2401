#pragma once

// Reference implementations used only by tests. Each one is written without
// calling the library routine it is compared against.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/network.hpp"

namespace dqc::oracle {

using Rows = std::vector<std::vector<std::size_t>>;
using Matrix = std::vector<std::vector<long>>;

/// Floyd-Warshall hop counts; unreachable pairs hold -1.
Matrix floyd_warshall(const std::vector<Edge>& edges, std::size_t num_nodes);

/// Layer index of every gate, found by scanning all earlier gates for a shared
/// qubit (quadratic, no per-qubit frontier).
std::vector<std::size_t> layer_of_each_gate(const Circuit& circuit);

struct TermCost {
    long a = 0;
    long b = 0;
    long violations = 0;
    double total(double lambda) const { return static_cast<double>(a + b) + lambda * static_cast<double>(violations); }
};

/// Evaluates the three cost terms one at a time from the gates of every layer
/// and a dense distance matrix.
TermCost term_cost(const Rows& schedule, const std::vector<std::vector<Gate>>& layers, const Matrix& dist,
                   const std::vector<std::size_t>& capacities);

/// Minimum over every num_nodes^(Q*T) schedule, by recursion over cells.
double exhaustive_minimum(std::size_t num_qubits, const std::vector<std::vector<Gate>>& layers, const Matrix& dist,
                          const std::vector<std::size_t>& capacities, double lambda);

using Amp = std::complex<double>;
using State = std::vector<Amp>;
using Dense = std::vector<std::vector<Amp>>;

/// Full 2^n x 2^n operator of one gate, qubit 0 least significant, built from
/// Kronecker products (single-qubit gates) or a basis permutation (CX).
Dense gate_operator(const Gate& gate, std::size_t num_qubits);

/// |0...0> pushed through dense operator products.
State simulate_dense(const Circuit& circuit);

/// |<a|b>|^2
double overlap(const State& a, const State& b);

/// Smallest cut over every capacity-feasible assignment of qubits to k parts.
std::size_t exhaustive_min_cut(const std::vector<std::vector<std::size_t>>& weights, std::size_t k,
                               const std::vector<std::size_t>& capacities);

}  // namespace dqc::oracle
