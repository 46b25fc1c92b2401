#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultSimulatorQubitCap = 20;

/// Dense n-qubit state. Qubit 0 is the least-significant bit of the basis
/// index, so |q1 q0> = |10> is amplitude index 2.
class StateVector {
public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits);
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }

    /// Gate conventions:
    ///   X  = [[0, 1], [1, 0]]
    ///   SX = (1+i)/2 * [[1, -i], [-i, 1]]
    ///   RZ(theta) = diag(e^{-i theta/2}, e^{i theta/2})
    ///   CX flips the target where the control bit is 1.
    /// Throws std::out_of_range on a qubit index past the register.
    void apply(const Gate& gate);

    double norm_squared() const;
    /// <this|other>
    Amplitude inner(const StateVector& other) const;

private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Applies every gate of `circuit` to |0...0>. Throws std::length_error when
/// the register is wider than `qubit_cap`.
StateVector run(const Circuit& circuit, std::size_t qubit_cap = kDefaultSimulatorQubitCap);

/// |<a|b>|^2, capped at 1 against rounding. Throws std::invalid_argument on a qubit-count mismatch.
double state_fidelity(const StateVector& a, const StateVector& b);

/// |<target|run(candidate)|0>|^2; insensitive to global phase.
double fidelity(const StateVector& target, const Circuit& candidate);

/// `index,re,im` rows, 17 significant digits.
std::string amplitudes_to_csv(const StateVector& sv);

}  // namespace dqc
