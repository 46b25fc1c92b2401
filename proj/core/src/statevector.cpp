#include "dqc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dqc {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("statevector needs 2^n amplitudes");
    }
}

namespace {

/// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to qubit q.
void apply_single(std::vector<Amplitude>& amps, std::size_t q, Amplitude m00, Amplitude m01, Amplitude m10,
                  Amplitude m11) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | bit];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | bit] = m10 * a0 + m11 * a1;
    }
}

}  // namespace

void StateVector::apply(const Gate& gate) {
    for (Qubit q : gate.qubits) {
        if (q >= num_qubits_) throw std::out_of_range("gate qubit " + std::to_string(q) + " outside register");
    }
    const std::size_t q = gate.qubits[0];
    switch (gate.kind) {
        case GateKind::X: {
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
            break;
        }
        case GateKind::SX: {
            const Amplitude p{0.5, 0.5};
            const Amplitude m{0.5, -0.5};
            apply_single(amps_, q, p, m, m, p);
            break;
        }
        case GateKind::RZ: {
            const Amplitude lo = std::polar(1.0, -gate.angle / 2.0);
            const Amplitude hi = std::polar(1.0, gate.angle / 2.0);
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & bit) ? hi : lo;
            break;
        }
        case GateKind::CX: {
            const std::size_t control = std::size_t{1} << gate.qubits[0];
            const std::size_t target = std::size_t{1} << gate.qubits[1];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if ((i & control) && !(i & target)) std::swap(amps_[i], amps_[i | target]);
            break;
        }
    }
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return sum;
}

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.num_qubits_ != num_qubits_) throw std::invalid_argument("inner product of states with different widths");
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
    return sum;
}

StateVector run(const Circuit& circuit, std::size_t qubit_cap) {
    if (circuit.num_qubits() > qubit_cap) {
        throw std::length_error("circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits, simulator cap is " + std::to_string(qubit_cap));
    }
    StateVector sv(circuit.num_qubits());
    for (const Gate& g : circuit.gates()) sv.apply(g);
    return sv;
}

double state_fidelity(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity of states with different widths");
    return std::min(1.0, std::norm(a.inner(b)));
}

double fidelity(const StateVector& target, const Circuit& candidate) {
    if (target.num_qubits() != candidate.num_qubits()) {
        throw std::invalid_argument("fidelity: target has " + std::to_string(target.num_qubits()) +
                                    " qubits, candidate " + std::to_string(candidate.num_qubits()));
    }
    return state_fidelity(target, run(candidate));
}

std::string amplitudes_to_csv(const StateVector& sv) {
    std::ostringstream out;
    out << std::setprecision(17) << "index,re,im\n";
    for (std::size_t i = 0; i < sv.amplitudes().size(); ++i)
        out << i << ',' << sv[i].real() << ',' << sv[i].imag() << '\n';
    return out.str();
}

}  // namespace dqc
