#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqc {

using Qubit = std::size_t;

enum class GateKind { X, SX, RZ, CX };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
inline constexpr std::size_t gate_arity(GateKind kind) { return kind == GateKind::CX ? 2 : 1; }

/// One gate of the {X, SX, RZ, CX} basis. For CX, `qubits[0]` is the control.
/// `angle` is meaningful only for RZ and is kept at 0 otherwise.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Qubit> qubits;
    double angle = 0.0;

    static Gate x(Qubit q) { return {GateKind::X, {q}, 0.0}; }
    static Gate sx(Qubit q) { return {GateKind::SX, {q}, 0.0}; }
    static Gate rz(Qubit q, double theta) { return {GateKind::RZ, {q}, theta}; }
    static Gate cx(Qubit control, Qubit target) { return {GateKind::CX, {control, target}, 0.0}; }

    bool acts_on(Qubit q) const;
    /// Throws std::invalid_argument when the gate is malformed for a register of `num_qubits`.
    void validate(std::size_t num_qubits) const;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates in program order over a fixed-size register.
class Circuit {
public:
    explicit Circuit(std::size_t num_qubits = 1, std::vector<Gate> gates = {});

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Appends after validation against the register size.
    void append(Gate gate);
    std::size_t cx_count() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// Circuit split into time steps. Gates within a layer act on disjoint qubits.
struct LayeredCircuit {
    std::size_t num_qubits = 0;
    std::vector<std::vector<Gate>> layers;

    std::size_t depth() const { return layers.size(); }
};

using CxPair = std::pair<Qubit, Qubit>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the line-oriented circuit format:
///
///     # comment
///     qubits 3
///     x 0
///     sx 1
///     rz 2 1.5707963
///     cx 0 1
///
/// Throws ParseError carrying the 1-based line and column of the offending token.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. Angles are written with 17 significant digits so
/// that parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

/// ASAP layering: every gate lands one layer after the latest layer already
/// holding a gate on any of its qubits.
LayeredCircuit layerize(const Circuit& circuit);

/// Flattens layers back to a program-ordered circuit.
Circuit flatten(const LayeredCircuit& layered);

/// Random circuit over {X, SX, RZ, CX} whose ASAP depth is exactly `depth`.
/// Each layer keeps every qubit busy: a free qubit starts a CX with a second
/// free qubit with probability `p_cx`, otherwise gets a uniform 1-qubit gate.
Circuit random_circuit(std::size_t num_qubits, std::size_t depth, std::uint64_t seed,
                       double p_cx = 0.5);

/// (control, target) pairs of the CX gates in each layer.
std::vector<std::vector<CxPair>> cx_pairs_per_layer(const LayeredCircuit& layered);

}  // namespace dqc
