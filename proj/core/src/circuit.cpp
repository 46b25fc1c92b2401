#include "dqc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "dqc/rng.hpp"

namespace dqc {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::SX: return "sx";
        case GateKind::RZ: return "rz";
        case GateKind::CX: return "cx";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    if (name == "x") return GateKind::X;
    if (name == "sx") return GateKind::SX;
    if (name == "rz") return GateKind::RZ;
    if (name == "cx") return GateKind::CX;
    return std::nullopt;
}

bool Gate::acts_on(Qubit q) const {
    return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

void Gate::validate(std::size_t num_qubits) const {
    if (qubits.size() != gate_arity(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + ": wrong number of qubits");
    }
    for (Qubit q : qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range for " +
                                        std::to_string(num_qubits) + " qubits");
        }
    }
    if (kind == GateKind::CX && qubits[0] == qubits[1]) {
        throw std::invalid_argument("cx: control and target must differ");
    }
    if (!std::isfinite(angle)) throw std::invalid_argument("gate angle must be finite");
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0) throw std::invalid_argument("circuit needs at least one qubit");
    for (const Gate& g : gates_) g.validate(num_qubits_);
}

void Circuit::append(Gate gate) {
    gate.validate(num_qubits_);
    gates_.push_back(std::move(gate));
}

std::size_t Circuit::cx_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::CX; }));
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::size_t parse_index(const Token& tok, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    const char* end = tok.text.data() + tok.text.size();
    auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, tok.column, std::string("expected ") + what + ", got '" +
                                                   std::string(tok.text) + "'");
    }
    return value;
}

double parse_angle(const Token& tok, std::size_t line_no) {
    double value = 0.0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ParseError(line_no, tok.column, "expected finite angle, got '" + std::string(tok.text) + "'");
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<std::size_t> num_qubits;
    std::vector<Gate> gates;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = nl + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        if (head.text == "qubits") {
            if (num_qubits) throw ParseError(line_no, head.column, "duplicate 'qubits' declaration");
            if (tokens.size() != 2) throw ParseError(line_no, head.column, "'qubits' takes exactly one count");
            std::size_t n = parse_index(tokens[1], line_no, "qubit count");
            if (n == 0) throw ParseError(line_no, tokens[1].column, "qubit count must be positive");
            num_qubits = n;
            continue;
        }

        auto kind = gate_kind_from_name(head.text);
        if (!kind) throw ParseError(line_no, head.column, "unknown gate '" + std::string(head.text) + "'");
        if (!num_qubits) throw ParseError(line_no, head.column, "gate before 'qubits' declaration");

        const std::size_t arity = gate_arity(*kind);
        const std::size_t expected = arity + (*kind == GateKind::RZ ? 1 : 0);
        if (tokens.size() < 1 + arity) {
            throw ParseError(line_no, head.column,
                             std::string(head.text) + " expects " + std::to_string(arity) + " qubit(s)");
        }
        if (tokens.size() > 1 + expected) {
            const Token& extra = tokens[1 + expected];
            throw ParseError(line_no, extra.column,
                             *kind == GateKind::RZ ? "unexpected token after angle"
                                                   : std::string(head.text) + " takes no angle");
        }
        if (*kind == GateKind::RZ && tokens.size() != 1 + expected) {
            throw ParseError(line_no, head.column, "rz requires an angle");
        }

        Gate gate{*kind, {}, 0.0};
        for (std::size_t k = 0; k < arity; ++k) {
            const Token& tok = tokens[1 + k];
            std::size_t q = parse_index(tok, line_no, "qubit index");
            if (q >= *num_qubits) {
                throw ParseError(line_no, tok.column, "qubit index " + std::to_string(q) +
                                                          " out of range (qubits " +
                                                          std::to_string(*num_qubits) + ")");
            }
            gate.qubits.push_back(q);
        }
        if (*kind == GateKind::CX && gate.qubits[0] == gate.qubits[1]) {
            throw ParseError(line_no, tokens[2].column, "cx control and target must differ");
        }
        if (*kind == GateKind::RZ) gate.angle = parse_angle(tokens[2], line_no);
        gates.push_back(std::move(gate));
    }
    if (!num_qubits) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'qubits' declaration");
    return Circuit(*num_qubits, std::move(gates));
}

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "qubits " << circuit.num_qubits() << '\n';
    for (const Gate& g : circuit.gates()) {
        out << gate_name(g.kind);
        for (Qubit q : g.qubits) out << ' ' << q;
        if (g.kind == GateKind::RZ) out << ' ' << g.angle;
        out << '\n';
    }
    return out.str();
}

LayeredCircuit layerize(const Circuit& circuit) {
    LayeredCircuit out;
    out.num_qubits = circuit.num_qubits();
    // next_free[q] = first layer index q is not yet occupied in
    std::vector<std::size_t> next_free(circuit.num_qubits(), 0);
    for (const Gate& g : circuit.gates()) {
        std::size_t layer = 0;
        for (Qubit q : g.qubits) layer = std::max(layer, next_free[q]);
        if (layer == out.layers.size()) out.layers.emplace_back();
        out.layers[layer].push_back(g);
        for (Qubit q : g.qubits) next_free[q] = layer + 1;
    }
    return out;
}

Circuit flatten(const LayeredCircuit& layered) {
    Circuit out(std::max<std::size_t>(layered.num_qubits, 1));
    for (const auto& layer : layered.layers)
        for (const Gate& g : layer) out.append(g);
    return out;
}

Circuit random_circuit(std::size_t num_qubits, std::size_t depth, std::uint64_t seed, double p_cx) {
    if (num_qubits < 2) throw std::invalid_argument("random_circuit needs at least 2 qubits");
    if (depth == 0) throw std::invalid_argument("random_circuit needs a positive depth");
    if (!(p_cx >= 0.0 && p_cx <= 1.0)) throw std::invalid_argument("p_cx must lie in [0, 1]");

    Rng rng = make_rng(seed);
    Circuit circuit(num_qubits);
    std::vector<Qubit> order(num_qubits);
    for (Qubit q = 0; q < num_qubits; ++q) order[q] = q;

    for (std::size_t layer = 0; layer < depth; ++layer) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<bool> busy(num_qubits, false);
        for (std::size_t i = 0; i < num_qubits; ++i) {
            const Qubit q = order[i];
            if (busy[q]) continue;
            busy[q] = true;

            std::vector<Qubit> free;
            for (std::size_t j = i + 1; j < num_qubits; ++j)
                if (!busy[order[j]]) free.push_back(order[j]);

            if (!free.empty() && coin_flip(rng, p_cx)) {
                const Qubit partner = free[uniform_index(rng, free.size())];
                busy[partner] = true;
                circuit.append(Gate::cx(q, partner));
                continue;
            }
            switch (uniform_index(rng, 3)) {
                case 0: circuit.append(Gate::x(q)); break;
                case 1: circuit.append(Gate::sx(q)); break;
                default:
                    circuit.append(Gate::rz(q, uniform_unit(rng) * 2.0 * std::numbers::pi));
                    break;
            }
        }
    }
    return circuit;
}

std::vector<std::vector<CxPair>> cx_pairs_per_layer(const LayeredCircuit& layered) {
    std::vector<std::vector<CxPair>> out(layered.layers.size());
    for (std::size_t t = 0; t < layered.layers.size(); ++t) {
        for (const Gate& g : layered.layers[t]) {
            if (g.kind == GateKind::CX) out[t].emplace_back(g.qubits[0], g.qubits[1]);
        }
    }
    return out;
}

}  // namespace dqc
