#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace dqc::oracle {

Matrix floyd_warshall(const std::vector<Edge>& edges, std::size_t num_nodes) {
    constexpr long inf = std::numeric_limits<long>::max() / 4;
    Matrix d(num_nodes, std::vector<long>(num_nodes, inf));
    for (std::size_t i = 0; i < num_nodes; ++i) d[i][i] = 0;
    for (const auto& [u, v] : edges) {
        d[u][v] = std::min(d[u][v], 1L);
        d[v][u] = std::min(d[v][u], 1L);
    }
    for (std::size_t k = 0; k < num_nodes; ++k)
        for (std::size_t i = 0; i < num_nodes; ++i)
            for (std::size_t j = 0; j < num_nodes; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = -1;
    return d;
}

std::vector<std::size_t> layer_of_each_gate(const Circuit& circuit) {
    const auto& gates = circuit.gates();
    std::vector<std::size_t> layer(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            bool shared = false;
            for (Qubit a : gates[i].qubits)
                for (Qubit b : gates[j].qubits) shared = shared || a == b;
            if (shared) layer[i] = std::max(layer[i], layer[j] + 1);
        }
    }
    return layer;
}

TermCost term_cost(const Rows& schedule, const std::vector<std::vector<Gate>>& layers, const Matrix& dist,
                   const std::vector<std::size_t>& capacities) {
    TermCost c;
    const std::size_t steps = layers.size();
    for (std::size_t t = 0; t < steps; ++t) {
        for (const Gate& g : layers[t]) {
            if (g.kind != GateKind::CX) continue;
            c.a += dist[schedule[g.qubits[0]][t]][schedule[g.qubits[1]][t]];
        }
    }
    for (const auto& row : schedule) {
        for (std::size_t t = 0; t + 1 < steps; ++t) c.b += dist[row[t]][row[t + 1]];
    }
    for (std::size_t t = 0; t < steps; ++t) {
        for (std::size_t n = 0; n < capacities.size(); ++n) {
            std::size_t load = 0;
            for (const auto& row : schedule) load += row[t] == n ? 1 : 0;
            if (load > capacities[n]) ++c.violations;
        }
    }
    return c;
}

double exhaustive_minimum(std::size_t num_qubits, const std::vector<std::vector<Gate>>& layers, const Matrix& dist,
                          const std::vector<std::size_t>& capacities, double lambda) {
    const std::size_t steps = layers.size();
    Rows s(num_qubits, std::vector<std::size_t>(steps, 0));
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t)> rec = [&](std::size_t cell) {
        if (cell == num_qubits * steps) {
            best = std::min(best, term_cost(s, layers, dist, capacities).total(lambda));
            return;
        }
        for (std::size_t n = 0; n < capacities.size(); ++n) {
            s[cell / steps][cell % steps] = n;
            rec(cell + 1);
        }
    };
    rec(0);
    return best;
}

namespace {

using M2 = std::array<std::array<Amp, 2>, 2>;

M2 single_qubit_matrix(const Gate& g) {
    const Amp i{0.0, 1.0};
    switch (g.kind) {
        case GateKind::X: return {{{0.0, 1.0}, {1.0, 0.0}}};
        case GateKind::SX: {
            const Amp p = (1.0 + i) / 2.0, m = (1.0 - i) / 2.0;
            return {{{p, m}, {m, p}}};
        }
        case GateKind::RZ: return {{{std::exp(-i * g.angle / 2.0), 0.0}, {0.0, std::exp(i * g.angle / 2.0)}}};
        case GateKind::CX: break;
    }
    return {};
}

Dense kron(const Dense& a, const Dense& b) {
    const std::size_t n = a.size(), m = b.size();
    Dense out(n * m, std::vector<Amp>(n * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return out;
}

}  // namespace

Dense gate_operator(const Gate& gate, std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (gate.kind == GateKind::CX) {
        Dense op(dim, std::vector<Amp>(dim));
        const std::size_t c = gate.qubits[0], t = gate.qubits[1];
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t row = col;
            if ((col >> c) & 1) row ^= std::size_t{1} << t;
            op[row][col] = 1.0;
        }
        return op;
    }
    const M2 u = single_qubit_matrix(gate);
    const Dense id{{1.0, 0.0}, {0.0, 1.0}};
    const Dense small{{u[0][0], u[0][1]}, {u[1][0], u[1][1]}};
    // Highest qubit is the leftmost factor.
    Dense op{{1.0}};
    for (std::size_t q = num_qubits; q-- > 0;) op = kron(op, q == gate.qubits[0] ? small : id);
    return op;
}

State simulate_dense(const Circuit& circuit) {
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    State psi(dim, 0.0);
    psi[0] = 1.0;
    for (const Gate& g : circuit.gates()) {
        const Dense op = gate_operator(g, circuit.num_qubits());
        State next(dim, 0.0);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) next[r] += op[r][c] * psi[c];
        psi = std::move(next);
    }
    return psi;
}

double overlap(const State& a, const State& b) {
    Amp s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return std::norm(s);
}

std::size_t exhaustive_min_cut(const std::vector<std::vector<std::size_t>>& weights, std::size_t k,
                               const std::vector<std::size_t>& capacities) {
    const std::size_t n = weights.size();
    std::vector<std::size_t> part(n, 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::function<void(std::size_t)> rec = [&](std::size_t q) {
        if (q == n) {
            std::vector<std::size_t> load(k, 0);
            for (std::size_t p : part) ++load[p];
            for (std::size_t p = 0; p < k; ++p)
                if (load[p] > capacities[p]) return;
            std::size_t cut = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (part[i] != part[j]) cut += weights[i][j];
            best = std::min(best, cut);
            return;
        }
        for (std::size_t p = 0; p < k; ++p) {
            part[q] = p;
            rec(q + 1);
        }
    };
    rec(0);
    return best;
}

}  // namespace dqc::oracle
