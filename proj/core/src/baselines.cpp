#include "dqc/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dqc/errors.hpp"
#include "dqc/rng.hpp"

namespace dqc {

std::size_t InteractionGraph::total_weight() const {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < num_qubits; ++i)
        for (std::size_t j = i + 1; j < num_qubits; ++j) sum += weights[i][j];
    return sum;
}

InteractionGraph interaction_graph(const Circuit& circuit) {
    InteractionGraph g;
    g.num_qubits = circuit.num_qubits();
    g.weights.assign(g.num_qubits, std::vector<std::size_t>(g.num_qubits, 0));
    for (const Gate& gate : circuit.gates()) {
        if (gate.kind != GateKind::CX) continue;
        ++g.weights[gate.qubits[0]][gate.qubits[1]];
        ++g.weights[gate.qubits[1]][gate.qubits[0]];
    }
    return g;
}

std::size_t cut_weight(const InteractionGraph& g, const PartAssignment& parts) {
    std::size_t cut = 0;
    for (std::size_t i = 0; i < g.num_qubits; ++i)
        for (std::size_t j = i + 1; j < g.num_qubits; ++j)
            if (parts[i] != parts[j]) cut += g.weights[i][j];
    return cut;
}

namespace {

constexpr int kBisectionRestarts = 8;

using Weight = long long;

Weight w(const InteractionGraph& g, Qubit a, Qubit b) { return static_cast<Weight>(g.weights[a][b]); }

/// Splits `vertices` (sorted) into a side of exactly `size_a` and the rest,
/// minimizing the weight crossing the split.
std::vector<bool> bisect(const InteractionGraph& g, const std::vector<Qubit>& vertices, std::size_t size_a,
                         Rng& rng) {
    const std::size_t n = vertices.size();
    std::vector<bool> best_side;
    Weight best_cut = -1;

    for (int restart = 0; restart < kBisectionRestarts; ++restart) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<bool> in_a(n, false);
        for (std::size_t k = 0; k < size_a; ++k) in_a[order[k]] = true;

        // Kernighan-Lin pairwise swaps until no swap lowers the cut.
        for (;;) {
            std::vector<Weight> gain(n, 0);  // external minus internal weight
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) gain[i] += (in_a[i] != in_a[j] ? 1 : -1) * w(g, vertices[i], vertices[j]);

            Weight best_gain = 0;
            std::size_t best_i = n, best_j = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (!in_a[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (in_a[j]) continue;
                    Weight delta = gain[i] + gain[j] - 2 * w(g, vertices[i], vertices[j]);
                    if (delta > best_gain) {
                        best_gain = delta;
                        best_i = i;
                        best_j = j;
                    }
                }
            }
            if (best_i == n) break;
            in_a[best_i] = false;
            in_a[best_j] = true;
        }

        Weight cut = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (in_a[i] != in_a[j]) cut += w(g, vertices[i], vertices[j]);
        if (best_cut < 0 || cut < best_cut) {
            best_cut = cut;
            best_side = in_a;
        }
    }
    return best_side;
}

void recursive_bisection(const InteractionGraph& g, const std::vector<Qubit>& vertices, std::size_t lo,
                         std::size_t hi, const std::vector<std::size_t>& caps, PartAssignment& parts, Rng& rng) {
    if (vertices.empty()) return;
    if (hi - lo == 1) {
        for (Qubit v : vertices) parts[v] = lo;
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t cap_a = std::accumulate(caps.begin() + static_cast<std::ptrdiff_t>(lo),
                                              caps.begin() + static_cast<std::ptrdiff_t>(mid), std::size_t{0});
    const std::size_t cap_b = std::accumulate(caps.begin() + static_cast<std::ptrdiff_t>(mid),
                                              caps.begin() + static_cast<std::ptrdiff_t>(hi), std::size_t{0});
    const std::size_t n = vertices.size();

    // Split proportional to capacity, clamped so both halves fit.
    std::size_t size_a = (n * cap_a + (cap_a + cap_b) / 2) / (cap_a + cap_b);
    size_a = std::min(size_a, cap_a);
    if (n > cap_b) size_a = std::max(size_a, n - cap_b);

    std::vector<bool> in_a = bisect(g, vertices, size_a, rng);
    std::vector<Qubit> side_a, side_b;
    for (std::size_t i = 0; i < n; ++i) (in_a[i] ? side_a : side_b).push_back(vertices[i]);
    recursive_bisection(g, side_a, lo, mid, caps, parts, rng);
    recursive_bisection(g, side_b, mid, hi, caps, parts, rng);
}

}  // namespace

std::size_t refine_partition(const InteractionGraph& g, PartAssignment& parts,
                             const std::vector<std::size_t>& part_capacity) {
    const std::size_t n = g.num_qubits;
    const std::size_t k = part_capacity.size();
    std::size_t steps = 0;

    for (;;) {
        std::vector<std::size_t> load(k, 0);
        for (std::size_t v = 0; v < n; ++v) ++load[parts[v]];
        // conn[v][p]: weight from v into part p
        std::vector<std::vector<Weight>> conn(n, std::vector<Weight>(k, 0));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                if (u != v) conn[v][parts[u]] += w(g, v, u);

        Weight best_gain = 0;
        enum class Step { None, Move, Swap } step = Step::None;
        std::size_t first = 0, second = 0;

        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t p = 0; p < k; ++p) {
                if (p == parts[v] || load[p] >= part_capacity[p]) continue;
                Weight gain = conn[v][p] - conn[v][parts[v]];
                if (gain > best_gain) {
                    best_gain = gain;
                    step = Step::Move;
                    first = v;
                    second = p;
                }
            }
        }
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const std::size_t pu = parts[u], pv = parts[v];
                if (pu == pv) continue;
                Weight gain = (conn[u][pv] - conn[u][pu]) + (conn[v][pu] - conn[v][pv]) - 2 * w(g, u, v);
                if (gain > best_gain) {
                    best_gain = gain;
                    step = Step::Swap;
                    first = u;
                    second = v;
                }
            }
        }

        if (step == Step::None) break;
        if (step == Step::Move) {
            parts[first] = second;
        } else {
            std::swap(parts[first], parts[second]);
        }
        ++steps;
    }
    return steps;
}

PartAssignment partition(const InteractionGraph& g, std::size_t k, const std::vector<std::size_t>& part_capacity,
                         std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("partition needs at least one part");
    if (part_capacity.size() != k) throw std::invalid_argument("one capacity per part required");
    const std::size_t total = std::accumulate(part_capacity.begin(), part_capacity.end(), std::size_t{0});
    if (total < g.num_qubits) {
        throw InfeasibleError("partition capacity " + std::to_string(total) + " below qubit count " +
                              std::to_string(g.num_qubits));
    }

    PartAssignment parts(g.num_qubits, 0);
    std::vector<Qubit> all(g.num_qubits);
    std::iota(all.begin(), all.end(), 0);
    Rng rng = make_rng(seed);
    recursive_bisection(g, all, 0, k, part_capacity, parts, rng);
    refine_partition(g, parts, part_capacity);
    return parts;
}

Schedule static_schedule(const std::vector<NodeId>& assignment, std::size_t num_steps) {
    Schedule s(assignment.size(), num_steps);
    for (std::size_t q = 0; q < assignment.size(); ++q)
        for (std::size_t t = 0; t < num_steps; ++t) s.at(q, t) = assignment[q];
    return s;
}

Schedule gp_schedule(const Circuit& circuit, const LayeredCircuit& layered, const NetworkTopology& net,
                     std::uint64_t seed, const GpOptions& options) {
    net.require_capacity_for(circuit.num_qubits());
    const InteractionGraph g = interaction_graph(circuit);
    const std::size_t k = net.num_nodes();
    const PartAssignment parts = partition(g, k, net.capacities(), seed);

    std::vector<NodeId> node_of_part(k);
    std::iota(node_of_part.begin(), node_of_part.end(), 0);

    auto assignment_for = [&](const std::vector<NodeId>& mapping) {
        std::vector<NodeId> a(parts.size());
        for (std::size_t q = 0; q < parts.size(); ++q) a[q] = mapping[parts[q]];
        return a;
    };

    if (options.remap_parts) {
        std::vector<std::size_t> part_size(k, 0);
        for (std::size_t p : parts) ++part_size[p];
        const CostModel model(layered, net, options.lambda);
        double current = model.total(static_schedule(assignment_for(node_of_part), layered.depth()));
        for (bool improved = true; improved;) {
            improved = false;
            double best = current;
            std::size_t best_a = 0, best_b = 0;
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b) {
                    if (part_size[a] > net.capacity(node_of_part[b]) || part_size[b] > net.capacity(node_of_part[a]))
                        continue;
                    std::swap(node_of_part[a], node_of_part[b]);
                    double c = model.total(static_schedule(assignment_for(node_of_part), layered.depth()));
                    std::swap(node_of_part[a], node_of_part[b]);
                    if (c < best) {
                        best = c;
                        best_a = a;
                        best_b = b;
                        improved = true;
                    }
                }
            }
            if (improved) {
                std::swap(node_of_part[best_a], node_of_part[best_b]);
                current = best;
            }
        }
    }
    return static_schedule(assignment_for(node_of_part), layered.depth());
}

std::vector<NodeId> sequential_assignment(std::size_t num_qubits, const NetworkTopology& net) {
    net.require_capacity_for(num_qubits);
    std::vector<NodeId> out;
    out.reserve(num_qubits);
    for (NodeId n = 0; n < net.num_nodes() && out.size() < num_qubits; ++n)
        for (std::size_t slot = 0; slot < net.capacity(n) && out.size() < num_qubits; ++slot) out.push_back(n);
    return out;
}

Schedule sequential_schedule(const LayeredCircuit& layered, const NetworkTopology& net) {
    return static_schedule(sequential_assignment(layered.num_qubits, net), layered.depth());
}

Schedule random_sequential_schedule(const LayeredCircuit& layered, const NetworkTopology& net, std::uint64_t seed) {
    std::vector<NodeId> assignment = sequential_assignment(layered.num_qubits, net);
    Rng rng = make_rng(seed);
    std::shuffle(assignment.begin(), assignment.end(), rng);
    return static_schedule(assignment, layered.depth());
}

}  // namespace dqc
