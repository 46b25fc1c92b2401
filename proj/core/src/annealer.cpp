#include "dqc/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dqc/baselines.hpp"
#include "dqc/moves.hpp"

namespace dqc {

void SaParams::validate() const {
    if (max_iterations == 0) throw std::invalid_argument("sa: max_iterations must be positive");
    if (!(initial_temp > 0.0)) throw std::invalid_argument("sa: initial_temp must be positive");
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) throw std::invalid_argument("sa: cooling_rate must lie in (0, 1)");
    if (!(temp_floor > 0.0)) throw std::invalid_argument("sa: temp_floor must be positive");
}

double accept_probability(double current_cost, double neighbor_cost, double temperature) {
    if (neighbor_cost < current_cost) return 1.0;
    return std::exp(-(neighbor_cost - current_cost) / temperature);
}

Schedule neighbor(const Schedule& s, std::size_t num_nodes, Rng& rng) {
    Schedule out = s;
    apply_move(out, kNeighbourMoves[uniform_index(rng, kNeighbourMoves.size())], num_nodes, rng);
    return out;
}

SaResult anneal(const LayeredCircuit& layered, const NetworkTopology& net, const SaParams& params) {
    params.validate();
    net.require_capacity_for(layered.num_qubits);

    const CostModel model(layered, net, params.lambda);
    Rng rng = make_rng(params.seed);

    Schedule current = sequential_schedule(layered, net);
    double current_cost = model.total(current);
    SaResult result{current, model.evaluate(current), current_cost, {}};
    double best_cost = current_cost;

    const std::size_t stride = params.trace_stride;
    if (stride) result.trace.push_back({0, current_cost, best_cost});

    double temp = params.initial_temp;
    for (std::size_t i = 0; i < params.max_iterations; ++i) {
        temp = std::max(temp * params.cooling_rate, params.temp_floor);
        Schedule candidate = neighbor(current, net.num_nodes(), rng);
        const double candidate_cost = model.total(candidate);

        const double p = accept_probability(current_cost, candidate_cost, temp);
        if (p >= 1.0 || uniform_unit(rng) < p) {
            current = std::move(candidate);
            current_cost = candidate_cost;
        }
        if (current_cost < best_cost) {
            best_cost = current_cost;
            result.schedule = current;
        }

        const std::size_t done = i + 1;
        if (stride && (done % stride == 0 || done == params.max_iterations)) {
            result.trace.push_back({done, current_cost, best_cost});
        }
    }
    result.cost = model.evaluate(result.schedule);
    return result;
}

std::string sa_trace_to_csv(const std::vector<SaTracePoint>& trace) {
    std::ostringstream out;
    out << "iteration,current_cost,best_cost\n";
    for (const auto& p : trace) out << p.iteration << ',' << p.current_cost << ',' << p.best_cost << '\n';
    return out.str();
}

}  // namespace dqc
