#include "dqc/ea_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dqc/baselines.hpp"
#include "dqc/moves.hpp"

namespace dqc {

namespace {

std::size_t fraction_of(double rate, std::size_t n) {
    return static_cast<std::size_t>(std::ceil(rate * static_cast<double>(n) - 1e-9));
}

}  // namespace

std::size_t EvolutionParams::offspring_count() const {
    return std::max<std::size_t>(1, fraction_of(offspring_rate, population_size));
}

std::size_t EvolutionParams::replace_count() const {
    return std::clamp<std::size_t>(fraction_of(replace_rate, population_size), 1, population_size - 1);
}

void EvolutionParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("ea: population_size must be at least 2");
    if (generations == 0) throw std::invalid_argument("ea: generations must be positive");
    auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!unit(crossover_rate)) throw std::invalid_argument("ea: crossover_rate must lie in [0, 1]");
    if (!unit(mutation_rate)) throw std::invalid_argument("ea: mutation_rate must lie in [0, 1]");
    if (!(offspring_rate > 0.0 && offspring_rate <= 1.0)) throw std::invalid_argument("ea: offspring_rate must lie in (0, 1]");
    if (!(replace_rate > 0.0 && replace_rate <= 1.0)) throw std::invalid_argument("ea: replace_rate must lie in (0, 1]");
    if (replace_rate > offspring_rate) throw std::invalid_argument("ea: replace_rate must not exceed offspring_rate");
}

Schedule init_individual(const LayeredCircuit& layered, const NetworkTopology& net, InitMethod method, Rng& rng) {
    if (method == InitMethod::ShuffledSequential) {
        std::vector<NodeId> assignment = sequential_assignment(layered.num_qubits, net);
        std::shuffle(assignment.begin(), assignment.end(), rng);
        return static_schedule(assignment, layered.depth());
    }
    Schedule s(layered.num_qubits, layered.depth());
    for (NodeId& cell : s.cells()) cell = uniform_index(rng, net.num_nodes());
    return s;
}

Schedule init_individual(const LayeredCircuit& layered, const NetworkTopology& net, Rng& rng) {
    const InitMethod method = coin_flip(rng) ? InitMethod::ShuffledSequential : InitMethod::UniformRandom;
    return init_individual(layered, net, method, rng);
}

namespace {

void require_same_shape(const Schedule& p1, const Schedule& p2) {
    if (p1.num_qubits() != p2.num_qubits() || p1.num_steps() != p2.num_steps()) {
        throw std::invalid_argument("crossover parents differ in shape");
    }
}

}  // namespace

Schedule crossover_rows(const Schedule& p1, const Schedule& p2, std::size_t cut) {
    require_same_shape(p1, p2);
    Schedule child = p2;
    for (std::size_t q = 0; q < std::min(cut, p1.num_qubits()); ++q)
        for (std::size_t t = 0; t < p1.num_steps(); ++t) child.at(q, t) = p1.at(q, t);
    return child;
}

Schedule crossover_columns(const Schedule& p1, const Schedule& p2, std::size_t cut) {
    require_same_shape(p1, p2);
    Schedule child = p2;
    for (std::size_t q = 0; q < p1.num_qubits(); ++q)
        for (std::size_t t = 0; t < std::min(cut, p1.num_steps()); ++t) child.at(q, t) = p1.at(q, t);
    return child;
}

Schedule crossover(const Schedule& p1, const Schedule& p2, Rng& rng) {
    require_same_shape(p1, p2);
    const bool row_wise = coin_flip(rng);
    const std::size_t dim = row_wise ? p1.num_qubits() : p1.num_steps();
    if (dim < 2) return p1;
    const std::size_t cut = uniform_between(rng, 1, dim - 1);
    return row_wise ? crossover_rows(p1, p2, cut) : crossover_columns(p1, p2, cut);
}

Schedule mutate(const Schedule& s, std::size_t num_nodes, Rng& rng) {
    Schedule out = s;
    apply_move(out, kAllScheduleMoves[uniform_index(rng, kAllScheduleMoves.size())], num_nodes, rng);
    return out;
}

namespace {

struct Scored {
    Schedule schedule;
    double cost;
};

std::size_t tournament(const std::vector<Scored>& population, std::size_t size, Rng& rng) {
    std::size_t best = uniform_index(rng, population.size());
    for (std::size_t k = 1; k < size; ++k) {
        std::size_t challenger = uniform_index(rng, population.size());
        if (population[challenger].cost < population[best].cost ||
            (population[challenger].cost == population[best].cost && challenger < best)) {
            best = challenger;
        }
    }
    return best;
}

EaTracePoint summarize(std::size_t generation, const std::vector<Scored>& population) {
    double best = population.front().cost;
    double sum = 0.0;
    for (const auto& ind : population) {
        best = std::min(best, ind.cost);
        sum += ind.cost;
    }
    return {generation, best, sum / static_cast<double>(population.size())};
}

}  // namespace

EaResult evolve(const LayeredCircuit& layered, const NetworkTopology& net, const EaParams& params) {
    params.validate();
    if (params.tournament_size == 0) throw std::invalid_argument("ea: tournament_size must be positive");
    net.require_capacity_for(layered.num_qubits);

    const CostModel model(layered, net, params.lambda);
    const std::size_t nodes = net.num_nodes();
    Rng rng = make_rng(params.seed);

    std::vector<Scored> population;
    population.reserve(params.population_size);
    for (std::size_t i = 0; i < params.population_size; ++i) {
        Schedule s = init_individual(layered, net, rng);
        const double c = model.total(s);
        population.push_back({std::move(s), c});
    }

    EaResult result;
    result.trace.push_back(summarize(0, population));

    const std::size_t n_children = params.offspring_count();
    const std::size_t n_replace = std::min(params.replace_count(), n_children);
    std::vector<std::size_t> order(params.population_size);

    for (std::size_t gen = 1; gen <= params.generations; ++gen) {
        std::vector<Scored> children;
        children.reserve(n_children);
        for (std::size_t k = 0; k < n_children; ++k) {
            Schedule child;
            if (coin_flip(rng, params.crossover_rate)) {
                const std::size_t a = tournament(population, params.tournament_size, rng);
                const std::size_t b = tournament(population, params.tournament_size, rng);
                child = crossover(population[a].schedule, population[b].schedule, rng);
            } else {
                child = init_individual(layered, net, rng);
            }
            if (coin_flip(rng, params.mutation_rate)) child = mutate(child, nodes, rng);
            const double c = model.total(child);
            children.push_back({std::move(child), c});
        }

        std::stable_sort(children.begin(), children.end(),
                         [](const Scored& x, const Scored& y) { return x.cost < y.cost; });

        // Worst first; among equal costs the later index counts as worse.
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (population[x].cost != population[y].cost) return population[x].cost > population[y].cost;
            return x > y;
        });
        for (std::size_t k = 0; k < n_replace; ++k) population[order[k]] = std::move(children[k]);

        result.trace.push_back(summarize(gen, population));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
        if (population[i].cost < population[best].cost) best = i;
    result.schedule = population[best].schedule;
    result.cost = model.evaluate(result.schedule);
    return result;
}

std::string ea_trace_to_csv(const std::vector<EaTracePoint>& trace) {
    std::ostringstream out;
    out << "generation,best_cost,mean_cost\n";
    for (const auto& p : trace) out << p.generation << ',' << p.best_cost << ',' << p.mean_cost << '\n';
    return out.str();
}

}  // namespace dqc
