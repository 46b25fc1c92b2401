#include "dqc/qco.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "dqc/baselines.hpp"

namespace dqc {

void QcoParams::validate() const {
    EvolutionParams::validate();
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("qco: epsilon must lie in (0, 1)");
    if (max_gates == 0) throw std::invalid_argument("qco: max_gates must be at least 1");
}

CommCost communication_cost(const Circuit& circuit, const NetworkTopology& net, const QcoParams& params) {
    const LayeredCircuit layered = layerize(circuit);
    switch (params.scheduler) {
        case CommCostScheduler::Gp: {
            Schedule s = gp_schedule(circuit, layered, net, params.seed, GpOptions{false, params.lambda});
            CostBreakdown c = cost(s, layered, net, params.lambda);
            return {std::move(s), c};
        }
        case CommCostScheduler::Sa: {
            SaParams sa = params.sa;
            sa.seed = params.seed;
            sa.lambda = params.lambda;
            sa.trace_stride = 0;
            SaResult r = anneal(layered, net, sa);
            return {std::move(r.schedule), r.cost};
        }
        case CommCostScheduler::Ea: {
            EaParams ea = params.ea;
            ea.seed = params.seed;
            ea.lambda = params.lambda;
            EaResult r = evolve(layered, net, ea);
            return {std::move(r.schedule), r.cost};
        }
    }
    throw std::logic_error("unknown communication-cost scheduler");
}

QcoObjective::QcoObjective(const Circuit& original, const NetworkTopology& net, const QcoParams& params)
    : original_(&original),
      net_(&net),
      params_(params),
      target_(run(original)),
      u_original_(communication_cost(original, net, params).cost.total) {}

QcoScore QcoObjective::score(const Circuit& candidate) const {
    if (candidate.num_qubits() != original_->num_qubits()) {
        throw std::invalid_argument("qco: candidate and original differ in qubit count");
    }
    if (u_original_ == 0.0) throw CommunicationFreeError();

    QcoScore s;
    s.fidelity = fidelity(target_, candidate);
    if (s.fidelity < 1.0 - params_.epsilon) {
        s.fitness = params_.penalty;
        s.u = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    s.u = communication_cost(candidate, *net_, params_).cost.total;
    s.fitness = s.fidelity - s.u / u_original_;
    return s;
}

double qco_fitness(const Circuit& original, const Circuit& candidate, const NetworkTopology& net,
                   const QcoParams& params) {
    return QcoObjective(original, net, params).score(candidate).fitness;
}

GateGene random_gene(std::size_t num_qubits, Rng& rng) {
    const std::size_t kinds = num_qubits >= 2 ? 4 : 3;
    switch (uniform_index(rng, kinds)) {
        case 0: return Gate::x(uniform_index(rng, num_qubits));
        case 1: return Gate::sx(uniform_index(rng, num_qubits));
        case 2: {
            const Qubit q = uniform_index(rng, num_qubits);
            return Gate::rz(q, uniform_unit(rng) * 2.0 * std::numbers::pi);
        }
        default: {
            const Qubit control = uniform_index(rng, num_qubits);
            Qubit target = uniform_index(rng, num_qubits - 1);
            if (target >= control) ++target;
            return Gate::cx(control, target);
        }
    }
}

GeneSequence random_genes(std::size_t num_qubits, std::size_t max_gates, Rng& rng) {
    const std::size_t length = uniform_between(rng, 1, max_gates);
    GeneSequence genes;
    genes.reserve(length);
    for (std::size_t k = 0; k < length; ++k) genes.push_back(random_gene(num_qubits, rng));
    return genes;
}

GeneSequence single_point_crossover(const GeneSequence& p1, const GeneSequence& p2, std::size_t cut1,
                                    std::size_t cut2) {
    cut1 = std::min(cut1, p1.size());
    cut2 = std::min(cut2, p2.size());
    GeneSequence child(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(cut1));
    child.insert(child.end(), p2.begin() + static_cast<std::ptrdiff_t>(cut2), p2.end());
    return child;
}

GeneSequence uniform_crossover(const GeneSequence& p1, const GeneSequence& p2, Rng& rng) {
    const std::size_t common = std::min(p1.size(), p2.size());
    GeneSequence child;
    child.reserve(std::max(p1.size(), p2.size()));
    for (std::size_t i = 0; i < common; ++i) child.push_back(coin_flip(rng) ? p1[i] : p2[i]);
    const GeneSequence& longer = p1.size() >= p2.size() ? p1 : p2;
    if (longer.size() > common && coin_flip(rng)) {
        child.insert(child.end(), longer.begin() + static_cast<std::ptrdiff_t>(common), longer.end());
    }
    return child;
}

GeneSequence qco_crossover(const GeneSequence& p1, const GeneSequence& p2, Rng& rng, std::size_t max_gates) {
    GeneSequence child;
    if (coin_flip(rng)) {
        const std::size_t cut1 = uniform_between(rng, 0, p1.size());
        const std::size_t cut2 = uniform_between(rng, 0, p2.size());
        child = single_point_crossover(p1, p2, cut1, cut2);
    } else {
        child = uniform_crossover(p1, p2, rng);
    }
    if (child.size() > max_gates) child.resize(max_gates);
    return child;
}

void apply_gene_mutation(GeneSequence& genes, GeneMutation method, std::size_t num_qubits, std::size_t max_gates,
                         Rng& rng) {
    switch (method) {
        case GeneMutation::AddGate:
            if (genes.size() < max_gates) {
                const std::size_t at = uniform_between(rng, 0, genes.size());
                genes.insert(genes.begin() + static_cast<std::ptrdiff_t>(at), random_gene(num_qubits, rng));
            }
            break;
        case GeneMutation::RemoveGate:
            if (!genes.empty()) genes.erase(genes.begin() + static_cast<std::ptrdiff_t>(uniform_index(rng, genes.size())));
            break;
        case GeneMutation::SwapGates:
            if (genes.size() >= 2) {
                auto [a, b] = distinct_pair(rng, genes.size());
                std::swap(genes[a], genes[b]);
            }
            break;
        case GeneMutation::ShuffleSubset:
            if (genes.size() >= 2) {
                auto [lo, hi] = distinct_pair(rng, genes.size());
                std::shuffle(genes.begin() + static_cast<std::ptrdiff_t>(lo),
                             genes.begin() + static_cast<std::ptrdiff_t>(hi) + 1, rng);
            }
            break;
        case GeneMutation::MutateGate:
            if (!genes.empty()) genes[uniform_index(rng, genes.size())] = random_gene(num_qubits, rng);
            break;
    }
}

GeneSequence qco_mutate(const GeneSequence& genes, Rng& rng, std::size_t max_gates, std::size_t num_qubits) {
    constexpr GeneMutation kMethods[] = {GeneMutation::AddGate, GeneMutation::RemoveGate, GeneMutation::SwapGates,
                                         GeneMutation::ShuffleSubset, GeneMutation::MutateGate};
    GeneSequence out = genes;
    apply_gene_mutation(out, kMethods[uniform_index(rng, std::size(kMethods))], num_qubits, max_gates, rng);
    return out;
}

namespace {

struct Individual {
    GeneSequence genes;
    QcoScore score;
};

std::size_t tournament(const std::vector<Individual>& population, Rng& rng) {
    const std::size_t a = uniform_index(rng, population.size());
    const std::size_t b = uniform_index(rng, population.size());
    const double fa = population[a].score.fitness, fb = population[b].score.fitness;
    if (fb > fa || (fb == fa && b < a)) return b;
    return a;
}

QcoTracePoint summarize(std::size_t generation, const std::vector<Individual>& population) {
    double best = population.front().score.fitness;
    double sum = 0.0;
    for (const auto& ind : population) {
        best = std::max(best, ind.score.fitness);
        sum += ind.score.fitness;
    }
    return {generation, best, sum / static_cast<double>(population.size())};
}

}  // namespace

QcoResult qco_evolve(const Circuit& original, const NetworkTopology& net, const QcoParams& params) {
    params.validate();
    net.require_capacity_for(original.num_qubits());

    const QcoObjective objective(original, net, params);
    if (objective.u_original() == 0.0) throw CommunicationFreeError();

    const std::size_t num_qubits = original.num_qubits();
    const std::size_t gene_cap = std::max(params.max_gates, original.size());
    Rng rng = make_rng(params.seed);

    auto evaluate = [&](GeneSequence genes) {
        QcoScore s = objective.score(Circuit(num_qubits, genes));
        return Individual{std::move(genes), s};
    };

    std::vector<Individual> population;
    population.reserve(params.population_size);
    for (std::size_t i = 0; i < params.population_size; ++i) {
        population.push_back(evaluate(coin_flip(rng) ? original.gates() : random_genes(num_qubits, params.max_gates, rng)));
    }

    QcoResult result{original, 0.0, {}, {}, {}, {}};
    result.trace.push_back(summarize(0, population));

    const std::size_t n_children = params.offspring_count();
    const std::size_t n_replace = std::min(params.replace_count(), n_children);
    std::vector<std::size_t> order(params.population_size);

    for (std::size_t gen = 1; gen <= params.generations; ++gen) {
        std::vector<Individual> children;
        children.reserve(n_children);
        for (std::size_t k = 0; k < n_children; ++k) {
            GeneSequence genes;
            if (coin_flip(rng, params.crossover_rate)) {
                const std::size_t a = tournament(population, rng);
                const std::size_t b = tournament(population, rng);
                genes = qco_crossover(population[a].genes, population[b].genes, rng, gene_cap);
            } else {
                genes = random_genes(num_qubits, params.max_gates, rng);
            }
            if (coin_flip(rng, params.mutation_rate)) genes = qco_mutate(genes, rng, gene_cap, num_qubits);
            children.push_back(evaluate(std::move(genes)));
        }

        std::stable_sort(children.begin(), children.end(), [](const Individual& x, const Individual& y) {
            return x.score.fitness > y.score.fitness;
        });
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const double fx = population[x].score.fitness, fy = population[y].score.fitness;
            if (fx != fy) return fx < fy;
            return x > y;
        });
        for (std::size_t k = 0; k < n_replace; ++k) population[order[k]] = std::move(children[k]);

        result.trace.push_back(summarize(gen, population));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
        if (population[i].score.fitness > population[best].score.fitness) best = i;

    const Individual& winner = population[best];
    result.circuit = Circuit(num_qubits, winner.genes);
    result.fitness = winner.score.fitness;

    CommCost comm = communication_cost(result.circuit, net, params);
    result.schedule = std::move(comm.schedule);
    result.cost = comm.cost;

    result.report.best_fitness = winner.score.fitness;
    result.report.fidelity = winner.score.fidelity;
    result.report.u_original = objective.u_original();
    result.report.u_optimized = comm.cost.total;
    result.report.generations_run = params.generations;
    result.report.seed = params.seed;
    result.report.success = winner.score.fitness > params.penalty;
    return result;
}

std::string qco_report_to_json(const QcoReport& report) {
    nlohmann::ordered_json j;
    j["best_fitness"] = report.best_fitness;
    j["fidelity"] = report.fidelity;
    j["u_original"] = report.u_original;
    j["u_optimized"] = report.u_optimized;
    j["generations_run"] = report.generations_run;
    j["seed"] = report.seed;
    j["success"] = report.success;
    return j.dump(2);
}

}  // namespace dqc
