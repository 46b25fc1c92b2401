// dqc: command-line front end for circuit generation, qubit scheduling,
// circuit optimization, benchmark runs and cost verification.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dqc/annealer.hpp"
#include "dqc/baselines.hpp"
#include "dqc/circuit.hpp"
#include "dqc/ea_scheduler.hpp"
#include "dqc/errors.hpp"
#include "dqc/experiment.hpp"
#include "dqc/network.hpp"
#include "dqc/qco.hpp"
#include "dqc/schedule.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;

std::string read_text(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw dqc::ConfigError("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path.string());
}

std::string cost_json(const dqc::CostBreakdown& c) {
    std::ostringstream out;
    out << "{\n  \"a\": " << c.a << ",\n  \"b\": " << c.b << ",\n  \"c\": " << c.c << ",\n  \"total\": " << c.total
        << "\n}\n";
    return out.str();
}

void print_cost(const dqc::CostBreakdown& c) {
    std::cout << "a=" << c.a << " b=" << c.b << " c=" << c.c << " total=" << c.total << '\n';
}

struct CommonOptions {
    std::string circuit;
    std::string topology = "grid:2x2";
    std::size_t capacity = 2;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed quantum circuit scheduling toolkit"};
    app.require_subcommand(1);

    // gen-circuit
    std::size_t gen_qubits = 8, gen_depth = 30;
    std::uint64_t gen_seed = 0;
    double gen_pcx = 0.5;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-circuit", "Generate a random {x, sx, rz, cx} circuit of exact depth");
    gen->add_option("--qubits", gen_qubits, "Number of qubits")->required();
    gen->add_option("--depth", gen_depth, "Layer count")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--p-cx", gen_pcx, "Probability a free qubit starts a CX")->check(CLI::Range(0.0, 1.0));
    gen->add_option("-o,--output", gen_out, "Output circuit file")->required();

    // schedule
    CommonOptions sched;
    std::string alg_name = "sa";
    std::string sched_config;
    auto* schedule = app.add_subcommand("schedule", "Assign qubits to QPUs over time");
    schedule->add_option("--alg", alg_name, "sa | ea | gp | seq | randseq")
        ->check(CLI::IsMember({"sa", "ea", "gp", "seq", "randseq"}));
    schedule->add_option("--circuit", sched.circuit, "Circuit file")->required();
    schedule->add_option("--topology", sched.topology, "grid:RxC | star:N | file:PATH");
    schedule->add_option("--capacity", sched.capacity, "Qubits per QPU for grid/star");
    schedule->add_option("--seed", sched.seed, "RNG seed");
    schedule->add_option("--config", sched_config, "Experiment JSON whose sa/ea/gp blocks set parameters");
    schedule->add_option("-o,--output", sched.out_dir, "Output directory");

    // qco
    CommonOptions qco;
    std::string qco_config;
    auto* qco_cmd = app.add_subcommand("qco", "Rewrite a circuit to lower its communication cost");
    qco_cmd->add_option("--circuit", qco.circuit, "Circuit file")->required();
    qco_cmd->add_option("--topology", qco.topology, "grid:RxC | star:N | file:PATH");
    qco_cmd->add_option("--capacity", qco.capacity, "Qubits per QPU for grid/star");
    qco_cmd->add_option("--seed", qco.seed, "RNG seed");
    qco_cmd->add_option("--config", qco_config, "Experiment JSON whose qco block sets parameters");
    qco_cmd->add_option("-o,--output", qco.out_dir, "Output directory");

    // bench
    std::string bench_config, bench_out = "results";
    auto* bench = app.add_subcommand("bench", "Run a JSON-described experiment");
    bench->add_option("--config", bench_config, "Experiment JSON")->required();
    bench->add_option("-o,--output", bench_out, "Output directory");

    // verify
    std::string verify_schedule, verify_circuit, verify_topology = "grid:2x2";
    std::size_t verify_capacity = 2;
    double verify_lambda = dqc::kDefaultCapacityPenalty;
    auto* verify = app.add_subcommand("verify", "Recompute the cost of a schedule");
    verify->add_option("--schedule", verify_schedule, "Schedule CSV")->required();
    verify->add_option("--circuit", verify_circuit, "Circuit file")->required();
    verify->add_option("--topology", verify_topology, "grid:RxC | star:N | file:PATH");
    verify->add_option("--capacity", verify_capacity, "Qubits per QPU for grid/star");
    verify->add_option("--lambda", verify_lambda, "Capacity penalty");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const dqc::Circuit c = dqc::random_circuit(gen_qubits, gen_depth, gen_seed, gen_pcx);
            write_text(gen_out, dqc::serialize_circuit(c));
            std::cout << "wrote " << gen_out << " (" << c.size() << " gates, depth " << gen_depth << ")\n";
            return kExitOk;
        }

        if (*schedule) {
            const dqc::Circuit circuit = dqc::parse_circuit(read_text(sched.circuit));
            const dqc::LayeredCircuit layered = dqc::layerize(circuit);
            const dqc::NetworkTopology net = dqc::topology_from_spec(sched.topology, sched.capacity);
            dqc::ExperimentConfig cfg;
            if (!sched_config.empty()) cfg = dqc::load_experiment_config(sched_config);

            const fs::path dir = sched.out_dir;
            dqc::Schedule result;
            double lambda = cfg.gp.lambda;
            if (alg_name == "sa") {
                dqc::SaParams p = cfg.sa;
                p.seed = sched.seed;
                lambda = p.lambda;
                auto r = dqc::anneal(layered, net, p);
                write_text(dir / "trace.csv", dqc::sa_trace_to_csv(r.trace));
                result = std::move(r.schedule);
            } else if (alg_name == "ea") {
                dqc::EaParams p = cfg.ea;
                p.seed = sched.seed;
                lambda = p.lambda;
                auto r = dqc::evolve(layered, net, p);
                write_text(dir / "trace.csv", dqc::ea_trace_to_csv(r.trace));
                result = std::move(r.schedule);
            } else if (alg_name == "gp") {
                result = dqc::gp_schedule(circuit, layered, net, sched.seed, cfg.gp);
            } else if (alg_name == "seq") {
                result = dqc::sequential_schedule(layered, net);
            } else {
                result = dqc::random_sequential_schedule(layered, net, sched.seed);
            }
            const dqc::CostBreakdown c = dqc::cost(result, layered, net, lambda);
            write_text(dir / "schedule.csv", dqc::schedule_to_csv(result));
            write_text(dir / "cost.json", cost_json(c));
            print_cost(c);
            return kExitOk;
        }

        if (*qco_cmd) {
            const dqc::Circuit circuit = dqc::parse_circuit(read_text(qco.circuit));
            const dqc::NetworkTopology net = dqc::topology_from_spec(qco.topology, qco.capacity);
            dqc::QcoParams p;
            if (!qco_config.empty()) p = dqc::load_experiment_config(qco_config).qco;
            p.seed = qco.seed;
            const dqc::QcoResult r = dqc::qco_evolve(circuit, net, p);
            const fs::path dir = qco.out_dir;
            write_text(dir / "circuit.txt", dqc::serialize_circuit(r.circuit));
            write_text(dir / "report.json", dqc::qco_report_to_json(r.report) + "\n");
            write_text(dir / "schedule.csv", dqc::schedule_to_csv(r.schedule));
            std::cout << "fitness=" << r.fitness << " fidelity=" << r.report.fidelity
                      << " u_original=" << r.report.u_original << " u_optimized=" << r.report.u_optimized
                      << (r.report.success ? "" : " (no individual met the fidelity threshold)") << '\n';
            return kExitOk;
        }

        if (*bench) {
            const dqc::ExperimentConfig cfg = dqc::load_experiment_config(bench_config);
            const dqc::ExperimentResult result = dqc::run_experiment(cfg);
            dqc::write_report(result, bench_out);
            for (const auto& s : result.skipped) std::cerr << "skipped: " << s << '\n';
            std::cout << result.runs.size() << " runs written to " << bench_out << '\n';
            if (result.runs.empty() && !result.skipped.empty()) return kExitInfeasible;
            return kExitOk;
        }

        if (*verify) {
            const dqc::Circuit circuit = dqc::parse_circuit(read_text(verify_circuit));
            const dqc::NetworkTopology net = dqc::topology_from_spec(verify_topology, verify_capacity);
            const dqc::Schedule s = dqc::schedule_from_csv(read_text(verify_schedule));
            print_cost(dqc::cost(s, dqc::layerize(circuit), net, verify_lambda));
            return kExitOk;
        }
    } catch (const dqc::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const dqc::CommunicationFreeError& e) {
        std::cerr << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
