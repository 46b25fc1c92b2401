#include "dqc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dqc/errors.hpp"
#include "dqc/network.hpp"

namespace dqc {

using json = nlohmann::json;

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::Sa: return "sa";
        case Algorithm::Ea: return "ea";
        case Algorithm::Gp: return "gp";
        case Algorithm::Seq: return "seq";
        case Algorithm::RandSeq: return "randseq";
        case Algorithm::Qco: return "qco";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (Algorithm a : {Algorithm::Sa, Algorithm::Ea, Algorithm::Gp, Algorithm::Seq, Algorithm::RandSeq, Algorithm::Qco})
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
        }
    }
}

template <typename T>
void read_field(const json& obj, const char* key, T& out, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

void read_evolution(const json& obj, EvolutionParams& p, const std::string& where) {
    read_field(obj, "population_size", p.population_size, where);
    read_field(obj, "generations", p.generations, where);
    read_field(obj, "crossover_rate", p.crossover_rate, where);
    read_field(obj, "mutation_rate", p.mutation_rate, where);
    read_field(obj, "offspring_rate", p.offspring_rate, where);
    read_field(obj, "replace_rate", p.replace_rate, where);
}

CircuitSpec read_circuit(const json& entry, std::size_t index, const std::filesystem::path& base_dir) {
    const std::string where = "circuits[" + std::to_string(index) + "]";
    if (!entry.is_object()) throw ConfigError(where + ": expected object");
    reject_unknown_keys(entry, where, {"id", "file", "qubits", "depth", "seed", "p_cx"});

    CircuitSpec spec;
    if (entry.contains("file")) {
        std::filesystem::path file = entry.at("file").get<std::string>();
        if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
        spec.file = file;
        spec.id = file.stem().string();
    } else {
        if (!entry.contains("qubits") || !entry.contains("depth")) {
            throw ConfigError(where + ": needs either 'file' or 'qubits' and 'depth'");
        }
        read_field(entry, "qubits", spec.qubits, where);
        read_field(entry, "depth", spec.depth, where);
        read_field(entry, "seed", spec.seed, where);
        read_field(entry, "p_cx", spec.p_cx, where);
        spec.id = "q" + std::to_string(spec.qubits) + "_d" + std::to_string(spec.depth) + "_s" +
                  std::to_string(spec.seed);
    }
    read_field(entry, "id", spec.id, where);
    return spec;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown_keys(doc, "config", {"note", "circuits", "topologies", "capacity", "algorithms", "seeds", "sa", "ea",
                                        "qco", "gp", "threads"});

    ExperimentConfig cfg;
    try {
        if (doc.contains("circuits")) {
            const json& list = doc.at("circuits");
            if (!list.is_array()) throw ConfigError("circuits: expected array");
            for (std::size_t i = 0; i < list.size(); ++i) cfg.circuits.push_back(read_circuit(list[i], i, base_dir));
        }
        read_field(doc, "topologies", cfg.topologies, "config");
        read_field(doc, "capacity", cfg.capacity, "config");
        read_field(doc, "seeds", cfg.seeds, "config");
        read_field(doc, "threads", cfg.threads, "config");

        std::vector<std::string> names;
        read_field(doc, "algorithms", names, "config");
        for (const auto& n : names) {
            auto alg = algorithm_from_name(n);
            if (!alg) throw ConfigError("algorithms: unknown algorithm '" + n + "'");
            if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), *alg) == cfg.algorithms.end())
                cfg.algorithms.push_back(*alg);
        }

        if (doc.contains("sa")) {
            const json& sa = doc.at("sa");
            reject_unknown_keys(sa, "sa", {"max_iterations", "initial_temp", "cooling_rate", "temp_floor", "lambda",
                                           "trace_stride"});
            read_field(sa, "max_iterations", cfg.sa.max_iterations, "sa");
            read_field(sa, "initial_temp", cfg.sa.initial_temp, "sa");
            read_field(sa, "cooling_rate", cfg.sa.cooling_rate, "sa");
            read_field(sa, "temp_floor", cfg.sa.temp_floor, "sa");
            read_field(sa, "lambda", cfg.sa.lambda, "sa");
            read_field(sa, "trace_stride", cfg.sa.trace_stride, "sa");
        }
        if (doc.contains("ea")) {
            const json& ea = doc.at("ea");
            reject_unknown_keys(ea, "ea", {"population_size", "generations", "crossover_rate", "mutation_rate",
                                           "offspring_rate", "replace_rate", "lambda", "tournament_size"});
            read_evolution(ea, cfg.ea, "ea");
            read_field(ea, "lambda", cfg.ea.lambda, "ea");
            read_field(ea, "tournament_size", cfg.ea.tournament_size, "ea");
        }
        if (doc.contains("qco")) {
            const json& qco = doc.at("qco");
            reject_unknown_keys(qco, "qco", {"population_size", "generations", "crossover_rate", "mutation_rate",
                                             "offspring_rate", "replace_rate", "epsilon", "penalty", "max_gates",
                                             "lambda", "scheduler"});
            read_evolution(qco, cfg.qco, "qco");
            read_field(qco, "epsilon", cfg.qco.epsilon, "qco");
            read_field(qco, "penalty", cfg.qco.penalty, "qco");
            read_field(qco, "max_gates", cfg.qco.max_gates, "qco");
            read_field(qco, "lambda", cfg.qco.lambda, "qco");
            std::string scheduler = "gp";
            read_field(qco, "scheduler", scheduler, "qco");
            if (scheduler == "gp") {
                cfg.qco.scheduler = CommCostScheduler::Gp;
            } else if (scheduler == "sa") {
                cfg.qco.scheduler = CommCostScheduler::Sa;
            } else if (scheduler == "ea") {
                cfg.qco.scheduler = CommCostScheduler::Ea;
            } else {
                throw ConfigError("qco.scheduler: expected gp, sa or ea");
            }
        }
        if (doc.contains("gp")) {
            const json& gp = doc.at("gp");
            reject_unknown_keys(gp, "gp", {"remap_parts", "lambda"});
            read_field(gp, "remap_parts", cfg.gp.remap_parts, "gp");
            read_field(gp, "lambda", cfg.gp.lambda, "gp");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (cfg.seeds.empty()) throw ConfigError("seeds must not be empty");
    if (cfg.capacity == 0) throw ConfigError("capacity must be positive");
    try {
        cfg.sa.validate();
        cfg.ea.validate();
        cfg.qco.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str(), path.parent_path());
}

// ---------------------------------------------------------------------------
// Execution

namespace {

struct Instance {
    std::string circuit_id;
    const Circuit* circuit;
    LayeredCircuit layered;
    std::string topology_id;
    const NetworkTopology* net;
};

struct Cell {
    std::size_t instance;
    Algorithm algorithm;
    std::uint64_t seed;
};

RunReport execute(const Instance& inst, Algorithm alg, std::uint64_t seed, const ExperimentConfig& cfg) {
    RunReport r;
    r.circuit = inst.circuit_id;
    r.topology = inst.topology_id;
    r.algorithm = alg;
    r.seed = seed;
    r.circuit_used = *inst.circuit;

    const auto start = std::chrono::steady_clock::now();
    const double lambda = [&] {
        switch (alg) {
            case Algorithm::Sa: return cfg.sa.lambda;
            case Algorithm::Ea: return cfg.ea.lambda;
            case Algorithm::Qco: return cfg.qco.lambda;
            default: return cfg.gp.lambda;
        }
    }();

    switch (alg) {
        case Algorithm::Sa: {
            SaParams p = cfg.sa;
            p.seed = seed;
            p.trace_stride = 0;
            r.schedule = anneal(inst.layered, *inst.net, p).schedule;
            break;
        }
        case Algorithm::Ea: {
            EaParams p = cfg.ea;
            p.seed = seed;
            r.schedule = evolve(inst.layered, *inst.net, p).schedule;
            break;
        }
        case Algorithm::Gp:
            r.schedule = gp_schedule(*inst.circuit, inst.layered, *inst.net, seed, cfg.gp);
            break;
        case Algorithm::Seq:
            r.schedule = sequential_schedule(inst.layered, *inst.net);
            break;
        case Algorithm::RandSeq:
            r.schedule = random_sequential_schedule(inst.layered, *inst.net, seed);
            break;
        case Algorithm::Qco: {
            QcoParams p = cfg.qco;
            p.seed = seed;
            QcoResult q = qco_evolve(*inst.circuit, *inst.net, p);
            r.schedule = std::move(q.schedule);
            r.circuit_used = std::move(q.circuit);
            r.fidelity = q.report.fidelity;
            break;
        }
    }
    // Costs are always recomputed from the emitted schedule.
    r.cost = cost(r.schedule, layerize(r.circuit_used), *inst.net, lambda);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result;

    for (const CircuitSpec& spec : cfg.circuits) {
        if (spec.file) {
            std::ifstream in(*spec.file);
            if (!in) throw ConfigError("cannot read circuit file " + spec.file->string());
            std::stringstream buffer;
            buffer << in.rdbuf();
            try {
                result.circuits.emplace_back(spec.id, parse_circuit(buffer.str()));
            } catch (const ParseError& e) {
                throw ConfigError(spec.file->string() + ": " + e.what());
            }
        } else {
            try {
                result.circuits.emplace_back(spec.id, random_circuit(spec.qubits, spec.depth, spec.seed, spec.p_cx));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(spec.id + ": " + e.what());
            }
        }
    }

    std::vector<NetworkTopology> networks;
    for (const std::string& t : cfg.topologies) {
        try {
            networks.push_back(topology_from_spec(t, cfg.capacity));
        } catch (const std::exception& e) {
            throw ConfigError("topology '" + t + "': " + e.what());
        }
    }

    std::vector<Instance> instances;
    for (const auto& [id, circuit] : result.circuits) {
        for (std::size_t k = 0; k < networks.size(); ++k) {
            if (networks[k].total_capacity() < circuit.num_qubits()) {
                result.skipped.push_back(id + "/" + cfg.topologies[k] + ": network holds " +
                                         std::to_string(networks[k].total_capacity()) + " qubits, circuit needs " +
                                         std::to_string(circuit.num_qubits()));
                continue;
            }
            instances.push_back({id, &circuit, layerize(circuit), cfg.topologies[k], &networks[k]});
        }
    }

    // GP is always run as the reference for improvement_vs_gp; rows are only
    // emitted for algorithms the config asked for.
    std::vector<Algorithm> to_run = cfg.algorithms;
    if (std::find(to_run.begin(), to_run.end(), Algorithm::Gp) == to_run.end() && !to_run.empty())
        to_run.push_back(Algorithm::Gp);

    std::vector<Cell> cells;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (Algorithm alg : to_run)
            for (std::uint64_t seed : cfg.seeds) cells.push_back({i, alg, seed});

    std::vector<std::optional<RunReport>> outputs(cells.size());
    std::vector<std::string> errors(cells.size());
    parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
        const Cell& c = cells[i];
        try {
            outputs[i] = execute(instances[c.instance], c.algorithm, c.seed, cfg);
        } catch (const CommunicationFreeError& e) {
            errors[i] = e.what();
        } catch (const InfeasibleError& e) {
            errors[i] = e.what();
        }
    });

    std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> gp_totals;
    for (const auto& out : outputs) {
        if (out && out->algorithm == Algorithm::Gp) {
            auto& acc = gp_totals[{out->circuit, out->topology}];
            acc.first += out->cost.total;
            ++acc.second;
        }
    }

    std::set<std::string> reported_errors;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Instance& inst = instances[cells[i].instance];
        if (!outputs[i]) {
            std::string msg = inst.circuit_id + "/" + inst.topology_id + "/" +
                              std::string(algorithm_name(cells[i].algorithm)) + ": " + errors[i];
            if (reported_errors.insert(msg).second) result.skipped.push_back(msg);
            continue;
        }
        RunReport& r = *outputs[i];
        if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), r.algorithm) == cfg.algorithms.end()) continue;
        auto it = gp_totals.find({r.circuit, r.topology});
        if (it != gp_totals.end() && it->second.second > 0) {
            const double gp_mean = it->second.first / static_cast<double>(it->second.second);
            r.gp_mean = gp_mean;
            if (gp_mean != 0.0) r.improvement_vs_gp = 100.0 * (gp_mean - r.cost.total) / gp_mean;
        }
        result.runs.push_back(std::move(r));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Reporting

std::vector<SummaryRow> summarize(const ExperimentResult& result) {
    std::vector<SummaryRow> rows;

    for (const RunReport& r : result.runs) {
        auto match = [&](const SummaryRow& s) {
            return s.circuit == r.circuit && s.topology == r.topology && s.algorithm == r.algorithm;
        };
        auto it = std::find_if(rows.begin(), rows.end(), match);
        if (it == rows.end()) {
            rows.push_back({r.circuit, r.topology, r.algorithm, 0, 0.0, r.cost.total, r.cost.total, std::nullopt});
            it = std::prev(rows.end());
        }
        ++it->runs;
        it->mean_total += r.cost.total;
        it->min_total = std::min(it->min_total, r.cost.total);
        it->max_total = std::max(it->max_total, r.cost.total);
    }
    for (SummaryRow& s : rows) s.mean_total /= static_cast<double>(s.runs);

    for (SummaryRow& s : rows) {
        auto it = std::find_if(result.runs.begin(), result.runs.end(), [&](const RunReport& r) {
            return r.circuit == s.circuit && r.topology == s.topology && r.gp_mean;
        });
        if (it != result.runs.end() && *it->gp_mean != 0.0) {
            s.improvement_vs_gp = 100.0 * (*it->gp_mean - s.mean_total) / *it->gp_mean;
        }
    }
    return rows;
}

namespace {

std::string fmt_number(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string& s, const char* column) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("raw csv: bad ") + column + " value '" + s + "'");
    }
}

template <typename Int>
Int to_int(const std::string& s, const char* column) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string("raw csv: bad ") + column + " value '" + s + "'");
    }
    return v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string sanitize(std::string s) {
    for (char& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.') ch = '_';
    return s;
}

}  // namespace

std::string raw_csv(const ExperimentResult& result, bool include_wall_time) {
    std::ostringstream out;
    out << kRawCsvHeader << '\n';
    for (const RunReport& r : result.runs) {
        out << csv_field(r.circuit) << ',' << csv_field(r.topology) << ',' << algorithm_name(r.algorithm) << ','
            << r.seed << ',' << r.cost.a << ',' << r.cost.b << ',' << fmt_number(r.cost.c) << ','
            << fmt_number(r.cost.total) << ',' << (r.fidelity ? fmt_number(*r.fidelity) : "") << ',';
        if (include_wall_time) out << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
        out << '\n';
    }
    return out.str();
}

std::vector<RawRow> parse_raw_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kRawCsvHeader) throw std::invalid_argument("raw csv: unexpected header");
    std::vector<RawRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 10) throw std::invalid_argument("raw csv: expected 10 columns, got " + std::to_string(f.size()));
        RawRow r;
        r.circuit = f[0];
        r.topology = f[1];
        r.algorithm = f[2];
        r.seed = to_int<std::uint64_t>(f[3], "seed");
        r.a = to_int<std::int64_t>(f[4], "a");
        r.b = to_int<std::int64_t>(f[5], "b");
        r.c = to_double(f[6], "c");
        r.total = to_double(f[7], "total");
        if (!f[8].empty()) r.fidelity = to_double(f[8], "fidelity");
        if (!f[9].empty()) r.wall_ms = to_double(f[9], "wall_ms");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "circuit,topology,algorithm,runs,mean_total,min_total,max_total,improvement_vs_gp\n";
    for (const SummaryRow& s : rows) {
        out << csv_field(s.circuit) << ',' << csv_field(s.topology) << ',' << algorithm_name(s.algorithm) << ','
            << s.runs << ',' << fmt_number(s.mean_total) << ',' << fmt_number(s.min_total) << ','
            << fmt_number(s.max_total) << ',' << (s.improvement_vs_gp ? fmt_number(*s.improvement_vs_gp) : "")
            << '\n';
    }
    return out.str();
}

std::string summary_json(const std::vector<SummaryRow>& rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const SummaryRow& s : rows) {
        nlohmann::ordered_json c;
        c["circuit"] = s.circuit;
        c["topology"] = s.topology;
        c["algorithm"] = algorithm_name(s.algorithm);
        c["runs"] = s.runs;
        c["mean_total"] = s.mean_total;
        c["min_total"] = s.min_total;
        c["max_total"] = s.max_total;
        c["improvement_vs_gp"] = s.improvement_vs_gp ? nlohmann::ordered_json(*s.improvement_vs_gp)
                                                     : nlohmann::ordered_json(nullptr);
        cells.push_back(std::move(c));
    }
    nlohmann::ordered_json doc;
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

std::string run_file_stem(const RunReport& run) {
    return sanitize(run.circuit) + "__" + sanitize(run.topology) + "__" + std::string(algorithm_name(run.algorithm)) +
           "__s" + std::to_string(run.seed);
}

std::vector<std::filesystem::path> write_report(const ExperimentResult& result, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir / "schedules", ec);
    if (ec) throw std::runtime_error("cannot create " + (dir / "schedules").string() + ": " + ec.message());
    fs::create_directories(dir / "circuits", ec);
    if (ec) throw std::runtime_error("cannot create " + (dir / "circuits").string() + ": " + ec.message());

    std::vector<fs::path> written;
    auto emit = [&](const fs::path& p, const std::string& content) {
        write_file(p, content);
        written.push_back(p);
    };

    const auto rows = summarize(result);
    emit(dir / "raw.csv", raw_csv(result));
    emit(dir / "summary.csv", summary_csv(rows));
    emit(dir / "summary.json", summary_json(rows));
    for (const auto& [id, circuit] : result.circuits) emit(dir / "circuits" / (sanitize(id) + ".txt"), serialize_circuit(circuit));
    for (const RunReport& r : result.runs) {
        emit(dir / "schedules" / (run_file_stem(r) + ".csv"), schedule_to_csv(r.schedule));
        if (r.algorithm == Algorithm::Qco) emit(dir / "circuits" / (run_file_stem(r) + ".txt"), serialize_circuit(r.circuit_used));
    }
    if (!result.skipped.empty()) {
        std::string text;
        for (const auto& s : result.skipped) text += s + '\n';
        emit(dir / "skipped.txt", text);
    }
    return written;
}

}  // namespace dqc
