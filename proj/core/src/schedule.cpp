#include "dqc/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace dqc {

Schedule Schedule::from_rows(const std::vector<std::vector<NodeId>>& rows) {
    const std::size_t steps = rows.empty() ? 0 : rows.front().size();
    Schedule s(rows.size(), steps);
    for (std::size_t q = 0; q < rows.size(); ++q) {
        if (rows[q].size() != steps) throw std::invalid_argument("schedule rows differ in length");
        std::copy(rows[q].begin(), rows[q].end(), s.cells_.begin() + static_cast<std::ptrdiff_t>(q * steps));
    }
    return s;
}

void Schedule::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(cells_.begin() + static_cast<std::ptrdiff_t>(a * num_steps_),
                     cells_.begin() + static_cast<std::ptrdiff_t>((a + 1) * num_steps_),
                     cells_.begin() + static_cast<std::ptrdiff_t>(b * num_steps_));
}

void Schedule::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t q = 0; q < num_qubits_; ++q) std::swap(at(q, a), at(q, b));
}

bool Schedule::is_time_constant() const {
    for (std::size_t q = 0; q < num_qubits_; ++q)
        for (std::size_t t = 1; t < num_steps_; ++t)
            if (at(q, t) != at(q, 0)) return false;
    return true;
}

std::size_t Schedule::max_node_plus_one() const {
    if (cells_.empty()) return 0;
    return *std::max_element(cells_.begin(), cells_.end()) + 1;
}

CostModel::CostModel(const LayeredCircuit& layered, const NetworkTopology& net, double lambda)
    : num_qubits_(layered.num_qubits), cx_(cx_pairs_per_layer(layered)), net_(&net), lambda_(lambda) {}

CostBreakdown CostModel::evaluate(const Schedule& s) const {
    const std::size_t steps = cx_.size();
    if (s.num_qubits() != num_qubits_ || s.num_steps() != steps) {
        throw std::invalid_argument("schedule is " + std::to_string(s.num_qubits()) + "x" +
                                    std::to_string(s.num_steps()) + ", circuit needs " +
                                    std::to_string(num_qubits_) + "x" + std::to_string(steps));
    }
    const std::size_t nodes = net_->num_nodes();
    if (s.max_node_plus_one() > nodes) throw std::invalid_argument("schedule references a node outside the network");

    const DistanceMatrix& dist = net_->distances();
    CostBreakdown out;

    for (std::size_t t = 0; t < steps; ++t)
        for (auto [i, j] : cx_[t]) out.a += static_cast<std::int64_t>(dist[s.at(i, t)][s.at(j, t)]);

    for (std::size_t q = 0; q < num_qubits_; ++q)
        for (std::size_t t = 0; t + 1 < steps; ++t)
            out.b += static_cast<std::int64_t>(dist[s.at(q, t)][s.at(q, t + 1)]);

    std::vector<std::size_t> load(nodes);
    std::int64_t violations = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        std::fill(load.begin(), load.end(), 0);
        for (std::size_t q = 0; q < num_qubits_; ++q) ++load[s.at(q, t)];
        for (NodeId n = 0; n < nodes; ++n)
            if (load[n] > net_->capacity(n)) ++violations;
    }
    out.c = lambda_ * static_cast<double>(violations);
    out.total = static_cast<double>(out.a + out.b) + out.c;
    return out;
}

CostBreakdown cost(const Schedule& s, const LayeredCircuit& layered, const NetworkTopology& net, double lambda) {
    return CostModel(layered, net, lambda).evaluate(s);
}

OptimumResult brute_force_optimum(const LayeredCircuit& layered, const NetworkTopology& net, double lambda,
                                  std::uint64_t bound) {
    const std::size_t cells = layered.num_qubits * layered.depth();
    const std::uint64_t base = net.num_nodes();
    std::uint64_t space = 1;
    for (std::size_t k = 0; k < cells; ++k) {
        if (space > bound / base) throw std::length_error("brute-force search space exceeds enumeration bound");
        space *= base;
    }
    if (space > bound) throw std::length_error("brute-force search space exceeds enumeration bound");

    CostModel model(layered, net, lambda);
    Schedule current(layered.num_qubits, layered.depth(), 0);
    OptimumResult best{current, model.evaluate(current)};

    // Odometer over the row-major cell vector, last cell fastest, so
    // schedules are visited in lexicographic order and the first minimum wins.
    auto& digits = current.cells();
    for (std::uint64_t visited = 1; visited < space; ++visited) {
        std::size_t k = cells;
        while (k > 0) {
            --k;
            if (++digits[k] < base) break;
            digits[k] = 0;
        }
        CostBreakdown c = model.evaluate(current);
        if (c.total < best.cost.total) best = {current, c};
    }
    return best;
}

std::string schedule_to_csv(const Schedule& s) {
    std::ostringstream out;
    for (std::size_t t = 0; t < s.num_steps(); ++t) out << (t ? "," : "") << 't' << t;
    out << '\n';
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
        for (std::size_t t = 0; t < s.num_steps(); ++t) out << (t ? "," : "") << s.at(q, t);
        out << '\n';
    }
    return out.str();
}

Schedule schedule_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("schedule csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t steps = 0;
    {
        std::istringstream header(line);
        for (std::string cell; std::getline(header, cell, ',');) {
            if (cell != "t" + std::to_string(steps)) {
                throw std::invalid_argument("schedule csv: bad header column '" + cell + "'");
            }
            ++steps;
        }
    }

    std::vector<std::vector<NodeId>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<NodeId> row;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) {
            NodeId v = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw std::invalid_argument("schedule csv: bad cell '" + cell + "'");
            }
            row.push_back(v);
        }
        if (row.size() != steps) throw std::invalid_argument("schedule csv: row width differs from header");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Schedule(0, steps);
    return Schedule::from_rows(rows);
}

}  // namespace dqc
