#include "dqc/network.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dqc/errors.hpp"

namespace dqc {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

DistanceMatrix all_pairs_hops(const std::vector<Edge>& edges, std::size_t num_nodes) {
    std::vector<std::vector<NodeId>> adjacency(num_nodes);
    for (auto [a, b] : edges) {
        if (a >= num_nodes || b >= num_nodes) throw std::invalid_argument("edge endpoint out of range");
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }

    DistanceMatrix dist(num_nodes, std::vector<std::size_t>(num_nodes, kUnreached));
    for (NodeId source = 0; source < num_nodes; ++source) {
        auto& row = dist[source];
        row[source] = 0;
        std::queue<NodeId> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            NodeId u = frontier.front();
            frontier.pop();
            for (NodeId v : adjacency[u]) {
                if (row[v] != kUnreached) continue;
                row[v] = row[u] + 1;
                frontier.push(v);
            }
        }
        for (NodeId v = 0; v < num_nodes; ++v) {
            if (row[v] == kUnreached) {
                throw std::domain_error("network is disconnected: node " + std::to_string(v) +
                                        " unreachable from node " + std::to_string(source));
            }
        }
    }
    return dist;
}

NetworkTopology::NetworkTopology(std::size_t num_nodes, std::vector<Edge> edges,
                                 std::vector<std::size_t> capacities, std::string name)
    : capacities_(std::move(capacities)), name_(std::move(name)) {
    if (num_nodes == 0) throw std::invalid_argument("network needs at least one node");
    if (capacities_.size() != num_nodes) throw std::invalid_argument("one capacity per node required");
    if (std::any_of(capacities_.begin(), capacities_.end(), [](std::size_t c) { return c == 0; })) {
        throw std::invalid_argument("node capacities must be positive");
    }

    std::set<Edge> unique;
    for (auto [a, b] : edges) {
        if (a >= num_nodes || b >= num_nodes) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop on node " + std::to_string(a));
        unique.insert({std::min(a, b), std::max(a, b)});
    }
    edges_.assign(unique.begin(), unique.end());
    dist_ = all_pairs_hops(edges_, num_nodes);
}

std::size_t NetworkTopology::total_capacity() const {
    return std::accumulate(capacities_.begin(), capacities_.end(), std::size_t{0});
}

void NetworkTopology::require_capacity_for(std::size_t num_qubits) const {
    if (total_capacity() < num_qubits) {
        throw InfeasibleError("network " + (name_.empty() ? std::string("<unnamed>") : name_) + " holds " +
                              std::to_string(total_capacity()) + " qubits, circuit needs " +
                              std::to_string(num_qubits));
    }
}

NetworkTopology build_grid(std::size_t rows, std::size_t cols, std::size_t capacity) {
    if (rows == 0 || cols == 0 || rows * cols < 2) throw std::invalid_argument("grid needs at least 2 nodes");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            NodeId id = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(id, id + 1);
            if (r + 1 < rows) edges.emplace_back(id, id + cols);
        }
    }
    return NetworkTopology(rows * cols, std::move(edges), std::vector<std::size_t>(rows * cols, capacity),
                           "grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

NetworkTopology build_star(std::size_t num_nodes, std::size_t capacity) {
    if (num_nodes < 2) throw std::invalid_argument("star needs at least 2 nodes");
    std::vector<Edge> edges;
    for (NodeId k = 1; k < num_nodes; ++k) edges.emplace_back(0, k);
    return NetworkTopology(num_nodes, std::move(edges), std::vector<std::size_t>(num_nodes, capacity),
                           "star" + std::to_string(num_nodes));
}

namespace {

std::size_t to_count(const std::string& token, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("topology line " + std::to_string(line_no) + ": expected integer, got '" +
                                    token + "'");
    }
    return value;
}

}  // namespace

NetworkTopology parse_topology(std::string_view text, std::size_t default_capacity) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> num_nodes;
    std::vector<std::size_t> caps;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        auto fail = [&](const std::string& msg) {
            return std::invalid_argument("topology line " + std::to_string(line_no) + ": " + msg);
        };
        if (tok[0] == "nodes") {
            if (tok.size() != 2) throw fail("'nodes' takes one count");
            if (num_nodes) throw fail("duplicate 'nodes'");
            num_nodes = to_count(tok[1], line_no);
            caps.assign(*num_nodes, default_capacity);
        } else if (tok[0] == "cap") {
            if (!num_nodes) throw fail("'cap' before 'nodes'");
            if (tok.size() != 3) throw fail("'cap' takes <node> <k>");
            std::size_t n = to_count(tok[1], line_no);
            if (n >= *num_nodes) throw fail("node index out of range");
            caps[n] = to_count(tok[2], line_no);
        } else if (tok[0] == "edge") {
            if (!num_nodes) throw fail("'edge' before 'nodes'");
            if (tok.size() != 3) throw fail("'edge' takes <a> <b>");
            edges.emplace_back(to_count(tok[1], line_no), to_count(tok[2], line_no));
        } else {
            throw fail("unknown directive '" + tok[0] + "'");
        }
    }
    if (!num_nodes) throw std::invalid_argument("topology: missing 'nodes' declaration");
    return NetworkTopology(*num_nodes, std::move(edges), std::move(caps), "custom" + std::to_string(*num_nodes));
}

NetworkTopology topology_from_spec(const std::string& spec, std::size_t capacity) {
    auto bad = [&] { return std::invalid_argument("bad topology spec '" + spec + "'"); };
    auto parse_num = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
        return v;
    };

    if (spec.rfind("grid:", 0) == 0) {
        std::string_view dims = std::string_view(spec).substr(5);
        auto x = dims.find('x');
        if (x == std::string_view::npos) throw bad();
        return build_grid(parse_num(dims.substr(0, x)), parse_num(dims.substr(x + 1)), capacity);
    }
    if (spec.rfind("star:", 0) == 0) return build_star(parse_num(std::string_view(spec).substr(5)), capacity);

    std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    std::ifstream file(path);
    if (!file) throw bad();
    std::stringstream buffer;
    buffer << file.rdbuf();
    NetworkTopology parsed = parse_topology(buffer.str(), capacity);
    return NetworkTopology(parsed.num_nodes(), parsed.edges(), parsed.capacities(), path);
}

}  // namespace dqc
