#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqc {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using DistanceMatrix = std::vector<std::vector<std::size_t>>;

/// Undirected, connected QPU graph. Each node holds `capacity(n)` qubit slots;
/// hop distances are precomputed on construction. Immutable afterwards.
class NetworkTopology {
public:
    /// Throws std::invalid_argument for bad edges/capacities and
    /// std::domain_error when the graph is disconnected.
    NetworkTopology(std::size_t num_nodes, std::vector<Edge> edges, std::vector<std::size_t> capacities,
                    std::string name = {});

    std::size_t num_nodes() const { return capacities_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& capacities() const { return capacities_; }
    std::size_t capacity(NodeId n) const { return capacities_[n]; }
    std::size_t total_capacity() const;
    std::size_t dist(NodeId a, NodeId b) const { return dist_[a][b]; }
    const DistanceMatrix& distances() const { return dist_; }
    const std::string& name() const { return name_; }

    /// Throws InfeasibleError when fewer slots than qubits exist.
    void require_capacity_for(std::size_t num_qubits) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> capacities_;
    DistanceMatrix dist_;
    std::string name_;
};

/// 4-neighbour lattice; node id = row * cols + col.
NetworkTopology build_grid(std::size_t rows, std::size_t cols, std::size_t capacity = 2);

/// Node 0 is the hub, connected to every other node.
NetworkTopology build_star(std::size_t num_nodes, std::size_t capacity = 2);

/// BFS hop counts from every node. Throws std::domain_error if disconnected.
DistanceMatrix all_pairs_hops(const std::vector<Edge>& edges, std::size_t num_nodes);

/// Topology text format:
///
///     nodes 4
///     cap 0 2
///     edge 0 1
///
/// Nodes without a `cap` line get `default_capacity`.
NetworkTopology parse_topology(std::string_view text, std::size_t default_capacity = 2);

/// Resolves a topology spec: "grid:RxC", "star:N", "file:PATH" or a bare path.
NetworkTopology topology_from_spec(const std::string& spec, std::size_t capacity = 2);

}  // namespace dqc
