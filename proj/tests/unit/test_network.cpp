#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "dqc/errors.hpp"
#include "dqc/network.hpp"
#include "dqc/rng.hpp"
#include "oracles.hpp"

using namespace dqc;

namespace {

void check_against_floyd_warshall(const NetworkTopology& net) {
    const auto fw = oracle::floyd_warshall(net.edges(), net.num_nodes());
    for (NodeId a = 0; a < net.num_nodes(); ++a)
        for (NodeId b = 0; b < net.num_nodes(); ++b) CHECK(static_cast<long>(net.dist(a, b)) == fw[a][b]);
}

void check_metric(const NetworkTopology& net) {
    const std::size_t n = net.num_nodes();
    for (NodeId a = 0; a < n; ++a) {
        CHECK(net.dist(a, a) == 0);
        for (NodeId b = 0; b < n; ++b) {
            CHECK(net.dist(a, b) == net.dist(b, a));
            for (NodeId c = 0; c < n; ++c) CHECK(net.dist(a, c) <= net.dist(a, b) + net.dist(b, c));
        }
    }
}

std::vector<std::size_t> sorted_distances(const NetworkTopology& net) {
    std::vector<std::size_t> all;
    for (const auto& row : net.distances()) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("grid geometry") {
    const NetworkTopology g22 = build_grid(2, 2, 2);
    CHECK(g22.num_nodes() == 4);
    CHECK(g22.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(g22.dist(0, 3) == 2);
    CHECK(g22.distances()[0] == std::vector<std::size_t>{0, 1, 1, 2});
    CHECK(g22.name() == "grid2x2");

    CHECK(build_grid(2, 3, 2).dist(0, 5) == 3);
    const NetworkTopology path = build_grid(1, 2, 2);
    CHECK(path.num_nodes() == 2);
    CHECK(path.dist(0, 1) == 1);

    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t c = 1; c <= 4; ++c) {
            if (r * c < 2) continue;
            const NetworkTopology g = build_grid(r, c, 3);
            for (NodeId a = 0; a < r * c; ++a)
                for (NodeId b = 0; b < r * c; ++b) {
                    const long dr = static_cast<long>(a / c) - static_cast<long>(b / c);
                    const long dc = static_cast<long>(a % c) - static_cast<long>(b % c);
                    CHECK(static_cast<long>(g.dist(a, b)) == std::abs(dr) + std::abs(dc));
                }
            CHECK(g.total_capacity() == 3 * r * c);
        }
    CHECK_THROWS(build_grid(1, 1, 2));
}

TEST_CASE("star geometry") {
    const NetworkTopology s4 = build_star(4, 2);
    CHECK(s4.dist(1, 2) == 2);
    CHECK(s4.dist(0, 3) == 1);
    CHECK(s4.distances()[1] == std::vector<std::size_t>{1, 0, 2, 2});
    CHECK(build_star(2, 2).edges().size() == 1);
    const NetworkTopology s6 = build_star(6, 2);
    for (NodeId a = 1; a < 6; ++a)
        for (NodeId b = 1; b < 6; ++b)
            if (a != b) CHECK(s6.dist(a, b) == 2);
    CHECK_THROWS(build_star(1, 2));
}

TEST_CASE("all pairs hops") {
    const auto tri = all_pairs_hops({{0, 1}, {1, 2}, {0, 2}}, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(tri[a][b] == (a == b ? 0u : 1u));
    CHECK_THROWS_AS(all_pairs_hops({{0, 1}, {2, 3}}, 4), std::domain_error);
    CHECK_THROWS_AS(NetworkTopology(3, {{0, 1}}, {2, 2, 2}), std::domain_error);
}

TEST_CASE("distances match floyd-warshall and form a metric") {
    for (const auto& net : {build_grid(2, 2), build_grid(3, 3), build_grid(1, 5), build_star(4), build_star(7)}) {
        check_against_floyd_warshall(net);
        check_metric(net);
    }
    Rng rng = make_rng(5);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 2 + uniform_index(rng, 7);
        std::vector<Edge> edges;
        for (NodeId v = 1; v < n; ++v) edges.emplace_back(uniform_index(rng, v), v);  // spanning tree
        for (int extra = 0; extra < 3; ++extra) {
            auto [a, b] = distinct_pair(rng, n);
            edges.emplace_back(a, b);
        }
        const NetworkTopology net(n, edges, std::vector<std::size_t>(n, 2));
        check_against_floyd_warshall(net);
        check_metric(net);
    }
}

TEST_CASE("automorphism relabelling keeps the distance multiset") {
    // Mirror the 2x3 grid left-right.
    const NetworkTopology g = build_grid(2, 3);
    std::vector<Edge> mirrored;
    for (auto [a, b] : g.edges()) {
        auto flip = [](NodeId v) { return (v / 3) * 3 + (2 - v % 3); };
        mirrored.emplace_back(flip(a), flip(b));
    }
    const NetworkTopology m(6, mirrored, std::vector<std::size_t>(6, 2));
    CHECK(sorted_distances(g) == sorted_distances(m));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(NetworkTopology(2, {{0, 0}}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkTopology(2, {{0, 2}}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkTopology(2, {{0, 1}}, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkTopology(2, {{0, 1}}, {2}), std::invalid_argument);
    const NetworkTopology dup(2, {{0, 1}, {1, 0}, {0, 1}}, {1, 1});
    CHECK(dup.edges().size() == 1);
}

TEST_CASE("capacity check") {
    const NetworkTopology g = build_grid(2, 2, 2);
    CHECK_NOTHROW(g.require_capacity_for(8));
    CHECK_THROWS_AS(g.require_capacity_for(9), InfeasibleError);
    const NetworkTopology mixed(3, {{0, 1}, {1, 2}}, {1, 3, 2});
    CHECK(mixed.total_capacity() == 6);
    CHECK(mixed.capacity(1) == 3);
}

TEST_CASE("topology file format") {
    const NetworkTopology t = parse_topology("# ring\nnodes 4\ncap 0 3\ncap 2 1\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\n");
    CHECK(t.num_nodes() == 4);
    CHECK(t.capacities() == std::vector<std::size_t>{3, 2, 1, 2});
    CHECK(t.dist(0, 2) == 2);
    CHECK_THROWS(parse_topology("edge 0 1\nnodes 2"));
    CHECK_THROWS(parse_topology("nodes 2\nedge 0 5"));
    CHECK_THROWS(parse_topology("nodes 2\ncap 0 0\nedge 0 1"));
    CHECK_THROWS(parse_topology("nodes 2\nlink 0 1"));
    CHECK_THROWS(parse_topology("nodes 3\nedge 0 1"));
}

TEST_CASE("topology specs") {
    CHECK(topology_from_spec("grid:2x2", 2).num_nodes() == 4);
    CHECK(topology_from_spec("grid:1x3", 5).capacity(2) == 5);
    CHECK(topology_from_spec("star:4", 2).dist(1, 3) == 2);
    CHECK_THROWS(topology_from_spec("grid:2", 2));
    CHECK_THROWS(topology_from_spec("ring:4", 2));

    const auto path = std::filesystem::temp_directory_path() / "dqc_test_topology.txt";
    {
        std::ofstream out(path);
        out << "nodes 3\nedge 0 1\nedge 1 2\n";
    }
    const NetworkTopology fromfile = topology_from_spec("file:" + path.string(), 4);
    CHECK(fromfile.capacities() == std::vector<std::size_t>{4, 4, 4});
    CHECK(fromfile.dist(0, 2) == 2);
    std::filesystem::remove(path);
}

}
