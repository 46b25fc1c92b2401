#pragma once

#include <cstddef>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/network.hpp"
#include "dqc/schedule.hpp"

namespace dqc::fixtures {

// Four-qubit example circuit with four marked time steps. Its H gates are
// written as X; only qubit occupancy matters for layering and cost.
inline Circuit example_circuit() {
    return Circuit(4, {
                          Gate::cx(0, 1), Gate::x(2), Gate::x(3),   // step 0
                          Gate::x(0), Gate::cx(1, 2), Gate::x(3),   // step 1
                          Gate::x(0), Gate::x(1), Gate::cx(2, 3),   // step 2
                          Gate::cx(0, 3), Gate::x(1), Gate::x(2),   // step 3
                      });
}

// Reference dynamic schedule for example_circuit.
inline Schedule reference_schedule() {
    return Schedule::from_rows({{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {1, 0, 1, 0}});
}

inline Schedule static_split_schedule() {
    return Schedule::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}, {1, 1, 1, 1}});
}

inline NetworkTopology two_node_path(std::size_t capacity = 2) { return build_grid(1, 2, capacity); }

inline std::vector<std::vector<std::size_t>> rows_of(const Schedule& s) {
    std::vector<std::vector<std::size_t>> rows(s.num_qubits(), std::vector<std::size_t>(s.num_steps()));
    for (std::size_t q = 0; q < s.num_qubits(); ++q)
        for (std::size_t t = 0; t < s.num_steps(); ++t) rows[q][t] = s.at(q, t);
    return rows;
}

}  // namespace dqc::fixtures
