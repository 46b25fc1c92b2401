#include "dqc/moves.hpp"

#include <algorithm>
#include <vector>

namespace dqc {

std::string_view move_name(ScheduleMove move) {
    switch (move) {
        case ScheduleMove::SingleFlip: return "single_flip";
        case ScheduleMove::MultiFlip: return "multi_flip";
        case ScheduleMove::SwapRows: return "swap_rows";
        case ScheduleMove::SwapColumns: return "swap_columns";
        case ScheduleMove::SwapNodes: return "swap_nodes";
        case ScheduleMove::ShuffleRows: return "shuffle_rows";
        case ScheduleMove::ShuffleColumns: return "shuffle_columns";
    }
    return "?";
}

void swap_nodes_at(Schedule& s, std::size_t t, NodeId a, NodeId b) {
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
        NodeId& cell = s.at(q, t);
        if (cell == a) {
            cell = b;
        } else if (cell == b) {
            cell = a;
        }
    }
}

namespace {

void single_flip(Schedule& s, std::size_t num_nodes, Rng& rng) {
    if (s.cells().empty() || num_nodes < 2) return;
    NodeId& cell = s.cells()[uniform_index(rng, s.cells().size())];
    NodeId other = uniform_index(rng, num_nodes - 1);
    cell = other >= cell ? other + 1 : other;
}

void shuffle_rows(Schedule& s, Rng& rng) {
    if (s.num_qubits() < 2) return;
    auto [lo, hi] = distinct_pair(rng, s.num_qubits());
    std::vector<std::size_t> order(hi - lo + 1);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = lo + k;
    std::shuffle(order.begin(), order.end(), rng);

    Schedule copy = s;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t t = 0; t < s.num_steps(); ++t) s.at(lo + k, t) = copy.at(order[k], t);
}

void shuffle_columns(Schedule& s, Rng& rng) {
    if (s.num_steps() < 2) return;
    auto [lo, hi] = distinct_pair(rng, s.num_steps());
    std::vector<std::size_t> order(hi - lo + 1);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = lo + k;
    std::shuffle(order.begin(), order.end(), rng);

    Schedule copy = s;
    for (std::size_t q = 0; q < s.num_qubits(); ++q)
        for (std::size_t k = 0; k < order.size(); ++k) s.at(q, lo + k) = copy.at(q, order[k]);
}

}  // namespace

void apply_move(Schedule& s, ScheduleMove move, std::size_t num_nodes, Rng& rng) {
    switch (move) {
        case ScheduleMove::SingleFlip:
            single_flip(s, num_nodes, rng);
            break;
        case ScheduleMove::MultiFlip: {
            const std::size_t repeats = uniform_between(rng, kMinMultiFlips, kMaxMultiFlips);
            for (std::size_t k = 0; k < repeats; ++k) single_flip(s, num_nodes, rng);
            break;
        }
        case ScheduleMove::SwapRows:
            if (s.num_qubits() >= 2) {
                auto [a, b] = distinct_pair(rng, s.num_qubits());
                s.swap_rows(a, b);
            }
            break;
        case ScheduleMove::SwapColumns:
            if (s.num_steps() >= 2) {
                auto [a, b] = distinct_pair(rng, s.num_steps());
                s.swap_columns(a, b);
            }
            break;
        case ScheduleMove::SwapNodes:
            if (s.num_steps() >= 1 && num_nodes >= 2) {
                const std::size_t t = uniform_index(rng, s.num_steps());
                auto [a, b] = distinct_pair(rng, num_nodes);
                swap_nodes_at(s, t, a, b);
            }
            break;
        case ScheduleMove::ShuffleRows:
            shuffle_rows(s, rng);
            break;
        case ScheduleMove::ShuffleColumns:
            shuffle_columns(s, rng);
            break;
    }
}

}  // namespace dqc
