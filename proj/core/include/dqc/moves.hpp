#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "dqc/rng.hpp"
#include "dqc/schedule.hpp"

namespace dqc {

/// Perturbations of a schedule matrix shared by the annealer (neighbour
/// moves) and the evolutionary scheduler (mutations).
enum class ScheduleMove {
    SingleFlip,      // one cell reassigned to a different node
    MultiFlip,       // SingleFlip repeated 2..5 times
    SwapRows,        // two qubits exchange their whole timelines
    SwapColumns,     // two time steps exchange their assignments
    SwapNodes,       // at one step, qubits on node a and node b trade places
    ShuffleRows,     // rows in a random inclusive range are permuted
    ShuffleColumns,  // same, for columns
};

inline constexpr std::array kAllScheduleMoves{
    ScheduleMove::SingleFlip,  ScheduleMove::MultiFlip,   ScheduleMove::SwapRows,       ScheduleMove::SwapColumns,
    ScheduleMove::SwapNodes,   ScheduleMove::ShuffleRows, ScheduleMove::ShuffleColumns,
};

/// The annealer's neighbourhood: every move except MultiFlip.
inline constexpr std::array kNeighbourMoves{
    ScheduleMove::SingleFlip,  ScheduleMove::SwapRows,    ScheduleMove::SwapColumns,
    ScheduleMove::SwapNodes,   ScheduleMove::ShuffleRows, ScheduleMove::ShuffleColumns,
};

inline constexpr std::size_t kMinMultiFlips = 2;
inline constexpr std::size_t kMaxMultiFlips = 5;

std::string_view move_name(ScheduleMove move);

/// Applies `move` in place. Moves that need two distinct rows, columns or
/// nodes leave the schedule untouched when the dimension is 1.
void apply_move(Schedule& s, ScheduleMove move, std::size_t num_nodes, Rng& rng);

/// Swaps the qubit sets of nodes a and b in column t.
void swap_nodes_at(Schedule& s, std::size_t t, NodeId a, NodeId b);

}  // namespace dqc
