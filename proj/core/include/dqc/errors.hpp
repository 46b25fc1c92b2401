#pragma once

#include <stdexcept>
#include <string>

namespace dqc {

/// The network cannot host the circuit (too few qubit slots, or a partition
/// with more qubits than its part can hold).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dqc
