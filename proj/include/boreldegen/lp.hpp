#pragma once
#include "field.hpp"
#include <optional>
#include <vector>

namespace boreldegen {

// System of strict separations a.x >= 1 over the rationals, given by the
// rows a.
struct SeparationProblem {
    std::vector<std::vector<long>> rows;
};

// Exact Fourier-Motzkin elimination.  Returns an integer solution with
// a.x >= 1 for every row, or nullopt when the system is infeasible.
// Deterministic.
std::optional<std::vector<long>> strict_feasible(const SeparationProblem& prob);

} // namespace boreldegen
