#pragma once

#include <functional>
#include <optional>

#include "bcast/broadcast.hpp"

namespace bcast {

struct SolveResult {
    int value;
    Broadcast witness;
    long long nodes_explored;
    std::optional<int> bounded_by;
};

struct SolverLimits {
    int alpha = 64;
    int beta_unbounded = 24;
    int beta_bounded2 = 40;
};

// Default limits, with the BCAST_EXACT_LIMIT environment variable (a single
// integer) overriding all three when set.
SolverLimits solver_limits();

// Exact independence number by branch and bound over adjacency bitsets.
SolveResult max_independent_set(const CirculantGraph& g,
                                const SolverLimits& limits = solver_limits());

// Exact broadcast independence number, optionally restricted to values <= bound.
// The witness is the lexicographically smallest optimal value array.
SolveResult broadcast_independence(const CirculantGraph& g,
                                   std::optional<int> bound = std::nullopt,
                                   const SolverLimits& limits = solver_limits());

// beta_b >= antipodal_number * (diam - 1) >= 2 (diam - 1)
bool verify_lower_bound_mu(const CirculantGraph& g);

// Visit every independent broadcast with all values <= bound (used by the
// exhaustive bound-check suites).  The callback receives the value array.
void for_each_bounded_independent_broadcast(
    const CirculantGraph& g, int bound,
    const std::function<void(const std::vector<int>&)>& visit);

}  // namespace bcast
