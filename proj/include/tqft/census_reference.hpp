#pragma once

// Serial reference enumerators, kept for testing and benchmarking the
// parallel census kernel. They share no code with it.

#include "tqft/census.hpp"

namespace tqft::reference {

/// Odometer over every (a, b, e) tuple in [0, d-1], filtered by
/// is_small_admissible(). Cost d^(3g-1).
ParityCounts count_parities_serial(const LollipopTree& tree);

enum class TrunkEnd { first, last };

struct UnprunedCensus {
    ParityCounts counts;
    bool odd_chain_color_seen = false;
};

/// Enumerates raw edge colors in {0, ..., p-2} on every edge (sticks, loops,
/// chain) and checks each vertex, with the trunk attached to u_1 or u_g.
/// Cost (p-1)^(3g-1); intended for p = 5, 7 and small g.
UnprunedCensus count_unpruned(const LollipopTree& tree, TrunkEnd trunk = TrunkEnd::first);

}  // namespace tqft::reference
