#pragma once

#include "optisr/graph.hpp"
#include "optisr/reconf.hpp"

#include <vector>

namespace optisr {

/// Greedy maximum independent set along a perfect elimination ordering.
/// The ordering is verified first; an invalid one throws InvalidInput.
VertexSet chordal_mis(const Graph& g, const std::vector<VertexId>& peo);

/// Opt-ISR on a chordal graph: the initial set is frozen exactly when it is
/// maximal and sits at the lower bound; otherwise every maximum independent
/// set is reachable. No witness is attached. Throws NotChordal.
Solution solve_chordal(const Instance& inst);

} // namespace optisr
