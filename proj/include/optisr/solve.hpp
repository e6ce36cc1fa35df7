#pragma once

#include "optisr/kernel.hpp"
#include "optisr/reconf.hpp"

#include <optional>

namespace optisr {

enum class SolveMode { automatic, bfs, chordal, fpt, oracle };

/// Exact maximum independent set is refused above this many vertices.
inline constexpr std::size_t kExactMisMaxVertices = 160;

struct SolveOptions {
    SolveMode mode = SolveMode::automatic;
    std::size_t state_budget = kDefaultStateBudget;
    /// Attach a witness sequence even where the algorithm does not need one.
    bool emit_sequence = false;
    std::optional<std::size_t> kernel_threshold;
    /// Target size from the instance file; enables the fpt fallback.
    std::optional<int> target;
};

/// With lower bound 0 every independent set is reachable: returns a maximum
/// independent set and the remove-all-then-add-all witness.
Solution solve_lower_bound_zero(const Instance& inst);

/// Opt-ISR dispatcher. Automatic mode: lower bound 0 shortcut, then the
/// chordal rule, then exhaustive bfs (falling back to fpt optimisation on
/// budget exhaustion when a target is known).
Solution solve(const Instance& inst, const SolveOptions& options = {});

struct Decision {
    bool yes = false;
    std::optional<VertexSet> witness;
    std::optional<ReconfSequence> sequence;
    KernelTrace trace;
};

/// Is an independent set of size >= target reachable?
Decision decide(const Instance& inst, int target, const SolveOptions& options = {});

} // namespace optisr
