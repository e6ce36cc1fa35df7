#pragma once

#include "optisr/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace optisr {

inline constexpr std::size_t kDefaultStateBudget = 10'000'000;

/// Graph, lower bound on every intermediate set size, and the starting set.
struct Instance {
    Graph graph;
    int lower_bound = 0;
    VertexSet initial;
};

/// Throws InvalidInput unless `initial` is independent and |initial| >= lower_bound >= 0.
void validate_instance(const Instance& inst);

/// Independent sets visited one token addition or removal at a time.
struct ReconfSequence {
    std::vector<VertexSet> steps;
};

ReconfSequence reversed(const ReconfSequence& seq);

enum class Algorithm { bfs, chordal, fpt, oracle, shortcut_l0 };

std::string_view to_string(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct Solution {
    VertexSet best;
    std::size_t size = 0;
    Algorithm algorithm = Algorithm::bfs;
    std::optional<ReconfSequence> witness;
};

struct SequenceCheck {
    bool accepted = false;
    /// Index of the first offending step (0-based) when rejected.
    std::optional<std::size_t> first_violation;
    std::string reason;

    explicit operator bool() const noexcept { return accepted; }
};

/// Checks the TAR rule: starts at inst.initial, every step independent with
/// size >= lower bound, consecutive steps differ in exactly one vertex.
SequenceCheck verify_sequence(const Instance& inst, const ReconfSequence& seq);

/// Breadth-first search of the implicit graph whose nodes are independent
/// sets I with lower_bound <= |I| <= cap and whose edges are single token
/// additions or removals. Returns the largest reachable set with a shortest
/// witness. Ties go to the set closest to the start, then to the
/// lexicographically smallest member list.
/// cap = |V(G)| gives the exhaustive answer.
Solution bfs_optimize(const Instance& inst, std::size_t cap, std::size_t state_budget = kDefaultStateBudget);

struct Reachability {
    bool reachable = false;
    std::optional<ReconfSequence> witness;
};

/// Whether `target` is reachable from inst.initial under the TAR rule.
Reachability decide_reachable(const Instance& inst, const VertexSet& target,
    std::size_t state_budget = kDefaultStateBudget);

/// Exhaustive oracle on an explicitly materialised auxiliary graph: every
/// independent set of size >= lower_bound is enumerated, pairs differing in
/// one vertex are joined, and the component of the initial set is scanned.
/// Ties are broken as in bfs_optimize.
/// Limited to small graphs (at most kOracleMaxVertices vertices).
inline constexpr std::size_t kOracleMaxVertices = 24;
Solution oracle_optimize(const Instance& inst, std::size_t state_budget = kDefaultStateBudget);

} // namespace optisr
