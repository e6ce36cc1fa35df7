#pragma once

#include "optisr/graph.hpp"

#include <optional>
#include <vector>

namespace optisr {

struct DegeneracyInfo {
    int degeneracy = 0;
    /// Every vertex has at most `degeneracy` neighbours later in this order.
    std::vector<VertexId> elimination_order;
    /// Vertices of degree at most 2 * degeneracy.
    VertexSet low_degree;
};

/// Smallest-last ordering by repeated minimum-degree removal (bucket queue,
/// ties to the smallest id).
DegeneracyInfo degeneracy_ordering(const Graph& g);

/// Maximum number of neighbours placed later than each vertex in `order`.
int max_back_degree(const Graph& g, const std::vector<VertexId>& order);

/// Reversed Lex-BFS order if it is a perfect elimination ordering, otherwise
/// nullopt (the graph is not chordal).
std::optional<std::vector<VertexId>> lexbfs_peo(const Graph& g);

/// True iff `order` is a permutation of V(g) whose every vertex has a clique
/// of later neighbours.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order);

/// Lexicographically smallest maximum independent set (branch and bound).
VertexSet maximum_independent_set_exact(const Graph& g);

/// Size of a maximum independent set.
std::size_t independence_number(const Graph& g);

} // namespace optisr
