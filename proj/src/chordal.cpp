#include "optisr/chordal.hpp"

#include "optisr/errors.hpp"
#include "optisr/graph_algorithms.hpp"

namespace optisr {

VertexSet chordal_mis(const Graph& g, const std::vector<VertexId>& peo)
{
    if (!is_perfect_elimination_ordering(g, peo))
        throw InvalidInput("ordering is not a perfect elimination ordering");
    std::vector<bool> dominated(g.order(), false);
    std::vector<VertexId> chosen;
    for (VertexId v : peo) {
        std::size_t i = g.checked_index(v);
        if (dominated[i])
            continue;
        chosen.push_back(v);
        for (VertexId w : g.neighbors_at(i))
            dominated[*g.index_of(w)] = true;
    }
    return VertexSet(std::move(chosen));
}

Solution solve_chordal(const Instance& inst)
{
    validate_instance(inst);
    auto peo = lexbfs_peo(inst.graph);
    if (!peo)
        throw NotChordal();
    Solution sol;
    sol.algorithm = Algorithm::chordal;
    bool frozen = inst.initial.size() == static_cast<std::size_t>(inst.lower_bound) &&
        is_maximal_independent_set(inst.graph, inst.initial);
    sol.best = frozen ? inst.initial : chordal_mis(inst.graph, *peo);
    sol.size = sol.best.size();
    return sol;
}

} // namespace optisr
