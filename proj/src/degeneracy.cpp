#include "optisr/graph_algorithms.hpp"

#include <algorithm>
#include <set>

namespace optisr {

DegeneracyInfo degeneracy_ordering(const Graph& g)
{
    const std::size_t n = g.order();
    DegeneracyInfo info;
    info.elimination_order.reserve(n);

    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        degree[i] = g.neighbors_at(i).size();
        max_degree = std::max(max_degree, degree[i]);
    }
    // Index order equals id order, so begin() of a bucket is the smallest id.
    std::vector<std::set<std::size_t>> buckets(max_degree + 1);
    for (std::size_t i = 0; i < n; ++i)
        buckets[degree[i]].insert(i);

    std::vector<bool> removed(n, false);
    std::size_t cursor = 0;
    for (std::size_t step = 0; step < n; ++step) {
        while (buckets[cursor].empty())
            ++cursor;
        std::size_t v = *buckets[cursor].begin();
        buckets[cursor].erase(buckets[cursor].begin());
        removed[v] = true;
        info.degeneracy = std::max(info.degeneracy, static_cast<int>(cursor));
        info.elimination_order.push_back(g.vertices()[v]);
        for (VertexId w_id : g.neighbors_at(v)) {
            std::size_t w = *g.index_of(w_id);
            if (removed[w])
                continue;
            buckets[degree[w]].erase(w);
            --degree[w];
            buckets[degree[w]].insert(w);
        }
        if (cursor > 0)
            --cursor;
    }

    std::vector<VertexId> low;
    for (std::size_t i = 0; i < n; ++i)
        if (g.neighbors_at(i).size() <= 2 * static_cast<std::size_t>(info.degeneracy))
            low.push_back(g.vertices()[i]);
    info.low_degree = VertexSet(std::move(low));
    return info;
}

int max_back_degree(const Graph& g, const std::vector<VertexId>& order)
{
    std::vector<std::size_t> position(g.order());
    for (std::size_t p = 0; p < order.size(); ++p)
        position[g.checked_index(order[p])] = p;
    int worst = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
        int later = 0;
        for (VertexId w : g.neighbors(order[p]))
            if (position[*g.index_of(w)] > p)
                ++later;
        worst = std::max(worst, later);
    }
    return worst;
}

} // namespace optisr
