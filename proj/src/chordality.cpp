#include "optisr/graph_algorithms.hpp"

#include <algorithm>
#include <iterator>
#include <list>
#include <set>

namespace optisr {

namespace {

// Partition refinement. Cells are kept in visiting priority; each cell is an
// ordered set of vertex indices so ties resolve to the smallest id.
struct Cell {
    std::set<std::size_t> members;
    std::size_t split_stamp = 0;
    std::list<Cell>::iterator split_into;
};

std::vector<std::size_t> lexbfs_indices(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> visit;
    visit.reserve(n);
    if (n == 0)
        return visit;

    std::list<Cell> cells;
    cells.emplace_back();
    std::vector<std::list<Cell>::iterator> cell_of(n, cells.begin());
    for (std::size_t i = 0; i < n; ++i)
        cells.front().members.insert(i);

    std::vector<bool> visited(n, false);
    for (std::size_t step = 1; step <= n; ++step) {
        auto head = cells.begin();
        std::size_t v = *head->members.begin();
        head->members.erase(head->members.begin());
        if (head->members.empty())
            cells.erase(head);
        visited[v] = true;
        visit.push_back(v);

        std::vector<std::list<Cell>::iterator> touched;
        for (VertexId w_id : g.neighbors_at(v)) {
            std::size_t w = *g.index_of(w_id);
            if (visited[w])
                continue;
            auto cell = cell_of[w];
            if (cell->split_stamp != step) {
                cell->split_stamp = step;
                cell->split_into = cells.emplace(cell);
                touched.push_back(cell);
            }
            cell->members.erase(w);
            cell->split_into->members.insert(w);
            cell_of[w] = cell->split_into;
        }
        for (auto cell : touched)
            if (cell->members.empty())
                cells.erase(cell);
    }
    return visit;
}

} // namespace

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order)
{
    const std::size_t n = g.order();
    if (order.size() != n)
        return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        auto i = g.index_of(order[p]);
        if (!i || position[*i] != n)
            return false;
        position[*i] = p;
    }
    // For each v, the earliest later neighbour u must see all other later
    // neighbours of v.
    for (std::size_t p = 0; p < n; ++p) {
        VertexId v = order[p];
        std::vector<VertexId> later;
        for (VertexId w : g.neighbors(v))
            if (position[*g.index_of(w)] > p)
                later.push_back(w);
        if (later.size() < 2)
            continue;
        auto parent = std::min_element(later.begin(), later.end(), [&](VertexId a, VertexId b) {
            return position[*g.index_of(a)] < position[*g.index_of(b)];
        });
        VertexId u = *parent;
        for (VertexId w : later)
            if (w != u && !g.adjacent(u, w))
                return false;
    }
    return true;
}

std::optional<std::vector<VertexId>> lexbfs_peo(const Graph& g)
{
    auto visit = lexbfs_indices(g);
    std::vector<VertexId> peo;
    peo.reserve(visit.size());
    for (auto it = visit.rbegin(); it != visit.rend(); ++it)
        peo.push_back(g.vertices()[*it]);
    if (!is_perfect_elimination_ordering(g, peo))
        return std::nullopt;
    return peo;
}

} // namespace optisr
