#include "optisr/graph.hpp"

#include "optisr/errors.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace optisr {

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : VertexSet(std::vector<VertexId>(ids))
{
}

VertexSet::VertexSet(std::vector<VertexId> ids)
    : members_(std::move(ids))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(VertexId v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(VertexId v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v)
        members_.insert(it, v);
}

void VertexSet::erase(VertexId v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v)
        members_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const
{
    VertexSet out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const
{
    VertexSet out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const
{
    VertexSet out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

std::size_t VertexSet::symmetric_difference_size(const VertexSet& other) const
{
    std::size_t common = set_intersection(other).size();
    return size() + other.size() - 2 * common;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i)
        os << (i ? "," : "") << members_[i];
    os << '}';
    return os.str();
}

Graph::Graph(std::vector<VertexId> ids, std::span<const Edge> edges)
    : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw InvalidInput("duplicate vertex identifier");
    adjacency_.resize(ids_.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw InvalidInput("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        auto iu = index_of(u);
        auto iv = index_of(v);
        if (!iu || !iv)
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an unknown endpoint");
        adjacency_[*iu].push_back(v);
        adjacency_[*iv].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    edge_count_ = degree_sum / 2;
}

std::optional<std::size_t> Graph::index_of(VertexId v) const
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::checked_index(VertexId v) const
{
    auto i = index_of(v);
    if (!i)
        throw InvalidInput("unknown vertex " + std::to_string(v));
    return *i;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const
{
    return adjacency_[checked_index(v)];
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (VertexId w : adjacency_[i])
            if (ids_[i] < w)
                out.emplace_back(ids_[i], w);
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range [1," +
                std::to_string(n) + "]");
    }
    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ids[static_cast<std::size_t>(i)] = i + 1;
    return Graph(std::move(ids), edges);
}

void require_members(const Graph& g, const VertexSet& s)
{
    for (VertexId v : s)
        if (!g.has_vertex(v))
            throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
}

bool is_independent_set(const Graph& g, const VertexSet& s)
{
    require_members(g, s);
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (w > v && s.contains(w))
                return false;
    return true;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& s)
{
    if (!is_independent_set(g, s))
        throw InvalidInput("set " + s.to_string() + " is not independent");
    for (VertexId v : g.vertices()) {
        if (s.contains(v))
            continue;
        auto nbrs = g.neighbors(v);
        bool dominated = std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return s.contains(w); });
        if (!dominated)
            return false;
    }
    return true;
}

VertexSet open_neighborhood(const Graph& g, VertexId v)
{
    auto nbrs = g.neighbors(v);
    return VertexSet(std::vector<VertexId>(nbrs.begin(), nbrs.end()));
}

VertexSet closed_neighborhood(const Graph& g, VertexId v)
{
    VertexSet out = open_neighborhood(g, v);
    out.insert(v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& remove)
{
    require_members(g, remove);
    std::vector<VertexId> keep;
    keep.reserve(g.order() - remove.size());
    for (VertexId v : g.vertices())
        if (!remove.contains(v))
            keep.push_back(v);
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (!remove.contains(e.first) && !remove.contains(e.second))
            edges.push_back(e);
    return Graph(std::move(keep), edges);
}

} // namespace optisr
