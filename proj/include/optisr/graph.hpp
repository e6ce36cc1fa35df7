#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace optisr {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Sorted, duplicate-free set of vertex identifiers.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> ids);
    explicit VertexSet(std::vector<VertexId> ids);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(VertexId v) const;

    const std::vector<VertexId>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    void insert(VertexId v);
    void erase(VertexId v);

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    std::size_t symmetric_difference_size(const VertexSet& other) const;

    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    std::vector<VertexId> members_;
};

/// Simple undirected graph. Vertex identities survive induced-subgraph
/// operations, so a set computed on a subgraph is valid in its supergraph.
class Graph {
public:
    Graph() = default;

    /// Vertices `ids` (any distinct integers) and the given edges. Duplicate
    /// edges collapse; self-loops and unknown endpoints throw InvalidInput.
    Graph(std::vector<VertexId> ids, std::span<const Edge> edges);

    std::size_t order() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<VertexId>& vertices() const noexcept { return ids_; }
    bool has_vertex(VertexId v) const { return index_of(v).has_value(); }

    /// Position of `v` in vertices(); vertices() is sorted, so index order
    /// and id order agree.
    std::optional<std::size_t> index_of(VertexId v) const;
    std::size_t checked_index(VertexId v) const;

    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const VertexId> neighbors_at(std::size_t index) const { return adjacency_[index]; }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    std::vector<Edge> edges() const;

private:
    std::vector<VertexId> ids_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Graph on vertices 1..n.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_maximal_independent_set(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, VertexId v);
VertexSet open_neighborhood(const Graph& g, VertexId v);
Graph induced_subgraph(const Graph& g, const VertexSet& remove);

/// Throws InvalidInput naming the first member of `s` missing from `g`.
void require_members(const Graph& g, const VertexSet& s);

} // namespace optisr
