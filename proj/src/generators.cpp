#include "optisr/errors.hpp"
#include "optisr/graph_algorithms.hpp"
#include "optisr/instance_io.hpp"
#include "rng.hpp"

#include <algorithm>

namespace optisr {

namespace {

constexpr int kInitialSetRetries = 100;

// Greedy take-if-independent over a random order, then trimmed to a random
// size in [l, greedy size].
VertexSet random_initial_set(const Graph& g, int l, detail::Rng& rng)
{
    for (int attempt = 0; attempt < kInitialSetRetries; ++attempt) {
        std::vector<VertexId> order = g.vertices();
        rng.shuffle(order);
        std::vector<VertexId> picked;
        std::vector<bool> blocked(g.order(), false);
        for (VertexId v : order) {
            std::size_t i = *g.index_of(v);
            if (blocked[i])
                continue;
            picked.push_back(v);
            blocked[i] = true;
            for (VertexId w : g.neighbors_at(i))
                blocked[*g.index_of(w)] = true;
        }
        if (picked.size() < static_cast<std::size_t>(l))
            continue;
        std::size_t keep = static_cast<std::size_t>(l) + rng.below(picked.size() - static_cast<std::size_t>(l) + 1);
        picked.resize(keep);
        return VertexSet(std::move(picked));
    }
    throw InvalidInput("could not draw an initial independent set of size >= " + std::to_string(l));
}

} // namespace

Instance gen_random_instance(int n, double edge_probability, int l, std::uint64_t seed)
{
    if (n < 0)
        throw InvalidInput("vertex count must be non-negative");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw InvalidInput("edge probability must lie in [0,1]");
    if (l < 0 || l > n)
        throw InvalidInput("lower bound must lie in [0,n]");
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.unit() < edge_probability)
                edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    VertexSet initial = random_initial_set(g, l, rng);
    return Instance{std::move(g), l, std::move(initial)};
}

Graph gen_chordal(int n, int k, std::uint64_t seed)
{
    if (k < 1 || k >= n)
        throw InvalidInput("k-tree needs 1 <= k < n");
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<std::vector<VertexId>> cliques; // all k-cliques so far
    for (VertexId u = 1; u <= k + 1; ++u) {
        for (VertexId v = u + 1; v <= k + 1; ++v)
            edges.emplace_back(u, v);
        std::vector<VertexId> clique;
        for (VertexId w = 1; w <= k + 1; ++w)
            if (w != u)
                clique.push_back(w);
        cliques.push_back(std::move(clique));
    }
    for (VertexId v = k + 2; v <= n; ++v) {
        const std::vector<VertexId> base = cliques[rng.below(cliques.size())];
        for (VertexId u : base)
            edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < base.size(); ++drop) {
            std::vector<VertexId> clique;
            for (std::size_t j = 0; j < base.size(); ++j)
                if (j != drop)
                    clique.push_back(base[j]);
            clique.push_back(v);
            cliques.push_back(std::move(clique));
        }
    }
    return build_graph(n, edges);
}

Instance gen_chordal_instance(int n, int k, int l, std::uint64_t seed)
{
    if (l < 0)
        throw InvalidInput("lower bound must be non-negative");
    Graph g = gen_chordal(n, k, seed);
    detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    VertexSet initial = random_initial_set(g, l, rng);
    return Instance{std::move(g), l, std::move(initial)};
}

Instance gen_misr_gadget(const Graph& gp, const VertexSet& target, const VertexSet& initial)
{
    if (!is_independent_set(gp, target) || !is_independent_set(gp, initial))
        throw InvalidInput("gadget sets must be independent");
    const std::size_t alpha = independence_number(gp);
    if (target.size() != alpha || initial.size() != alpha)
        throw InvalidInput("gadget sets must be maximum independent sets (size " + std::to_string(alpha) + ")");
    if (alpha == 0)
        throw InvalidInput("gadget needs a non-empty graph");

    const VertexId u = gp.vertices().back() + 1;
    std::vector<VertexId> ids = gp.vertices();
    ids.push_back(u);
    std::vector<Edge> edges = gp.edges();
    for (VertexId v : gp.vertices())
        if (!target.contains(v))
            edges.emplace_back(v, u);
    return Instance{Graph(std::move(ids), edges), static_cast<int>(alpha) - 1, initial};
}

} // namespace optisr
