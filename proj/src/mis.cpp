#include "optisr/graph_algorithms.hpp"

#include <boost/dynamic_bitset.hpp>

namespace optisr {

namespace {

using Bits = boost::dynamic_bitset<>;

class MisSearch {
public:
    explicit MisSearch(const Graph& g)
        : n_(g.order())
        , neighbors_(n_, Bits(n_))
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (VertexId w : g.neighbors_at(i))
                neighbors_[i].set(*g.index_of(w));
    }

    std::size_t size() const noexcept { return n_; }
    const Bits& neighbors(std::size_t v) const { return neighbors_[v]; }

    /// Largest independent set inside `alive`, or anything <= floor when the
    /// optimum does not exceed `floor`.
    std::size_t solve(const Bits& alive, std::size_t floor = 0)
    {
        best_ = floor;
        branch(alive, 0);
        return best_;
    }

private:
    // Greedy clique cover of `alive`; its size bounds the independence number.
    std::size_t clique_cover_bound(Bits alive) const
    {
        std::size_t cliques = 0;
        for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_first()) {
            Bits candidates = alive & neighbors_[v];
            alive.reset(v);
            for (auto w = candidates.find_first(); w != Bits::npos; w = candidates.find_next(w)) {
                alive.reset(w);
                candidates &= neighbors_[w];
            }
            ++cliques;
        }
        return cliques;
    }

    void branch(Bits alive, std::size_t taken)
    {
        // Vertices of degree <= 1 belong to some optimum.
        for (bool changed = true; changed;) {
            changed = false;
            for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
                if ((neighbors_[v] & alive).count() <= 1) {
                    alive -= neighbors_[v];
                    alive.reset(v);
                    ++taken;
                    changed = true;
                }
            }
        }
        if (alive.none()) {
            best_ = std::max(best_, taken);
            return;
        }
        if (taken + alive.count() <= best_ || taken + clique_cover_bound(alive) <= best_)
            return;

        std::size_t pivot = alive.find_first();
        std::size_t pivot_degree = 0;
        for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
            std::size_t deg = (neighbors_[v] & alive).count();
            if (deg > pivot_degree) {
                pivot_degree = deg;
                pivot = v;
            }
        }
        Bits with = alive - neighbors_[pivot];
        with.reset(pivot);
        branch(std::move(with), taken + 1);
        alive.reset(pivot);
        branch(std::move(alive), taken);
    }

    std::size_t n_;
    std::vector<Bits> neighbors_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t independence_number(const Graph& g)
{
    MisSearch search(g);
    Bits all(g.order());
    all.set();
    return search.solve(all);
}

VertexSet maximum_independent_set_exact(const Graph& g)
{
    MisSearch search(g);
    const std::size_t n = g.order();
    Bits alive(n);
    alive.set();
    const std::size_t alpha = search.solve(alive);

    // Walk ids in increasing order, keeping a vertex whenever an optimum
    // extension still exists: this yields the lexicographically smallest optimum.
    std::vector<VertexId> chosen;
    for (std::size_t v = 0; v < n && chosen.size() < alpha; ++v) {
        if (!alive.test(v))
            continue;
        Bits rest = alive - search.neighbors(v);
        rest.reset(v);
        std::size_t need = alpha - chosen.size() - 1;
        bool feasible = need == 0 || search.solve(rest, need - 1) >= need;
        if (feasible) {
            chosen.push_back(g.vertices()[v]);
            alive = std::move(rest);
        } else {
            alive.reset(v);
        }
    }
    return VertexSet(std::move(chosen));
}

} // namespace optisr
