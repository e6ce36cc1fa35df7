#include "optisr/reconf.hpp"

#include "optisr/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace optisr {

void validate_instance(const Instance& inst)
{
    if (inst.lower_bound < 0)
        throw InvalidInput("lower bound must be non-negative");
    if (!is_independent_set(inst.graph, inst.initial))
        throw InvalidInput("initial set " + inst.initial.to_string() + " is not independent");
    if (inst.initial.size() < static_cast<std::size_t>(inst.lower_bound))
        throw InvalidInput("initial set has " + std::to_string(inst.initial.size()) +
            " vertices, below the lower bound " + std::to_string(inst.lower_bound));
}

ReconfSequence reversed(const ReconfSequence& seq)
{
    return ReconfSequence{{seq.steps.rbegin(), seq.steps.rend()}};
}

std::string_view to_string(Algorithm alg)
{
    switch (alg) {
    case Algorithm::bfs:
        return "bfs";
    case Algorithm::chordal:
        return "chordal";
    case Algorithm::fpt:
        return "fpt";
    case Algorithm::oracle:
        return "oracle";
    case Algorithm::shortcut_l0:
        return "shortcut_l0";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    for (auto alg : {Algorithm::bfs, Algorithm::chordal, Algorithm::fpt, Algorithm::oracle, Algorithm::shortcut_l0})
        if (to_string(alg) == name)
            return alg;
    return std::nullopt;
}

SequenceCheck verify_sequence(const Instance& inst, const ReconfSequence& seq)
{
    auto reject = [](std::size_t index, std::string reason) {
        return SequenceCheck{false, index, std::move(reason)};
    };
    if (seq.steps.empty())
        return reject(0, "empty sequence");
    if (seq.steps.front() != inst.initial)
        return reject(0, "sequence does not start at the initial set");
    const auto lower = static_cast<std::size_t>(std::max(inst.lower_bound, 0));
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const VertexSet& step = seq.steps[i];
        for (VertexId v : step)
            if (!inst.graph.has_vertex(v))
                return reject(i, "vertex " + std::to_string(v) + " is not in the graph");
        if (!is_independent_set(inst.graph, step))
            return reject(i, "set " + step.to_string() + " is not independent");
        if (step.size() < lower)
            return reject(i, "set " + step.to_string() + " is smaller than the lower bound");
        if (i > 0 && seq.steps[i - 1].symmetric_difference_size(step) != 1)
            return reject(i, "step does not add or remove exactly one vertex");
    }
    return SequenceCheck{true, std::nullopt, {}};
}

namespace {

// State encodings for the implicit search. Index order equals id order, so
// comparing index lists lexicographically compares id lists.

class MaskStates {
public:
    using Key = std::uint64_t;

    explicit MaskStates(const Graph& g)
        : graph_(g)
        , neighbors_(g.order(), 0)
    {
        for (std::size_t i = 0; i < g.order(); ++i)
            for (VertexId w : g.neighbors_at(i))
                neighbors_[i] |= Key{1} << *g.index_of(w);
        all_ = g.order() == 64 ? ~Key{0} : (Key{1} << g.order()) - 1;
    }

    static std::size_t size(Key k) { return static_cast<std::size_t>(std::popcount(k)); }

    // Same-size sets: the smaller one owns the lowest differing element.
    static bool lex_less(Key a, Key b)
    {
        Key diff = a ^ b;
        return diff != 0 && (a & diff & (~diff + 1)) != 0;
    }

    template <class Visit>
    void for_each_successor(Key k, std::size_t lower, std::size_t cap, Visit&& visit) const
    {
        std::size_t count = size(k);
        if (count > lower)
            for (Key rest = k; rest; rest &= rest - 1)
                visit(k & ~(rest & (~rest + 1)));
        if (count < cap) {
            Key blocked = k;
            for (Key rest = k; rest; rest &= rest - 1)
                blocked |= neighbors_[static_cast<std::size_t>(std::countr_zero(rest))];
            for (Key free = all_ & ~blocked; free; free &= free - 1)
                visit(k | (free & (~free + 1)));
        }
    }

    Key encode(const VertexSet& s) const
    {
        Key k = 0;
        for (VertexId v : s)
            k |= Key{1} << graph_.checked_index(v);
        return k;
    }

    VertexSet decode(Key k) const
    {
        std::vector<VertexId> ids;
        for (; k; k &= k - 1)
            ids.push_back(graph_.vertices()[static_cast<std::size_t>(std::countr_zero(k))]);
        return VertexSet(std::move(ids));
    }

private:
    const Graph& graph_;
    std::vector<Key> neighbors_;
    Key all_ = 0;
};

class ListStates {
public:
    using Key = std::vector<std::uint32_t>;

    explicit ListStates(const Graph& g)
        : graph_(g)
        , neighbors_(g.order())
    {
        for (std::size_t i = 0; i < g.order(); ++i)
            for (VertexId w : g.neighbors_at(i))
                neighbors_[i].push_back(static_cast<std::uint32_t>(*g.index_of(w)));
    }

    static std::size_t size(const Key& k) { return k.size(); }
    static bool lex_less(const Key& a, const Key& b) { return a < b; }

    template <class Visit>
    void for_each_successor(const Key& k, std::size_t lower, std::size_t cap, Visit&& visit) const
    {
        if (k.size() > lower) {
            for (std::size_t i = 0; i < k.size(); ++i) {
                Key next;
                next.reserve(k.size() - 1);
                next.insert(next.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(next.end(), k.begin() + static_cast<std::ptrdiff_t>(i) + 1, k.end());
                visit(std::move(next));
            }
        }
        if (k.size() < cap) {
            std::vector<bool> blocked(neighbors_.size(), false);
            for (auto v : k) {
                blocked[v] = true;
                for (auto w : neighbors_[v])
                    blocked[w] = true;
            }
            for (std::uint32_t v = 0; v < blocked.size(); ++v) {
                if (blocked[v])
                    continue;
                Key next = k;
                next.insert(std::lower_bound(next.begin(), next.end(), v), v);
                visit(std::move(next));
            }
        }
    }

    Key encode(const VertexSet& s) const
    {
        Key k;
        for (VertexId v : s)
            k.push_back(static_cast<std::uint32_t>(graph_.checked_index(v)));
        return k;
    }

    VertexSet decode(const Key& k) const
    {
        std::vector<VertexId> ids;
        for (auto i : k)
            ids.push_back(graph_.vertices()[i]);
        return VertexSet(std::move(ids));
    }

private:
    const Graph& graph_;
    std::vector<std::vector<std::uint32_t>> neighbors_;
};

template <class States>
struct SearchOutcome {
    using Key = typename States::Key;
    Key best;
    std::optional<Key> hit;
    std::unordered_map<Key, Key, boost::hash<Key>> parent;
};

// Optima are ranked by size, then by distance from the start (earliest BFS
// layer), then lexicographically.
template <class States, class Stop>
SearchOutcome<States> breadth_first(const States& states, const typename States::Key& start, std::size_t lower,
    std::size_t cap, std::size_t budget, Stop&& stop)
{
    using Key = typename States::Key;
    SearchOutcome<States> out;
    out.best = start;
    std::size_t best_depth = 0;
    out.parent.emplace(start, start);
    if (stop(start)) {
        out.hit = start;
        return out;
    }
    std::deque<std::pair<Key, std::size_t>> frontier;
    frontier.emplace_back(start, 0);
    while (!frontier.empty()) {
        auto [current, depth] = std::move(frontier.front());
        frontier.pop_front();
        bool done = false;
        states.for_each_successor(current, lower, cap, [&](Key next) {
            if (done || out.parent.contains(next))
                return;
            if (out.parent.size() >= budget)
                throw StateBudgetExceeded(budget);
            out.parent.emplace(next, current);
            std::size_t ns = States::size(next);
            std::size_t bs = States::size(out.best);
            if (ns > bs || (ns == bs && depth + 1 == best_depth && States::lex_less(next, out.best))) {
                out.best = next;
                best_depth = depth + 1;
            }
            if (stop(next)) {
                out.hit = next;
                done = true;
                return;
            }
            frontier.emplace_back(std::move(next), depth + 1);
        });
        if (done)
            break;
    }
    return out;
}

template <class States>
ReconfSequence trace_back(const States& states, const SearchOutcome<States>& outcome, typename States::Key end)
{
    std::vector<VertexSet> steps;
    for (;;) {
        steps.push_back(states.decode(end));
        const auto& prev = outcome.parent.at(end);
        if (prev == end)
            break;
        end = prev;
    }
    std::reverse(steps.begin(), steps.end());
    return ReconfSequence{std::move(steps)};
}

template <class States>
Solution optimize_with(const States& states, const Instance& inst, std::size_t cap, std::size_t budget)
{
    auto start = states.encode(inst.initial);
    auto outcome = breadth_first(states, start, static_cast<std::size_t>(inst.lower_bound), cap, budget,
        [](const auto&) { return false; });
    Solution sol;
    sol.best = states.decode(outcome.best);
    sol.size = sol.best.size();
    sol.algorithm = Algorithm::bfs;
    sol.witness = trace_back(states, outcome, outcome.best);
    return sol;
}

template <class States>
Reachability reach_with(const States& states, const Instance& inst, const VertexSet& target, std::size_t budget)
{
    auto start = states.encode(inst.initial);
    auto goal = states.encode(target);
    auto outcome = breadth_first(states, start, static_cast<std::size_t>(inst.lower_bound), inst.graph.order(),
        budget, [&](const auto& k) { return k == goal; });
    Reachability r;
    if (outcome.hit) {
        r.reachable = true;
        r.witness = trace_back(states, outcome, *outcome.hit);
    }
    return r;
}

} // namespace

Solution bfs_optimize(const Instance& inst, std::size_t cap, std::size_t state_budget)
{
    validate_instance(inst);
    if (cap > inst.graph.order())
        throw InvalidInput("cap exceeds the number of vertices");
    if (inst.initial.size() > cap || static_cast<std::size_t>(inst.lower_bound) > cap)
        throw InvalidInput("cap is below the initial set size or the lower bound");
    if (inst.graph.order() <= 64)
        return optimize_with(MaskStates(inst.graph), inst, cap, state_budget);
    return optimize_with(ListStates(inst.graph), inst, cap, state_budget);
}

Reachability decide_reachable(const Instance& inst, const VertexSet& target, std::size_t state_budget)
{
    validate_instance(inst);
    if (!is_independent_set(inst.graph, target))
        throw InvalidInput("target set " + target.to_string() + " is not independent");
    if (target.size() < static_cast<std::size_t>(inst.lower_bound))
        return {};
    if (inst.graph.order() <= 64)
        return reach_with(MaskStates(inst.graph), inst, target, state_budget);
    return reach_with(ListStates(inst.graph), inst, target, state_budget);
}

Solution oracle_optimize(const Instance& inst, std::size_t state_budget)
{
    validate_instance(inst);
    const std::size_t n = inst.graph.order();
    if (n > kOracleMaxVertices)
        throw InvalidInput("oracle is limited to " + std::to_string(kOracleMaxVertices) + " vertices");

    MaskStates states(inst.graph);
    std::vector<std::uint32_t> neighbor_mask(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId w : inst.graph.neighbors_at(i))
            neighbor_mask[i] |= std::uint32_t{1} << *inst.graph.index_of(w);

    // Nodes: every independent set of size >= lower bound.
    const auto lower = static_cast<std::size_t>(inst.lower_bound);
    std::vector<std::uint32_t> nodes;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        auto m = static_cast<std::uint32_t>(mask);
        if (static_cast<std::size_t>(std::popcount(m)) < lower)
            continue;
        bool independent = true;
        for (std::uint32_t rest = m; rest && independent; rest &= rest - 1)
            independent = (neighbor_mask[static_cast<std::size_t>(std::countr_zero(rest))] & m) == 0;
        if (!independent)
            continue;
        if (nodes.size() >= state_budget)
            throw StateBudgetExceeded(state_budget);
        nodes.push_back(m);
    }
    const std::size_t count = nodes.size();
    if (count * count / 2 > 50 * state_budget)
        throw StateBudgetExceeded(state_budget);

    // Edges: all pairs whose symmetric difference is a single vertex.
    std::vector<std::vector<std::size_t>> adjacency(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
            if (std::popcount(nodes[a] ^ nodes[b]) == 1) {
                adjacency[a].push_back(b);
                adjacency[b].push_back(a);
            }

    auto start_key = static_cast<std::uint32_t>(states.encode(inst.initial));
    auto start = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), start_key) - nodes.begin());
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(count, unseen);
    std::vector<std::size_t> depth(count, 0);
    parent[start] = start;
    std::size_t best = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        std::size_t a = queue.front();
        queue.pop_front();
        auto sa = std::popcount(nodes[a]);
        auto sb = std::popcount(nodes[best]);
        if (sa > sb || (sa == sb && depth[a] == depth[best] && MaskStates::lex_less(nodes[a], nodes[best])))
            best = a;
        for (std::size_t b : adjacency[a])
            if (parent[b] == unseen) {
                parent[b] = a;
                depth[b] = depth[a] + 1;
                queue.push_back(b);
            }
    }

    std::vector<VertexSet> steps;
    for (std::size_t a = best;; a = parent[a]) {
        steps.push_back(states.decode(nodes[a]));
        if (parent[a] == a)
            break;
    }
    std::reverse(steps.begin(), steps.end());

    Solution sol;
    sol.best = steps.back();
    sol.size = sol.best.size();
    sol.algorithm = Algorithm::oracle;
    sol.witness = ReconfSequence{std::move(steps)};
    return sol;
}

} // namespace optisr
