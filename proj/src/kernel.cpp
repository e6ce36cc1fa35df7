#include "optisr/kernel.hpp"

#include "optisr/errors.hpp"
#include "optisr/graph_algorithms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace optisr {

BigInt f_threshold(int s, int d)
{
    if (s < 0 || d < 0)
        throw InvalidInput("f(s,d) needs s >= 0 and d >= 0");
    const int t = 2 * d + 1;
    BigInt factorial = 1;
    for (int i = 2; i <= t; ++i)
        factorial *= i;
    return factorial * boost::multiprecision::pow(BigInt(2 * s + d), static_cast<unsigned>(t));
}

VertexSet low_degree_candidates(const Graph& g, const VertexSet& initial, int d)
{
    std::vector<VertexId> out;
    const auto limit = static_cast<std::size_t>(2 * std::max(d, 0));
    for (std::size_t i = 0; i < g.order(); ++i) {
        VertexId v = g.vertices()[i];
        if (g.neighbors_at(i).size() <= limit && !initial.contains(v))
            out.push_back(v);
    }
    return VertexSet(std::move(out));
}

void KernelTrace::append(const KernelTrace& other)
{
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

namespace {

std::string join_ids(const VertexSet& s)
{
    std::string out;
    for (VertexId v : s) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

} // namespace

std::string KernelTrace::to_text() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "remove " << e.removed;
        if (e.reason == TraceEntry::Reason::twin)
            os << " twin " << e.partner;
        else
            os << " sunflower core=" << join_ids(e.core) << " members=" << join_ids(e.members);
        os << '\n';
    }
    return os.str();
}

Reduction twin_reduce(const Graph& g, const VertexSet& initial, int d)
{
    Reduction out{g, {}};
    for (;;) {
        VertexSet candidates = low_degree_candidates(out.graph, initial, d);
        std::map<VertexSet, VertexId> first_owner;
        std::optional<std::pair<VertexId, VertexId>> pair; // (removed, kept)
        for (VertexId b : candidates) {
            auto [it, fresh] = first_owner.emplace(closed_neighborhood(out.graph, b), b);
            if (!fresh) {
                pair.emplace(b, it->second);
                break;
            }
        }
        if (!pair)
            return out;
        out.graph = induced_subgraph(out.graph, VertexSet{pair->first});
        TraceEntry entry;
        entry.removed = pair->first;
        entry.reason = TraceEntry::Reason::twin;
        entry.partner = pair->second;
        entry.candidates_before = candidates.size();
        entry.candidates_after = low_degree_candidates(out.graph, initial, d).size();
        out.trace.entries.push_back(std::move(entry));
    }
}

bool is_sunflower(const SunflowerFamily& family)
{
    const auto& sets = family.sets;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i].second.set_intersection(sets[j].second) != family.core)
                return false;
    }
    return true;
}

namespace {

struct Partial {
    std::vector<std::size_t> picked; // indices into the caller's family
    VertexSet core;
};

// `sets` pairs an index into the original family with what remains of that
// set after deleting the elements already moved into the core.
std::optional<Partial> grow_sunflower(const std::vector<std::pair<std::size_t, VertexSet>>& sets, std::size_t petals)
{
    if (sets.size() < petals)
        return std::nullopt;

    Partial disjoint;
    VertexSet used;
    for (const auto& [index, set] : sets) {
        if (!set.set_intersection(used).empty())
            continue;
        disjoint.picked.push_back(index);
        used = used.set_union(set);
        if (disjoint.picked.size() == petals)
            return disjoint;
    }

    std::map<VertexId, std::size_t> frequency;
    for (const auto& entry : sets)
        for (VertexId x : entry.second)
            ++frequency[x];
    auto most = std::max_element(frequency.begin(), frequency.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (most == frequency.end())
        return std::nullopt;
    const VertexId pivot = most->first;

    std::vector<std::pair<std::size_t, VertexSet>> shrunk;
    for (const auto& [index, set] : sets) {
        if (!set.contains(pivot))
            continue;
        VertexSet rest = set;
        rest.erase(pivot);
        // A set equal to {pivot} stays as the one set with an empty petal.
        shrunk.emplace_back(index, std::move(rest));
    }
    auto inner = grow_sunflower(shrunk, petals);
    if (inner)
        inner->core.insert(pivot);
    return inner;
}

} // namespace

std::optional<SunflowerFamily> find_sunflower(std::span<const OwnedSet> family, int petals, int max_set_size)
{
    if (petals < 1)
        throw InvalidInput("a sunflower needs at least one petal");
    std::set<VertexSet> distinct;
    std::vector<std::pair<std::size_t, VertexSet>> sets;
    VertexSet universe;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const VertexSet& s = family[i].second;
        if (s.empty())
            throw InvalidInput("sunflower family contains an empty set");
        if (s.size() > static_cast<std::size_t>(max_set_size))
            throw InvalidInput("set " + s.to_string() + " exceeds the size bound " + std::to_string(max_set_size));
        if (!distinct.insert(s).second)
            throw InvalidInput("sunflower family contains the set " + s.to_string() + " twice");
        sets.emplace_back(i, s);
        universe = universe.set_union(s);
    }

    auto found = grow_sunflower(sets, static_cast<std::size_t>(petals));
    if (!found)
        return std::nullopt;

    SunflowerFamily out;
    out.universe = std::move(universe);
    out.core = std::move(found->core);
    out.petals = petals;
    out.max_set_size = max_set_size;
    std::sort(found->picked.begin(), found->picked.end());
    std::vector<VertexId> owners;
    for (std::size_t i : found->picked) {
        out.sets.push_back(family[i]);
        owners.push_back(family[i].first);
    }
    out.members = VertexSet(std::move(owners));
    if (!is_sunflower(out))
        throw InternalError("sunflower search returned a non-sunflower");
    return out;
}

std::optional<SunflowerReduction> sunflower_reduce(const Graph& g, const VertexSet& initial, int s, int d)
{
    if (s < 0 || d < 0)
        throw InvalidInput("sunflower reduction needs s >= 0 and d >= 0");
    VertexSet candidates = low_degree_candidates(g, initial, d);
    // Closed twins share a set; the smallest owner represents it.
    std::vector<OwnedSet> family;
    std::set<VertexSet> seen;
    for (VertexId b : candidates) {
        VertexSet nb = closed_neighborhood(g, b);
        if (seen.insert(nb).second)
            family.emplace_back(b, std::move(nb));
    }

    const int petals = 2 * s + d + 1;
    auto sunflower = find_sunflower(family, petals, 2 * d + 1);
    if (!sunflower)
        return std::nullopt;

    const VertexSet& members = sunflower->members;
    VertexSet outside = members.set_difference(sunflower->core);
    VertexSet inside = members.set_intersection(sunflower->core);
    if (!is_independent_set(g, outside))
        throw InternalError("sunflower members outside the core are not independent");
    for (VertexId u : inside)
        for (VertexId v : inside)
            if (u < v && !g.adjacent(u, v))
                throw InternalError("sunflower members inside the core do not form a clique");
    if (inside.size() > static_cast<std::size_t>(d) + 1 || outside.size() < 2 * static_cast<std::size_t>(s))
        throw InternalError("sunflower member split contradicts the degeneracy bound");

    const VertexId victim = *members.begin();
    SunflowerReduction out{induced_subgraph(g, VertexSet{victim}), {}, *sunflower};
    TraceEntry entry;
    entry.removed = victim;
    entry.reason = TraceEntry::Reason::sunflower;
    entry.core = sunflower->core;
    entry.members = members;
    entry.candidates_before = candidates.size();
    entry.candidates_after = low_degree_candidates(out.graph, initial, d).size();
    out.trace.entries.push_back(std::move(entry));
    return out;
}

FptDecision fpt_decide(const ParamInstance& pinst, const FptOptions& options)
{
    const Instance& inst = pinst.instance;
    validate_instance(inst);
    const int s = pinst.target;
    if (s < 0)
        throw InvalidInput("target size must be non-negative");

    FptDecision out;
    out.kernel = inst.graph;
    if (s <= inst.lower_bound || inst.initial.size() >= static_cast<std::size_t>(s)) {
        out.yes = true;
        out.witness = inst.initial;
        out.sequence = ReconfSequence{{inst.initial}};
        return out;
    }

    const int d = degeneracy_ordering(inst.graph).degeneracy;
    out.degeneracy = d;
    BigInt threshold = f_threshold(s, d);
    if (options.threshold_override && BigInt(*options.threshold_override) < threshold)
        threshold = BigInt(*options.threshold_override);

    for (;;) {
        Reduction twins = twin_reduce(out.kernel, inst.initial, d);
        out.kernel = std::move(twins.graph);
        out.trace.append(twins.trace);
        std::size_t candidates = low_degree_candidates(out.kernel, inst.initial, d).size();
        if (BigInt(candidates) <= threshold)
            break;
        auto reduced = sunflower_reduce(out.kernel, inst.initial, s, d);
        if (!reduced) {
            if (!options.threshold_override)
                throw InternalError("no sunflower found above the guaranteed threshold");
            break;
        }
        out.kernel = std::move(reduced->graph);
        out.trace.append(reduced->trace);
    }

    Instance kernel_instance{out.kernel, inst.lower_bound, inst.initial};
    std::size_t cap = std::min(static_cast<std::size_t>(s), out.kernel.order());
    Solution sol = bfs_optimize(kernel_instance, cap, options.state_budget);
    out.yes = sol.size >= static_cast<std::size_t>(s);
    if (out.yes) {
        out.witness = sol.best;
        out.sequence = std::move(sol.witness);
    }
    return out;
}

Solution fpt_optimize(const Instance& inst, const FptOptions& options)
{
    validate_instance(inst);
    Solution sol;
    sol.algorithm = Algorithm::fpt;
    sol.best = inst.initial;
    sol.witness = ReconfSequence{{inst.initial}};
    for (std::size_t s = inst.initial.size() + 1; s <= inst.graph.order(); ++s) {
        auto decision = fpt_decide(ParamInstance{inst, static_cast<int>(s)}, options);
        if (!decision.yes)
            break;
        sol.best = *decision.witness;
        sol.witness = std::move(decision.sequence);
    }
    sol.size = sol.best.size();
    return sol;
}

} // namespace optisr
