#pragma once

#include "optisr/graph.hpp"
#include "optisr/reconf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace optisr {

using BigInt = boost::multiprecision::cpp_int;

/// Opt-ISR instance with a target solution size: is some independent set of
/// size >= target reachable?
struct ParamInstance {
    Instance instance;
    int target = 0;
};

/// (2d+1)! * (2s+d)^(2d+1): above this many low-degree candidates a sunflower
/// with 2s+d+1 petals is guaranteed among their closed neighbourhoods.
BigInt f_threshold(int s, int d);

/// Vertices of current degree <= 2d that are not in `initial`.
VertexSet low_degree_candidates(const Graph& g, const VertexSet& initial, int d);

struct TraceEntry {
    enum class Reason { twin, sunflower };

    VertexId removed = 0;
    Reason reason = Reason::twin;
    VertexId partner = 0; // twin only
    VertexSet core;       // sunflower only
    VertexSet members;    // sunflower only
    std::size_t candidates_before = 0;
    std::size_t candidates_after = 0;
};

/// Audit log of kernelization removals, in order.
struct KernelTrace {
    std::vector<TraceEntry> entries;

    void append(const KernelTrace& other);
    /// One line per removal:
    ///   remove <id> twin <partner-id>
    ///   remove <id> sunflower core=<ids> members=<ids>
    /// with <ids> comma separated.
    std::string to_text() const;
};

struct Reduction {
    Graph graph;
    KernelTrace trace;
};

/// Removes closed twins among the low-degree candidates until none remain,
/// always deleting the larger id of a pair.
Reduction twin_reduce(const Graph& g, const VertexSet& initial, int d);

using OwnedSet = std::pair<VertexId, VertexSet>;

struct SunflowerFamily {
    VertexSet universe;
    std::vector<OwnedSet> sets;
    VertexSet core;
    VertexSet members; // owners of `sets`
    int petals = 0;
    int max_set_size = 0;
};

/// Pairwise intersections all equal the core. Since the sets are distinct,
/// at most one of them equals the core (an empty petal).
bool is_sunflower(const SunflowerFamily& family);

/// Erdős–Rado style search for a sunflower with `petals` sets among
/// `family`. Sets must be non-empty, distinct, and of size <= max_set_size.
/// Guaranteed to succeed when |family| > max_set_size! * (petals-1)^max_set_size.
std::optional<SunflowerFamily> find_sunflower(std::span<const OwnedSet> family, int petals, int max_set_size);

struct SunflowerReduction {
    Graph graph;
    KernelTrace trace;
    SunflowerFamily sunflower;
};

/// Looks for a (2s+d+1)-petal sunflower among closed neighbourhoods of the
/// low-degree candidates and deletes its smallest member. Candidates sharing
/// a closed neighbourhood contribute one set, owned by the smallest id.
/// Returns nullopt when no sunflower is found.
std::optional<SunflowerReduction> sunflower_reduce(const Graph& g, const VertexSet& initial, int s, int d);

struct FptOptions {
    /// Caps the kernel-size threshold below f(s,d) so reductions run on
    /// small inputs. Never raises it.
    std::optional<std::size_t> threshold_override;
    std::size_t state_budget = kDefaultStateBudget;
};

struct FptDecision {
    bool yes = false;
    std::optional<VertexSet> witness;
    std::optional<ReconfSequence> sequence;
    Graph kernel;
    KernelTrace trace;
    int degeneracy = 0;
};

/// Fixed-parameter decision in s + d: twin and sunflower reductions down to
/// a kernel, then bounded breadth-first search with cap s on the kernel.
FptDecision fpt_decide(const ParamInstance& pinst, const FptOptions& options = {});

/// Largest s with a yes answer, scanning upward from |initial|.
Solution fpt_optimize(const Instance& inst, const FptOptions& options = {});

} // namespace optisr
