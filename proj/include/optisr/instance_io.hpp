#pragma once

#include "optisr/graph.hpp"
#include "optisr/reconf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace optisr {

/// Parsed instance file. `target` is set when the file carries an `s` line.
struct InstanceFile {
    Instance instance;
    std::optional<int> target;
};

/// Line-oriented format, in this order:
///   c <comment>            (anywhere)
///   p optisr <n> <m>
///   e <u> <v>              (m lines, ids in 1..n)
///   l <int>
///   s <int>                (optional)
///   i <id>*                (possibly empty)
/// Throws InvalidInput with the offending line number.
InstanceFile parse_instance(std::string_view text);

/// Inverse of parse_instance; requires vertex ids 1..n.
std::string serialize_instance(const Instance& inst, std::optional<int> target = std::nullopt);

/// One `t add <id>` or `t rm <id>` line per step after the first.
std::string serialize_witness(const ReconfSequence& seq);

/// `s OPTIMUM <size>`, `v <ids>`, one `t add|rm <id>` per witness step (when
/// `with_witness` and a witness exists), then `a <algorithm>`.
std::string serialize_solution(const Solution& sol, bool with_witness = true);

struct SequenceFile {
    ReconfSequence sequence;
    /// Final set announced by a `v` line, if any.
    std::optional<VertexSet> claimed_final;
};

/// Reads either explicit steps (`q <ids>` per set) or a solution file whose
/// `t` lines are replayed from inst.initial.
SequenceFile parse_sequence(std::string_view text, const Instance& inst);

/// MISR-to-Opt-ISR gadget: new vertex u = max id + 1 joined to every vertex
/// outside `target`, lower bound |initial| - 1. Both sets must be maximum
/// independent sets of `gp`.
Instance gen_misr_gadget(const Graph& gp, const VertexSet& target, const VertexSet& initial);

/// Erdős–Rényi G(n, p) with a greedy random initial set of size >= l.
Instance gen_random_instance(int n, double edge_probability, int l, std::uint64_t seed);

/// Random k-tree on vertices 1..n (chordal, degeneracy k).
Graph gen_chordal(int n, int k, std::uint64_t seed);

/// gen_chordal plus a random initial set of size >= l.
Instance gen_chordal_instance(int n, int k, int l, std::uint64_t seed);

} // namespace optisr
