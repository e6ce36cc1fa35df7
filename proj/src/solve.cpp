#include "optisr/solve.hpp"

#include "optisr/chordal.hpp"
#include "optisr/errors.hpp"
#include "optisr/graph_algorithms.hpp"

namespace optisr {

namespace {

VertexSet exact_mis(const Graph& g)
{
    if (g.order() > kExactMisMaxVertices)
        throw SizeGuardExceeded("exact maximum independent set is limited to " +
            std::to_string(kExactMisMaxVertices) + " vertices");
    return maximum_independent_set_exact(g);
}

Solution attach_chordal_witness(Solution sol, const Instance& inst, std::size_t budget)
{
    auto reach = decide_reachable(inst, sol.best, budget);
    if (!reach.reachable)
        throw InternalError("chordal optimum " + sol.best.to_string() + " is not reachable");
    sol.witness = std::move(reach.witness);
    return sol;
}

} // namespace

Solution solve_lower_bound_zero(const Instance& inst)
{
    validate_instance(inst);
    if (inst.lower_bound != 0)
        throw InvalidInput("lower-bound-zero shortcut needs l = 0");
    Solution sol;
    sol.algorithm = Algorithm::shortcut_l0;
    sol.best = exact_mis(inst.graph);
    sol.size = sol.best.size();

    ReconfSequence seq{{inst.initial}};
    VertexSet current = inst.initial;
    for (VertexId v : inst.initial.set_difference(sol.best)) {
        current.erase(v);
        seq.steps.push_back(current);
    }
    for (VertexId v : sol.best.set_difference(inst.initial)) {
        current.insert(v);
        seq.steps.push_back(current);
    }
    sol.witness = std::move(seq);
    return sol;
}

Solution solve(const Instance& inst, const SolveOptions& options)
{
    validate_instance(inst);
    const std::size_t n = inst.graph.order();
    FptOptions fpt{options.kernel_threshold, options.state_budget};

    switch (options.mode) {
    case SolveMode::bfs:
        return bfs_optimize(inst, n, options.state_budget);
    case SolveMode::oracle:
        return oracle_optimize(inst, options.state_budget);
    case SolveMode::fpt:
        return fpt_optimize(inst, fpt);
    case SolveMode::chordal: {
        Solution sol = solve_chordal(inst);
        return options.emit_sequence ? attach_chordal_witness(std::move(sol), inst, options.state_budget) : sol;
    }
    case SolveMode::automatic:
        break;
    }

    if (inst.lower_bound == 0)
        return solve_lower_bound_zero(inst);
    if (lexbfs_peo(inst.graph)) {
        Solution sol = solve_chordal(inst);
        return options.emit_sequence ? attach_chordal_witness(std::move(sol), inst, options.state_budget) : sol;
    }
    try {
        return bfs_optimize(inst, n, options.state_budget);
    } catch (const StateBudgetExceeded&) {
        if (!options.target)
            throw;
    }
    return fpt_optimize(inst, fpt);
}

Decision decide(const Instance& inst, int target, const SolveOptions& options)
{
    validate_instance(inst);
    if (target < 0)
        throw InvalidInput("target size must be non-negative");
    const auto s = static_cast<std::size_t>(target);
    const std::size_t n = inst.graph.order();

    Decision out;
    auto from_solution = [&](Solution sol) {
        out.yes = sol.size >= s;
        if (out.yes) {
            out.witness = std::move(sol.best);
            out.sequence = std::move(sol.witness);
        }
        return out;
    };

    if (options.mode == SolveMode::fpt) {
        FptDecision fd = fpt_decide(ParamInstance{inst, target}, FptOptions{options.kernel_threshold, options.state_budget});
        out.yes = fd.yes;
        out.witness = std::move(fd.witness);
        out.sequence = std::move(fd.sequence);
        out.trace = std::move(fd.trace);
        return out;
    }
    if (inst.initial.size() >= s)
        return from_solution(Solution{inst.initial, inst.initial.size(), Algorithm::bfs, ReconfSequence{{inst.initial}}});

    const std::size_t cap = std::min(s, n);
    switch (options.mode) {
    case SolveMode::bfs:
        return from_solution(bfs_optimize(inst, cap, options.state_budget));
    case SolveMode::oracle:
    case SolveMode::chordal:
        return from_solution(solve(inst, options));
    case SolveMode::automatic:
    case SolveMode::fpt:
        break;
    }
    if (inst.lower_bound == 0 || lexbfs_peo(inst.graph))
        return from_solution(solve(inst, options));
    return from_solution(bfs_optimize(inst, cap, options.state_budget));
}

} // namespace optisr
