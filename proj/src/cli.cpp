#include "optisr/cli.hpp"

#include "optisr/errors.hpp"
#include "optisr/instance_io.hpp"
#include "optisr/solve.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace optisr::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw InvalidInput("cannot write " + path);
}

SolveMode parse_mode(const std::string& name)
{
    if (name == "auto")
        return SolveMode::automatic;
    if (name == "bfs")
        return SolveMode::bfs;
    if (name == "chordal")
        return SolveMode::chordal;
    if (name == "fpt")
        return SolveMode::fpt;
    if (name == "oracle")
        return SolveMode::oracle;
    throw InvalidInput("unknown algorithm '" + name + "'");
}

std::uint64_t effective_seed(std::uint64_t flag_seed)
{
    const char* env = std::getenv("OPTISR_SEED");
    if (!env || !*env)
        return flag_seed;
    std::string_view text(env);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidInput("OPTISR_SEED is not an unsigned integer");
    return seed;
}

struct SolverFlags {
    std::string alg = "auto";
    bool emit_sequence = false;
    std::size_t state_budget = kDefaultStateBudget;
    std::optional<std::size_t> kernel_threshold;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--alg", alg, "Algorithm")
            ->check(CLI::IsMember({"auto", "bfs", "chordal", "fpt", "oracle"}));
        cmd.add_flag("--emit-sequence", emit_sequence, "Print the reconfiguration sequence as t lines");
        cmd.add_option("--state-budget", state_budget, "Maximum number of visited states");
        cmd.add_option("--kernel-threshold", kernel_threshold, "Cap on the kernel-size threshold f(s,d)");
    }

    SolveOptions options() const
    {
        SolveOptions o;
        o.mode = parse_mode(alg);
        o.state_budget = state_budget;
        o.emit_sequence = emit_sequence;
        o.kernel_threshold = kernel_threshold;
        return o;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Optimisation variant of independent set reconfiguration under token addition/removal"};
    app.name("optisr");
    app.require_subcommand(1);

    SolverFlags solve_flags;
    std::string solve_file;
    auto* solve_cmd = app.add_subcommand("solve", "Largest independent set reachable from the initial set");
    solve_flags.attach(*solve_cmd);
    solve_cmd->add_option("FILE", solve_file, "Instance file")->required();

    SolverFlags decide_flags;
    std::string decide_file;
    std::string trace_file;
    int target = 0;
    auto* decide_cmd = app.add_subcommand("decide", "Is a set of size >= S reachable?");
    decide_flags.attach(*decide_cmd);
    decide_cmd->add_option("--s", target, "Target size")->required();
    decide_cmd->add_option("--trace", trace_file, "Write the kernelization log (fpt only)");
    decide_cmd->add_option("FILE", decide_file, "Instance file")->required();

    std::string verify_file;
    std::string sequence_file;
    auto* verify_cmd = app.add_subcommand("verify", "Check a reconfiguration sequence");
    verify_cmd->add_option("FILE", verify_file, "Instance file")->required();
    verify_cmd->add_option("SEQFILE", sequence_file, "Sequence (q lines) or solution file (t lines)")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
    gen_cmd->require_subcommand(1);
    std::uint64_t seed = 1;
    std::string output;
    int n = 0;
    int k = 1;
    int lower = 0;
    double probability = 0.5;
    auto* random_cmd = gen_cmd->add_subcommand("random", "Erdős–Rényi graph with a random initial set");
    random_cmd->add_option("--n", n, "Vertices")->required();
    random_cmd->add_option("--p", probability, "Edge probability");
    random_cmd->add_option("--l", lower, "Lower bound");
    random_cmd->add_option("--seed", seed, "Seed (OPTISR_SEED overrides)");
    random_cmd->add_option("-o", output, "Output file");
    auto* chordal_cmd = gen_cmd->add_subcommand("chordal", "Random k-tree with a random initial set");
    chordal_cmd->add_option("--n", n, "Vertices")->required();
    chordal_cmd->add_option("--k", k, "Tree width of the k-tree");
    chordal_cmd->add_option("--l", lower, "Lower bound");
    chordal_cmd->add_option("--seed", seed, "Seed (OPTISR_SEED overrides)");
    chordal_cmd->add_option("-o", output, "Output file");
    std::string gadget_file;
    std::vector<int> gadget_target;
    auto* gadget_cmd = gen_cmd->add_subcommand("gadget", "MISR gadget from a graph, its i line and a target set");
    gadget_cmd->add_option("FILE", gadget_file, "Instance whose i line is the initial maximum independent set")
        ->required();
    gadget_cmd->add_option("--target", gadget_target, "Target maximum independent set")->required();
    gadget_cmd->add_option("-o", output, "Output file");

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(std::move(reversed_args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*solve_cmd) {
            InstanceFile file = parse_instance(read_file(solve_file));
            SolveOptions options = solve_flags.options();
            options.target = file.target;
            Solution sol = solve(file.instance, options);
            out << serialize_solution(sol, solve_flags.emit_sequence);
            return kOk;
        }
        if (*decide_cmd) {
            InstanceFile file = parse_instance(read_file(decide_file));
            Decision d = decide(file.instance, target, decide_flags.options());
            if (!trace_file.empty())
                write_output(trace_file, d.trace.to_text(), out);
            if (!d.yes) {
                out << "NO\n";
                return kNo;
            }
            out << "YES\nv";
            for (VertexId v : *d.witness)
                out << ' ' << v;
            out << '\n';
            if (decide_flags.emit_sequence && d.sequence)
                out << serialize_witness(*d.sequence);
            return kOk;
        }
        if (*verify_cmd) {
            InstanceFile file = parse_instance(read_file(verify_file));
            SequenceFile seq = parse_sequence(read_file(sequence_file), file.instance);
            SequenceCheck check = verify_sequence(file.instance, seq.sequence);
            if (check && seq.claimed_final && seq.sequence.steps.back() != *seq.claimed_final)
                check = SequenceCheck{false, seq.sequence.steps.size() - 1, "final set differs from the v line"};
            if (!check) {
                out << "REJECT " << *check.first_violation << '\n';
                err << "step " << *check.first_violation << ": " << check.reason << '\n';
                return kNo;
            }
            out << "ACCEPT\n";
            return kOk;
        }
        Instance inst;
        if (*random_cmd) {
            inst = gen_random_instance(n, probability, lower, effective_seed(seed));
        } else if (*chordal_cmd) {
            inst = gen_chordal_instance(n, k, lower, effective_seed(seed));
        } else {
            InstanceFile base = parse_instance(read_file(gadget_file));
            inst = gen_misr_gadget(base.instance.graph, VertexSet(gadget_target), base.instance.initial);
        }
        write_output(output, serialize_instance(inst), out);
        return kOk;
    } catch (const StateBudgetExceeded& e) {
        err << "optisr: " << e.what() << '\n';
        return kBudget;
    } catch (const SizeGuardExceeded& e) {
        err << "optisr: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidInput& e) {
        err << "optisr: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "optisr: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace optisr::cli
