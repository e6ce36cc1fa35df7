#include "optisr/instance_io.hpp"

#include "optisr/errors.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace optisr {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what)
{
    throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
}

int to_int(std::string_view word, std::size_t line_no)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        fail(line_no, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        auto words = split_words(text.substr(pos, end - pos));
        if (!words.empty() && words[0] != "c")
            fn(line_no, words);
        pos = end + 1;
    }
}

VertexSet read_ids(const std::vector<std::string_view>& words, std::size_t first, std::size_t line_no)
{
    std::vector<VertexId> ids;
    for (std::size_t k = first; k < words.size(); ++k)
        ids.push_back(to_int(words[k], line_no));
    VertexSet set(ids);
    if (set.size() != ids.size())
        fail(line_no, "repeated vertex id");
    return set;
}

} // namespace

InstanceFile parse_instance(std::string_view text)
{
    enum class Stage { header, edges, lower_bound, target, done };
    Stage stage = Stage::header;
    int n = 0;
    int m = 0;
    int lower = 0;
    std::optional<int> target;
    VertexSet initial;
    std::vector<Edge> edges;

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& w) {
        const std::string_view kind = w[0];
        if (kind == "p") {
            if (stage != Stage::header)
                fail(line_no, "duplicate or misplaced problem line");
            if (w.size() != 4 || w[1] != "optisr")
                fail(line_no, "expected 'p optisr <n> <m>'");
            n = to_int(w[2], line_no);
            m = to_int(w[3], line_no);
            if (n < 0 || m < 0)
                fail(line_no, "negative vertex or edge count");
            stage = Stage::edges;
        } else if (kind == "e") {
            if (stage != Stage::edges)
                fail(line_no, "edge line outside the edge section");
            if (w.size() != 3)
                fail(line_no, "expected 'e <u> <v>'");
            int u = to_int(w[1], line_no);
            int v = to_int(w[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                fail(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            if (u == v)
                fail(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(u, v);
        } else if (kind == "l") {
            if (stage != Stage::edges)
                fail(line_no, "misplaced lower bound line");
            if (w.size() != 2)
                fail(line_no, "expected 'l <int>'");
            if (edges.size() != static_cast<std::size_t>(m))
                fail(line_no, "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
            lower = to_int(w[1], line_no);
            if (lower < 0)
                fail(line_no, "lower bound must be non-negative");
            stage = Stage::lower_bound;
        } else if (kind == "s") {
            if (stage != Stage::lower_bound)
                fail(line_no, "misplaced target size line");
            if (w.size() != 2)
                fail(line_no, "expected 's <int>'");
            target = to_int(w[1], line_no);
            if (*target < 0)
                fail(line_no, "target size must be non-negative");
            stage = Stage::target;
        } else if (kind == "i") {
            if (stage != Stage::lower_bound && stage != Stage::target)
                fail(line_no, "misplaced initial set line");
            initial = read_ids(w, 1, line_no);
            for (VertexId v : initial)
                if (v < 1 || v > n)
                    fail(line_no, "vertex id " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
            stage = Stage::done;
        } else {
            fail(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    });
    if (stage != Stage::done)
        throw InvalidInput("incomplete instance: expected p, e*, l, optional s, and i lines");

    InstanceFile file{Instance{build_graph(n, edges), lower, std::move(initial)}, target};
    validate_instance(file.instance);
    return file;
}

std::string serialize_instance(const Instance& inst, std::optional<int> target)
{
    const auto& ids = inst.graph.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<VertexId>(i + 1))
            throw InvalidInput("instance files need vertex ids 1..n");
    std::ostringstream os;
    os << "p optisr " << inst.graph.order() << ' ' << inst.graph.edge_count() << '\n';
    for (auto [u, v] : inst.graph.edges())
        os << "e " << u << ' ' << v << '\n';
    os << "l " << inst.lower_bound << '\n';
    if (target)
        os << "s " << *target << '\n';
    os << 'i';
    for (VertexId v : inst.initial)
        os << ' ' << v;
    os << '\n';
    return os.str();
}

std::string serialize_witness(const ReconfSequence& seq)
{
    std::ostringstream os;
    const auto& steps = seq.steps;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        for (VertexId v : steps[i].set_difference(steps[i - 1]))
            os << "t add " << v << '\n';
        for (VertexId v : steps[i - 1].set_difference(steps[i]))
            os << "t rm " << v << '\n';
    }
    return os.str();
}

std::string serialize_solution(const Solution& sol, bool with_witness)
{
    std::ostringstream os;
    os << "s OPTIMUM " << sol.size << '\n';
    os << 'v';
    for (VertexId v : sol.best)
        os << ' ' << v;
    os << '\n';
    if (with_witness && sol.witness)
        os << serialize_witness(*sol.witness);
    os << "a " << to_string(sol.algorithm) << '\n';
    return os.str();
}

SequenceFile parse_sequence(std::string_view text, const Instance& inst)
{
    SequenceFile out;
    bool explicit_steps = false;
    bool replayed = false;
    VertexSet current = inst.initial;

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& w) {
        const std::string_view kind = w[0];
        if (kind == "q") {
            if (replayed)
                fail(line_no, "cannot mix 'q' and 't' lines");
            explicit_steps = true;
            out.sequence.steps.push_back(read_ids(w, 1, line_no));
        } else if (kind == "t") {
            if (explicit_steps)
                fail(line_no, "cannot mix 'q' and 't' lines");
            if (w.size() != 3 || (w[1] != "add" && w[1] != "rm"))
                fail(line_no, "expected 't add|rm <id>'");
            if (!replayed)
                out.sequence.steps.push_back(current);
            replayed = true;
            VertexId v = to_int(w[2], line_no);
            if (w[1] == "add")
                current.insert(v);
            else
                current.erase(v);
            out.sequence.steps.push_back(current);
        } else if (kind == "v") {
            out.claimed_final = read_ids(w, 1, line_no);
        } else if (kind == "s" || kind == "a") {
            // size and algorithm lines of a solution file carry no steps
        } else {
            fail(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    });
    if (!explicit_steps && !replayed)
        out.sequence.steps.push_back(inst.initial);
    return out;
}

} // namespace optisr
