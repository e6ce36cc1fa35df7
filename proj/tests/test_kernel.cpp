#include "brute_force.hpp"

#include "optisr/errors.hpp"
#include "optisr/graph_algorithms.hpp"
#include "optisr/kernel.hpp"

#include <doctest.h>

#include <random>

using namespace optisr;
using namespace optisr::testing;

namespace {

Graph p3() { return build_graph(3, {{1, 2}, {2, 3}}); }
Graph p4() { return build_graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph c4() { return build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Graph k3() { return build_graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
Graph star() { return build_graph(4, {{1, 2}, {1, 3}, {1, 4}}); }

Graph matching(int pairs)
{
    std::vector<Edge> edges;
    for (int i = 0; i < pairs; ++i)
        edges.emplace_back(2 * i + 1, 2 * i + 2);
    return build_graph(2 * pairs, edges);
}

std::vector<OwnedSet> owned(const std::vector<VertexSet>& sets)
{
    std::vector<OwnedSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        out.emplace_back(static_cast<VertexId>(i + 1), sets[i]);
    return out;
}

VertexSet random_independent(const Graph& g, std::mt19937_64& rng)
{
    VertexSet s;
    for (VertexId v : g.vertices()) {
        VertexSet t = s;
        t.insert(v);
        if (rng() % 2 && is_independent_set(g, t))
            s = t;
    }
    return s;
}

} // namespace

TEST_CASE("f_threshold")
{
    CHECK(f_threshold(1, 0) == 2);
    CHECK(f_threshold(1, 1) == 162);
    CHECK(f_threshold(2, 1) == 750);
    CHECK(f_threshold(3, 0) == 6);
    // (2*3+1)! * (2*10+3)^7
    CHECK(f_threshold(10, 3).str() == "17160320252880");
    CHECK_THROWS_AS(f_threshold(-1, 0), InvalidInput);
}

TEST_CASE("low_degree_candidates")
{
    CHECK(low_degree_candidates(p3(), {2}, 1) == VertexSet{1, 3});
    Graph k4_plus = build_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(low_degree_candidates(k4_plus, {}, 3) == VertexSet{1, 2, 3, 4, 5});
    std::vector<Edge> spokes;
    for (int v = 2; v <= 10; ++v)
        spokes.emplace_back(1, v);
    CHECK(low_degree_candidates(build_graph(10, spokes), {}, 1) == VertexSet{2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("twin_reduce examples")
{
    Reduction k = twin_reduce(k3(), {}, 2);
    CHECK(k.graph.vertices() == std::vector<VertexId>{1});
    CHECK(k.trace.to_text() == "remove 2 twin 1\nremove 3 twin 1\n");
    CHECK(k.trace.entries[0].candidates_before == 3);
    CHECK(k.trace.entries[0].candidates_after == 2);
    CHECK(twin_reduce(c4(), {}, 2).graph.order() == 4);
    CHECK(twin_reduce(c4(), {}, 2).trace.entries.empty());
    CHECK(twin_reduce(p3(), {}, 1).graph.order() == 3);
    // Vertices of the initial set are never removed.
    Reduction kept = twin_reduce(k3(), {3}, 2);
    CHECK(kept.graph.vertices() == std::vector<VertexId>{1, 3});
}

TEST_CASE("twin reduction preserves the optimum")
{
    std::mt19937_64 rng(31);
    int reduced = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = random_graph(1 + trial % 7, 0.55, rng);
        VertexSet init = random_independent(g, rng);
        int l = static_cast<int>(rng() % (init.size() + 1));
        int d = degeneracy_ordering(g).degeneracy;
        Reduction r = twin_reduce(g, init, d);
        reduced += r.trace.entries.empty() ? 0 : 1;
        CAPTURE(trial);
        REQUIRE(brute_optimum(r.graph, l, init) == brute_optimum(g, l, init));
        for (const auto& e : r.trace.entries)
            CHECK(closed_neighborhood(g, e.removed).contains(e.partner));
    }
    CHECK(reduced > 50);
}

TEST_CASE("find_sunflower examples")
{
    auto singletons = owned({{1}, {2}, {3}});
    auto a = find_sunflower(singletons, 3, 1);
    REQUIRE(a.has_value());
    CHECK(a->core.empty());
    CHECK(a->sets.size() == 3);

    auto fan = owned({{1, 2}, {1, 3}, {1, 4}});
    auto b = find_sunflower(fan, 3, 2);
    REQUIRE(b.has_value());
    CHECK(b->core == VertexSet{1});
    CHECK(b->members == VertexSet{1, 2, 3});
    CHECK(b->universe == VertexSet{1, 2, 3, 4});
    CHECK(is_sunflower(*b));

    // One set may coincide with the core.
    auto nested = owned({{1}, {1, 2}, {1, 3}});
    auto c = find_sunflower(nested, 3, 2);
    REQUIRE(c.has_value());
    CHECK(c->core == VertexSet{1});

    auto pair = owned({{1, 2}, {2, 3}});
    CHECK_FALSE(find_sunflower(pair, 3, 2).has_value());
}

TEST_CASE("find_sunflower input checks")
{
    auto dup = owned({{1, 2}, {1, 2}});
    CHECK_THROWS_AS(find_sunflower(dup, 2, 2), InvalidInput);
    auto empty = owned({{}, {1}});
    CHECK_THROWS_AS(find_sunflower(empty, 2, 2), InvalidInput);
    auto big = owned({{1, 2, 3}});
    CHECK_THROWS_AS(find_sunflower(big, 1, 2), InvalidInput);
    auto one = owned({{1}});
    CHECK_THROWS_AS(find_sunflower(one, 0, 1), InvalidInput);
}

TEST_CASE("find_sunflower only reports genuine sunflowers")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        int universe = 3 + trial % 5;
        int t = 1 + trial % 3;
        std::set<VertexSet> pool;
        std::size_t wanted = 2 + rng() % 9;
        for (int tries = 0; tries < 200 && pool.size() < wanted; ++tries) {
            std::vector<VertexId> ids;
            std::size_t size = 1 + rng() % static_cast<std::size_t>(t);
            for (std::size_t k = 0; k < size; ++k)
                ids.push_back(1 + static_cast<int>(rng() % static_cast<std::size_t>(universe)));
            VertexSet s(ids);
            pool.insert(s);
        }
        std::vector<VertexSet> sets(pool.begin(), pool.end());
        std::shuffle(sets.begin(), sets.end(), rng);
        std::size_t petals = 2 + rng() % 3;
        auto family = owned(sets);
        auto found = find_sunflower(family, static_cast<int>(petals), t);
        CAPTURE(trial);
        if (found) {
            CHECK(is_sunflower(*found));
            CHECK(found->sets.size() == petals);
        }
        if (!brute_sunflower_exists(sets, petals))
            CHECK_FALSE(found.has_value());
    }
}

TEST_CASE("find_sunflower succeeds above the guaranteed family size")
{
    // d = 0, s = 1: t = 1, p = 3, f = 2.
    for (int m = 3; m <= 8; ++m) {
        std::vector<VertexSet> sets;
        for (int v = 1; v <= m; ++v)
            sets.push_back({v});
        auto family = owned(sets);
        CHECK(find_sunflower(family, 3, 1).has_value());
    }
    // t = 2, p = 3: any 9 distinct sets of size <= 2. Includes families such
    // as {1,3}{1}{3,6}{3,4}{2,5}{5,6}{2,7}{1,4}{5,7} where the greedy disjoint
    // pass stalls at two sets.
    std::mt19937_64 rng(43);
    std::vector<VertexSet> all;
    for (int u = 1; u <= 7; ++u) {
        all.push_back({u});
        for (int v = u + 1; v <= 7; ++v)
            all.push_back({u, v});
    }
    for (int trial = 0; trial < 2000; ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<VertexSet> sets(all.begin(), all.begin() + 9);
        auto family = owned(sets);
        CAPTURE(trial);
        REQUIRE(find_sunflower(family, 3, 2).has_value());
    }
}

TEST_CASE("sunflower_reduce examples")
{
    auto edgeless = sunflower_reduce(build_graph(8, {}), {}, 1, 0);
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->graph.order() == 7);
    CHECK_FALSE(edgeless->graph.has_vertex(1));
    CHECK(edgeless->trace.to_text() == "remove 1 sunflower core= members=1,2,3\n");
    CHECK(brute_optimum(edgeless->graph, 0, {}) >= 1);

    CHECK_FALSE(sunflower_reduce(c4(), {}, 2, 2).has_value());

    auto m = sunflower_reduce(matching(5), {}, 1, 1);
    REQUIRE(m.has_value());
    CHECK(m->sunflower.core.empty());
    CHECK(m->sunflower.members == VertexSet{1, 3, 5, 7});
    CHECK(m->graph.order() == 9);
    CHECK(brute_optimum(m->graph, 0, {}) == 5);
    CHECK(brute_optimum(matching(5), 0, {}) == 5);
}

TEST_CASE("fpt_decide examples")
{
    FptDecision a = fpt_decide({{p4(), 1, {2}}, 2});
    CHECK(a.yes);
    CHECK(*a.witness == VertexSet{2, 4});
    CHECK(a.degeneracy == 1);
    REQUIRE(a.sequence.has_value());
    CHECK(verify_sequence({p4(), 1, {2}}, *a.sequence).accepted);

    CHECK_FALSE(fpt_decide({{star(), 1, {1}}, 2}).yes);

    Graph edgeless = build_graph(5, {});
    FptDecision c = fpt_decide({{edgeless, 1, {1, 2, 3}}, 3});
    CHECK(c.yes);
    CHECK(*c.witness == VertexSet{1, 2, 3});
    CHECK(fpt_decide({{p3(), 1, {2}}, 1}).yes);
    CHECK_THROWS_AS(fpt_decide({{p3(), 1, {2}}, -1}), InvalidInput);
}

TEST_CASE("fpt_decide with forced reductions agrees with brute force")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 600; ++trial) {
        Graph g = random_graph(2 + trial % 6, 0.2 + 0.1 * (trial % 5), rng);
        VertexSet init = random_independent(g, rng);
        int l = static_cast<int>(rng() % (init.size() + 1));
        int s = 1 + static_cast<int>(rng() % 4);
        bool expected = brute_optimum(g, l, init) >= static_cast<std::size_t>(s);
        for (std::optional<std::size_t> cap : {std::optional<std::size_t>{}, std::optional<std::size_t>{0}}) {
            FptDecision d = fpt_decide({{g, l, init}, s}, {cap, kDefaultStateBudget});
            CAPTURE(trial);
            REQUIRE(d.yes == expected);
            if (d.yes) {
                CHECK(verify_sequence({g, l, init}, *d.sequence).accepted);
                CHECK(d.witness->size() >= static_cast<std::size_t>(s));
            }
            for (const auto& e : d.trace.entries)
                CHECK_FALSE(init.contains(e.removed));
        }
    }
}

TEST_CASE("fpt_optimize")
{
    CHECK(fpt_optimize({p3(), 1, {2}}).size == 1);
    Solution b = fpt_optimize({p4(), 1, {2}});
    CHECK(b.size == 2);
    CHECK(b.algorithm == Algorithm::fpt);
    CHECK(verify_sequence({p4(), 1, {2}}, *b.witness).accepted);
    CHECK(fpt_optimize({build_graph(5, {}), 0, {}}).size == 5);
}

TEST_CASE("fpt_decide matches capped bfs on every instance with at most 6 vertices")
{
    std::size_t decisions = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t code = 0; code < graph_count(n); ++code) {
            Graph g = graph_from_code(n, code);
            for (const auto& init : all_independent_sets(g))
                for (int l = 0; l <= 2 && l <= static_cast<int>(init.size()); ++l) {
                    Instance inst{g, l, init};
                    for (int s = static_cast<int>(init.size()) + 1; s <= 4 && s <= n; ++s) {
                        bool expected = bfs_optimize(inst, static_cast<std::size_t>(s)).size >= static_cast<std::size_t>(s);
                        ++decisions;
                        if (fpt_decide({inst, s}).yes != expected) {
                            CAPTURE(code);
                            CAPTURE(l);
                            CAPTURE(s);
                            FAIL("fpt and bfs disagree");
                        }
                    }
                }
        }
    CHECK(decisions > 100000);
}

TEST_CASE("fpt_optimize equals the oracle on sparse random instances")
{
    std::mt19937_64 rng(59);
    int done = 0;
    while (done < 500) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.25, rng);
        if (degeneracy_ordering(g).degeneracy > 2)
            continue;
        VertexSet init = random_independent(g, rng);
        int l = static_cast<int>(rng() % (init.size() + 1));
        Instance inst{g, l, init};
        Solution s = fpt_optimize(inst);
        CAPTURE(done);
        REQUIRE(s.size == oracle_optimize(inst).size);
        CHECK(verify_sequence(inst, *s.witness).accepted);
        ++done;
    }
}
