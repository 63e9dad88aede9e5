#include "homodec/bimodule.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "homodec/errors.hpp"
#include "homodec/oracle.hpp"

#include <random>

using namespace homodec;
using namespace homodec::testing;

namespace {

// One black vertex 0, the edge 0-1, and an isolated white vertex 2.
Graph edge_and_isolated() {
    Graph g;
    g.kind = GraphKind::bipartite;
    g.n = 3;
    g.black = {0};
    g.edges = {{0, 1, 0}};
    return g;
}

Graph complete_bipartite_22() {
    Graph g;
    g.kind = GraphKind::bipartite;
    g.n = 4;
    g.black = {0, 1};
    g.edges = {{0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}};
    return g;
}

// The path 0-1-2-3 with black on the odd positions.
Graph alternating_path() {
    Graph g;
    g.kind = GraphKind::bipartite;
    g.n = 4;
    g.black = {1, 3};
    g.edges = {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}};
    return g;
}

// A closure violation report must always carry a checkable witness.
void require_valid_witness(const BimoduleInstance &inst, const ClosureReport &report) {
    REQUIRE_FALSE(report.holds);
    CHECK(inst.is_bimodule(report.witness_a));
    CHECK(inst.is_bimodule(report.witness_b));
    CHECK(report.witness_a.overlaps(report.witness_b));
    CHECK_FALSE(inst.is_bimodule(report.witness_a.set_union(report.witness_b)));
}

} // namespace

TEST_CASE("bimodule: splitters and membership on the single edge") {
    BimoduleInstance inst = from_bipartite_bimodular(edge_and_isolated());

    // The black vertex 0 sees white 1 but not white 2, so it splits {1,2}.
    CHECK(inst.splits(0, ElementSet(3, {1, 2})));
    CHECK(inst.splitters(ElementSet(3, {1, 2})) == ElementSet(3, {0}));
    CHECK_FALSE(inst.is_bimodule(ElementSet(3, {1, 2})));

    // {0,1} has only the isolated white vertex outside, and a white vertex
    // cannot split a single inside black one.
    CHECK(inst.splitters(ElementSet(3, {0, 1})).empty());
    CHECK(inst.is_bimodule(ElementSet(3, {0, 1})));

    CHECK(inst.is_bimodule(ElementSet::full(3)));
    CHECK_FALSE(inst.is_bimodule(ElementSet(3)));
}

TEST_CASE("bimodule: every nonempty subset of a complete bipartite graph is a bimodule") {
    Graph g = complete_bipartite_22();
    BimoduleInstance inst = from_bipartite_bimodular(g);
    for (std::uint32_t mask = 1; mask < 16; ++mask)
        CHECK(inst.is_bimodule(ElementSet::from_mask(4, mask)));
    CHECK(oracle::brute_bimodules(g).count() == 15);

    ClosureReport closure = check_union_closure(inst);
    CHECK(closure.holds);
    CHECK(closure.exhaustive);

    BimodularResult result = strong_bimodules(inst);
    CHECK(result.closure.holds);
    CHECK(result.strong == family_of(4, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}}));
    CHECK(result.strong == oracle::brute_strong_bimodules(g));
}

TEST_CASE("bimodule: the fast pipeline matches the oracle on the single edge") {
    Graph g = edge_and_isolated();
    BimoduleInstance inst = from_bipartite_bimodular(g);

    CHECK(maximal_bimodules_avoiding(inst, 0) == family_of(3, {{1}, {2}}));
    CHECK(maximal_bimodules_avoiding(inst, 1) == family_of(3, {{0, 2}}));
    CHECK(maximal_bimodules_avoiding(inst, 2) == family_of(3, {{0, 1}}));
    CHECK(bimodule_z_family(inst) == family_of(3, {{1}, {2}, {0, 1}, {0, 2}}));

    BimodularResult result = strong_bimodules(inst);
    CHECK(result.closure.holds);
    CHECK(result.strong == family_of(3, {{0}, {1}, {2}, {0, 1, 2}}));
    CHECK(result.strong == oracle::brute_strong_bimodules(g));
}

TEST_CASE("bimodule: smallest_bimodule returns the minimal superset of its seed") {
    BimoduleInstance path = from_bipartite_bimodular(alternating_path());
    CHECK(smallest_bimodule(path, ElementSet(4, {0})) == ElementSet(4, {0}));
    CHECK(smallest_bimodule(path, ElementSet(4, {0, 2})) == ElementSet(4, {0, 2, 3}));

    auto code_of = [&](auto &&run) {
        try {
            run();
        } catch (const Error &e) {
            return e.code();
        }
        return errc::parse_error; // unreachable when the call throws
    };
    CHECK(code_of([&] { smallest_bimodule(path, ElementSet(4)); }) == errc::empty_set);

    // Against the oracle: the result is the intersection of every bimodule
    // containing the seed, and growing the seed can only grow the result.
    std::mt19937_64 rng(61);
    for (int round = 0; round < 25; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = generate_bipartite(n, 0.4, rng());
        BimoduleInstance inst = from_bipartite_bimodular(g);
        SetFamily all = oracle::brute_bimodules(g);
        std::vector<Element> seed;
        for (Element v = 0; v < n; ++v)
            if (rng() & 1)
                seed.push_back(v);
        if (seed.empty())
            seed.push_back(static_cast<Element>(rng() % n));
        ElementSet s(n, seed);
        ElementSet grown = smallest_bimodule(inst, s);
        CHECK(inst.is_bimodule(grown));
        CHECK(s.is_subset_of(grown));
        for (const ElementSet &b : all)
            if (s.is_subset_of(b))
                CHECK(grown.is_subset_of(b));

        ElementSet larger = grown.set_union(ElementSet::single(n, static_cast<Element>(rng() % n)));
        CHECK(grown.is_subset_of(smallest_bimodule(inst, larger)));
    }
}

TEST_CASE("bimodule: maximal_bimodules_avoiding partitions the rest of the universe") {
    std::mt19937_64 rng(67);
    int closed_rounds = 0;
    for (int round = 0; round < 40; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = generate_bipartite(n, 0.5, rng());
        BimoduleInstance inst = from_bipartite_bimodular(g);
        if (!check_union_closure(inst).holds)
            continue; // the greedy sweep is only promised to be exact here
        ++closed_rounds;
        SetFamily all = oracle::brute_bimodules(g);
        for (Element x = 0; x < n; ++x) {
            SetFamily parts = maximal_bimodules_avoiding(inst, x);
            std::vector<int> cover(static_cast<std::size_t>(n), 0);
            for (const ElementSet &m : parts) {
                CHECK(inst.is_bimodule(m));
                CHECK_FALSE(m.contains(x));
                for (Element v : m)
                    ++cover[static_cast<std::size_t>(v)];
                // Maximal: no bimodule avoiding x strictly contains it.
                for (const ElementSet &b : all)
                    if (!b.contains(x) && m.is_subset_of(b))
                        CHECK(b == m);
            }
            for (Element v = 0; v < n; ++v)
                CHECK(cover[static_cast<std::size_t>(v)] == (v == x ? 0 : 1));
        }
    }
    CHECK(closed_rounds >= 10);
}

TEST_CASE("bimodule: the alternating path violates union closure") {
    Graph g = alternating_path();
    BimoduleInstance inst = from_bipartite_bimodular(g);

    CHECK(oracle::brute_bimodules(g) ==
          family_of(4, {{0}, {1}, {2}, {3}, {0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 1, 3}, {0, 2, 3},
                        {0, 1, 2, 3}}));

    // {0,1} and {1,2} are bimodules that overlap, yet {0,1,2} is split by 3.
    ClosureReport report = check_union_closure(inst);
    CHECK(report.exhaustive);
    require_valid_witness(inst, report);

    // The strong pipeline refuses instead of decomposing past the violation,
    // even though the brute-force strong family still exists.
    BimodularResult result = strong_bimodules(inst);
    CHECK_FALSE(result.closure.holds);
    CHECK(result.strong.empty());
    CHECK(oracle::brute_strong_bimodules(g) == family_of(4, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}}));
}

TEST_CASE("bimodule: a generated closure violation is reported with its witness") {
    Graph g = generate_bipartite(6, 0.5, 3);
    BimoduleInstance inst = from_bipartite_bimodular(g);
    ClosureReport report = check_union_closure(inst);
    CHECK(report.exhaustive);
    require_valid_witness(inst, report);
    CHECK(report.witness_a == ElementSet(6, {0, 1}));
    CHECK(report.witness_b == ElementSet(6, {1, 2}));
    CHECK(strong_bimodules(inst).strong.empty());
}

TEST_CASE("bimodule: large instances fall back to the sampled closure check") {
    Graph g;
    g.kind = GraphKind::bipartite;
    g.n = 14;
    for (Element b = 0; b < 7; ++b)
        g.black.push_back(b);
    for (Element b = 0; b < 7; ++b)
        for (Element w = 7; w < 14; ++w)
            g.edges.push_back({b, w, 0});
    BimoduleInstance inst = from_bipartite_bimodular(g);
    ClosureReport report = check_union_closure(inst);
    CHECK(report.holds);
    CHECK_FALSE(report.exhaustive);
}

TEST_CASE("bimodule: strong bimodules agree with the oracle whenever closure holds") {
    std::mt19937_64 rng(71);
    int closed = 0;
    int violated = 0;
    for (int round = 0; round < 60; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        double p = round % 2 == 0 ? 0.3 : 0.6;
        Graph g = generate_bipartite(n, p, rng());
        BimoduleInstance inst = from_bipartite_bimodular(g);
        BimodularResult result = strong_bimodules(inst);
        if (result.closure.holds) {
            ++closed;
            CHECK(result.strong == oracle::brute_strong_bimodules(g));
        } else {
            ++violated;
            require_valid_witness(inst, result.closure);
            CHECK(result.strong.empty());
        }
    }
    // The sweep must exercise both outcomes to mean anything.
    CHECK(closed >= 10);
    CHECK(violated >= 10);
}

TEST_CASE("bimodule: the exhaustive closure check agrees with a brute-force one") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 30; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = generate_bipartite(n, 0.5, rng());
        BimoduleInstance inst = from_bipartite_bimodular(g);
        SetFamily all = oracle::brute_bimodules(g);
        bool closed = true;
        for (std::size_t i = 0; i < all.count() && closed; ++i)
            for (std::size_t j = i + 1; j < all.count() && closed; ++j)
                if (all[i].overlaps(all[j]) && !all.contains(all[i].set_union(all[j])))
                    closed = false;
        CHECK(check_union_closure(inst).holds == closed);
    }
}

TEST_CASE("bimodule: non-bipartite input is rejected") {
    try {
        from_bipartite_bimodular(path_graph(3));
        FAIL("expected a throw");
    } catch (const Error &e) {
        CHECK(e.code() == errc::not_bipartite);
    }
}
