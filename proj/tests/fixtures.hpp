#pragma once

#include "homodec/graph.hpp"
#include "homodec/instances.hpp"
#include "homodec/relation.hpp"
#include "homodec/set_family.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace homodec::testing {

// Paw graph: triangle 0-1-2 with a pendant 3 attached to 2. Vertex 2 is
// universal, so {0,1,3} is homogeneous alongside the twin pair {0,1} — the
// smallest graph whose family has two nested nontrivial members. Most
// frozen expectations below derive from it.
inline Graph paw_graph() {
    Graph g;
    g.kind = GraphKind::undirected;
    g.n = 4;
    g.edges = {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}, {2, 3, 0}};
    return g;
}

inline Relation paw_relation() { return from_undirected(paw_graph()); }

inline Graph path_graph(int n) {
    Graph g;
    g.kind = GraphKind::undirected;
    g.n = n;
    for (Element v = 0; v + 1 < n; ++v)
        g.edges.push_back({v, v + 1, 0});
    return g;
}

inline Graph complete_graph(int n) {
    Graph g;
    g.kind = GraphKind::undirected;
    g.n = n;
    for (Element u = 0; u < n; ++u)
        for (Element v = u + 1; v < n; ++v)
            g.edges.push_back({u, v, 0});
    return g;
}

// Arcs u -> v for all u < v: the homogeneous sets are exactly the
// intervals of the vertex order.
inline Graph transitive_tournament(int n) {
    Graph g;
    g.kind = GraphKind::directed;
    g.n = n;
    for (Element u = 0; u < n; ++u)
        for (Element v = u + 1; v < n; ++v)
            g.edges.push_back({u, v, 0});
    return g;
}

inline Graph directed_cycle(int n) {
    Graph g;
    g.kind = GraphKind::directed;
    g.n = n;
    for (Element v = 0; v < n; ++v)
        g.edges.push_back({v, (v + 1) % n, 0});
    return g;
}

// Hub-and-spokes relation on 4 elements: the hub 0 separates all spokes,
// every spoke sees the rest as one class. The family is {0} paired with
// every subset of spokes, plus spoke singletons and V; its nontrivial
// members pairwise overlap in exactly {0}, so the union/intersection side
// of closure holds while both difference directions fail — a compact
// not-weakly-partitive specimen whose tree root fits no node shape.
inline Relation star_relation() {
    return Relation::from_partitions(4, {{{1}, {2}, {3}}, //
                                         {{0, 2, 3}},
                                         {{0, 1, 3}},
                                         {{0, 1, 2}}});
}

// Arbitrary per-element partitions: class ids drawn uniformly from
// [0, max_classes). Exercises relations far outside the graph-derived
// families (no axiom is guaranteed).
inline Relation random_relation(std::mt19937_64 &rng, int n, int max_classes) {
    RelationBuilder builder(n);
    for (Element s = 0; s < n; ++s)
        for (Element x = 0; x < n; ++x)
            if (x != s)
                builder.set_class(s, x, static_cast<int>(rng() % static_cast<std::uint64_t>(max_classes)));
    return builder.finish();
}

// Each ordered pair carries an arc independently with probability 1/2.
inline Graph random_digraph(std::mt19937_64 &rng, int n) {
    Graph g;
    g.kind = GraphKind::directed;
    g.n = n;
    for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
            if (u != v && (rng() & 1))
                g.edges.push_back({u, v, 0});
    return g;
}

inline SetFamily family_of(int universe, const std::vector<std::vector<Element>> &sets) {
    SetFamily family;
    for (const std::vector<Element> &s : sets)
        family.add(ElementSet(universe, s));
    family.canonicalize();
    return family;
}

} // namespace homodec::testing
