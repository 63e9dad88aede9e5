#pragma once

#include "homodec/graph.hpp"
#include "homodec/relation.hpp"
#include "homodec/set_family.hpp"

namespace homodec {
namespace oracle {

// Brute-force reference implementations: the ground truth the fast paths
// are tested against. Hard size guards throw TooLarge rather than running
// unboundedly; clarity beats speed throughout.

// All nonempty X ⊆ V with no splitter. Guard: n ≤ 20.
SetFamily enumerate_homogeneous_sets(const Relation &r);

// Derived from the full family by filtering. Guard: n ≤ 12.
ElementSet brute_shs(const Relation &r, const ElementSet &s);
SetFamily brute_mhs(const Relation &r, Element x);
SetFamily brute_strong_sets(const Relation &r);

// Members of `family` overlapping no other member.
SetFamily strong_members(const SetFamily &family);

// All bimodules of a bipartite graph / the strong ones. Guard: n ≤ 12.
SetFamily brute_bimodules(const Graph &g);
SetFamily brute_strong_bimodules(const Graph &g);

} // namespace oracle
} // namespace homodec
