#pragma once

#include "homodec/graph.hpp"
#include "homodec/set_family.hpp"

namespace homodec {

// The bimodule splitter structure of a bipartite graph: an outside black
// vertex splits a set when it distinguishes two inside white vertices, and
// symmetrically. This is not a ternary homogeneous relation (transitivity
// would collapse the color classes), so it feeds the strong-set pipeline
// through the family interface instead.
struct BimoduleInstance {
    int n = 0;
    ElementSet black;
    std::vector<std::vector<bool>> adj;

    bool is_black(Element v) const { return black.contains(v); }
    bool adjacent(Element u, Element v) const {
        return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }

    bool splits(Element s, const ElementSet &x) const;
    ElementSet splitters(const ElementSet &x) const;
    bool is_bimodule(const ElementSet &x) const; // nonempty and splitter-free
};

BimoduleInstance from_bipartite_bimodular(const Graph &g);

// The unique inclusion-minimal bimodule containing S (bimodules are closed
// under intersection unconditionally). Grown like the smallest homogeneous
// set, with one anchor per color, in O(n·|result|).
ElementSet smallest_bimodule(const BimoduleInstance &inst, const ElementSet &s);

// Greedy partition of V∖{x} into maximal bimodules avoiding x: grow each
// uncovered seed by absorbing any z whose smallest bimodule with the
// current set still avoids x. Exact when the family is closed under union
// of overlapping sets — the hypothesis check_union_closure tests.
SetFamily maximal_bimodules_avoiding(const BimoduleInstance &inst, Element x);

// ∪ₓ maximal_bimodules_avoiding(x), canonicalized.
SetFamily bimodule_z_family(const BimoduleInstance &inst);

struct ClosureReport {
    bool holds = true;
    bool exhaustive = false; // whole family checked vs. z-family proxy
    ElementSet witness_a, witness_b;
};

// Union-of-overlapping-sets closure, the hypothesis behind the strong-set
// machinery: exhaustive over all bimodules up to 12 elements, otherwise
// over the polynomial z-family.
ClosureReport check_union_closure(const BimoduleInstance &inst);

struct BimodularResult {
    ClosureReport closure;
    SetFamily strong; // meaningful only when closure.holds
};

// Strong bimodules via supports and atoms of the z-family's overlap
// classes plus the trivial sets. Refuses (empty result, closure.holds
// false) rather than decompose past a closure violation.
BimodularResult strong_bimodules(const BimoduleInstance &inst);

} // namespace homodec
