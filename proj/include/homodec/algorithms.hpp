#pragma once

#include "homodec/relation.hpp"
#include "homodec/set_family.hpp"

namespace homodec {

// The unique inclusion-minimal homogeneous set containing S, grown from a
// worklist of splitters in O(n·|result|).
ElementSet shs(const Relation &r, const ElementSet &s);

struct MhsOptions {
    // Process classes, pivots and refining sets in reverse order. The
    // output family is the same either way (it is unique); the flag exists
    // so tests can assert that.
    bool reversed = false;
    // When non-null, receives the refinement work counter.
    long *ops_out = nullptr;
};

// The partition of V∖{x} into inclusion-maximal homogeneous sets avoiding
// x, via group-based partition refinement in O(n²). Canonical (sorted)
// family; empty when n <= 1.
SetFamily mhs(const Relation &r, Element x, const MhsOptions &options = {});

// Groups Z by the classes of H_y, pivot y ∉ Z; buckets appear in order of
// their first member, empty buckets absent. Cost O(|Z|).
std::vector<ElementSet> partition_by_pivot_classes(const ElementSet &z, Element y, const Relation &r);

// True iff the homogeneous-set family is {V} plus singletons: two mhs runs
// and one shs run, O(n²) total.
bool is_trivial(const Relation &r);

} // namespace homodec
