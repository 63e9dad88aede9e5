#pragma once

#include "homodec/element_set.hpp"
#include "homodec/set_family.hpp"

#include <vector>

namespace homodec {

// An equivalence class of the transitive closure of the overlap relation on
// a set family: its members, their union (the support), and the atoms — the
// coarsest partition of the support compatible with every member.
struct OverlapClass {
    std::vector<ElementSet> members;
    ElementSet support;
    std::vector<ElementSet> atoms;

    bool trivial() const { return members.size() == 1; }
};

// Groups a canonical family into overlap classes (union-find over pairwise
// tests, swept in order of set minima so disjoint tails are skipped) and
// computes each class's support and atoms. Classes are emitted sorted by
// support; members and atoms sorted lexicographically.
std::vector<OverlapClass> overlap_classes(const SetFamily &family);

// The atom partition alone: refine {support} by every member.
std::vector<ElementSet> atoms_of(const std::vector<ElementSet> &members, const ElementSet &support);

} // namespace homodec
