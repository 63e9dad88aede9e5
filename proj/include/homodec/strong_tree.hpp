#pragma once

#include "homodec/overlap.hpp"
#include "homodec/relation.hpp"
#include "homodec/set_family.hpp"

#include <string>
#include <vector>

namespace homodec {

enum class NodeKind { leaf, prime, degenerate, linear, unclassified };

const char *node_kind_name(NodeKind kind);

struct StrongTreeNode {
    ElementSet members;
    NodeKind kind = NodeKind::unclassified;
    int parent = -1;
    std::vector<int> children; // node ids, sorted by minimum member
    std::vector<int> order;    // linear nodes: children ids in linear order
};

// Inclusion tree of a laminar family containing V and all singletons;
// nodes[0] is the root, leaves are the singletons.
struct StrongTree {
    std::vector<StrongTreeNode> nodes;

    int root() const { return 0; }
    std::size_t size() const { return nodes.size(); }
    const StrongTreeNode &node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
};

struct ZFamilyOptions {
    int threads = 1; // mhs calls are independent; >1 fans them out
};

// ∪ₓ mhs(x), canonicalized: the maximal homogeneous sets containing one
// element but not another. Total size O(n²).
SetFamily z_family(const Relation &r, const ZFamilyOptions &options = {});

// Supports and atoms of the overlap classes of the z-family, plus the
// trivial strong sets (V and singletons), deduplicated: exactly the strong
// homogeneous sets.
SetFamily strong_sets(const Relation &r, const ZFamilyOptions &options = {});

// Inclusion tree of a laminar family containing V and every singleton.
// Throws OverlappingSets when two input sets overlap.
StrongTree build_tree(const SetFamily &strong);

// Classifies internal nodes as prime / degenerate / linear by testing
// pairwise child unions through one representative per child (sound under
// A2, which the caller asserts). Nodes whose homogeneous-pair graph fits no
// shape become unclassified, or throw NotWeaklyPartitive when strict.
// Two-child nodes are degenerate by convention.
void type_nodes(StrongTree &tree, const Relation &r, bool strict = false);

// Deterministic serializations: children ordered by minimum member, linear
// order listed as each child's minimum member.
std::string tree_to_json(const StrongTree &tree);
std::string tree_to_outline(const StrongTree &tree);

} // namespace homodec
