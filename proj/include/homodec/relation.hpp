#pragma once

#include "homodec/element_set.hpp"
#include "homodec/set_family.hpp"

#include <vector>

namespace homodec {

// A homogeneous relation on a ground set of n elements: for each element s,
// an equivalence relation on the other n-1 elements, stored as a dense table
// of class ids. holds(s,x,y) is a single table comparison. Immutable after
// construction; concurrent reads are safe.
class Relation {
public:
    // `partitions[s]` lists the classes of element s as a partition of
    // V∖{s}. Rejects non-partitions.
    static Relation from_partitions(int n, const std::vector<std::vector<std::vector<Element>>> &partitions);

    int size() const { return n_; }

    // Class id of x as seen by s; requires s != x. Ids are dense from 0 for
    // each s.
    int class_id(Element s, Element x) const { return table_[index(s, x)]; }
    int class_count(Element s) const { return class_count_[static_cast<std::size_t>(s)]; }

    // H(s|xy) on reflectless triples; x == y is true by reflexivity.
    bool holds(Element s, Element x, Element y) const;

    // The classes of H_s as sets, in class-id order.
    std::vector<ElementSet> classes_of(Element s) const;

    bool operator==(const Relation &other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    int n_ = 0;
    std::vector<int> table_; // n*n ints; table_[s*n+x], diagonal unused (-1)
    std::vector<int> class_count_;

    std::size_t index(Element s, Element x) const {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
    }

    friend class RelationBuilder;
};

// Incremental construction used by the instance builders: assign class ids
// directly, then finish() checks totality and densifies ids.
class RelationBuilder {
public:
    explicit RelationBuilder(int n);
    void set_class(Element s, Element x, int class_id);
    Relation finish();

private:
    int n_;
    std::vector<int> table_;
};

ElementSet splitters(const Relation &r, const ElementSet &x);
// |splitters(X)|, with the convention splitter_count(∅) = -n.
int splitter_count(const Relation &r, const ElementSet &x);
bool is_homogeneous_set(const Relation &r, const ElementSet &x);

// Induced relation on a nonempty subset, with the re-indexing map back to
// the parent ground set.
struct RestrictedRelation {
    Relation relation;
    std::vector<Element> original_index; // new index -> parent element
};
RestrictedRelation restrict_to(const Relation &r, const ElementSet &x);

// Partition of V into homogeneous sets, the shape quotient() accepts.
class CongruencePartition {
public:
    CongruencePartition(int universe, std::vector<ElementSet> parts);
    const std::vector<ElementSet> &parts() const { return parts_; }
    std::size_t count() const { return parts_.size(); }

private:
    std::vector<ElementSet> parts_;
};

// Quotient relation on the parts of p, evaluated through the minimum-index
// representative of each part. Sound independently of the representative
// choice exactly when the relation satisfies A2; verify_representatives
// additionally checks that independence and throws part_not_homogeneous on
// a part whose members disagree.
Relation quotient(const Relation &r, const CongruencePartition &p, bool verify_representatives = false);

// True iff both relations define the same per-element partitions, ignoring
// how class ids are numbered.
bool equivalent_relations(const Relation &a, const Relation &b);

} // namespace homodec
