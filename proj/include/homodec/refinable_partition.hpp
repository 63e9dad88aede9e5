#pragma once

#include "homodec/element_set.hpp"

#include <vector>

namespace homodec {

// Ordered partition of a working subset of [0, universe) into classes kept
// in a doubly-linked list, supporting O(|R|) refining-set splits and group
// boundaries (the group of an element is the class it belonged to one
// refinement round ago). An operation counter tracks elementary work so the
// quadratic work bound can be asserted by tests.
class RefinablePartition {
public:
    static constexpr int none = -1;

    // Partition over the union of `classes`, in the given class order; all
    // classes start in a single group.
    RefinablePartition(int universe, const std::vector<ElementSet> &classes);

    int universe() const { return universe_; }
    int element_count() const { return element_count_; }
    int class_count() const { return class_count_; }

    bool contains(Element v) const { return class_of_[static_cast<std::size_t>(v)] != none; }
    int class_of(Element v) const { return class_of_[static_cast<std::size_t>(v)]; }
    int group_of_class(int cls) const { return group_[static_cast<std::size_t>(cls)]; }
    int class_size(int cls) const { return size_[static_cast<std::size_t>(cls)]; }

    // Class handles in list order.
    std::vector<int> classes() const;
    // Members of one class, in intrusive-list order.
    std::vector<Element> members(int cls) const;
    // The partition as sets, in class list order.
    std::vector<ElementSet> to_sets() const;

    // Split every class C properly overlapping R into C∩R — inserted as the
    // immediate predecessor of C — and C∖R (which stays in C's record).
    // Elements of R outside the working subset are ignored; classes fully
    // inside R are left untouched. Returns the handles of the new classes,
    // each a genuine split. Cost O(|R|).
    std::vector<int> refine_by_set(const std::vector<Element> &r);
    std::vector<int> refine_by_set(const ElementSet &r);

    // Align group boundaries with the current classes.
    void advance_groups();

    long ops() const { return ops_; }
    void count_ops(long k) { ops_ += k; }

private:
    int universe_;
    int element_count_ = 0;
    int class_count_ = 0;
    int first_class_ = none;

    // intrusive per-class element lists
    std::vector<Element> elem_prev_, elem_next_;
    std::vector<int> class_of_;

    // class records, indexed by handle (tombstoned when emptied)
    std::vector<Element> head_, tail_;
    std::vector<int> size_;
    std::vector<int> cls_prev_, cls_next_;
    std::vector<int> group_;
    std::vector<int> buddy_; // C∩R class during a refine pass, else none

    long ops_ = 0;

    int new_class_before(int cls);
    void unlink_class(int cls);
    void detach_element(Element v);
    void append_element(int cls, Element v);
};

} // namespace homodec
