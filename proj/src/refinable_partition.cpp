#include "homodec/refinable_partition.hpp"

#include <cassert>

namespace homodec {

RefinablePartition::RefinablePartition(int universe, const std::vector<ElementSet> &classes)
    : universe_(universe),
      elem_prev_(static_cast<std::size_t>(universe), none),
      elem_next_(static_cast<std::size_t>(universe), none),
      class_of_(static_cast<std::size_t>(universe), none) {
    int prev = none;
    for (const ElementSet &cls : classes) {
        if (cls.empty())
            continue;
        int handle = static_cast<int>(head_.size());
        head_.push_back(none);
        tail_.push_back(none);
        size_.push_back(0);
        cls_prev_.push_back(prev);
        cls_next_.push_back(none);
        group_.push_back(0); // a single initial group
        buddy_.push_back(none);
        if (prev == none)
            first_class_ = handle;
        else
            cls_next_[static_cast<std::size_t>(prev)] = handle;
        prev = handle;
        ++class_count_;
        for (Element v : cls) {
            assert(class_of_[static_cast<std::size_t>(v)] == none);
            append_element(handle, v);
            ++element_count_;
        }
    }
}

std::vector<int> RefinablePartition::classes() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(class_count_));
    for (int c = first_class_; c != none; c = cls_next_[static_cast<std::size_t>(c)])
        out.push_back(c);
    return out;
}

std::vector<Element> RefinablePartition::members(int cls) const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size_[static_cast<std::size_t>(cls)]));
    for (Element v = head_[static_cast<std::size_t>(cls)]; v != none;
         v = elem_next_[static_cast<std::size_t>(v)])
        out.push_back(v);
    return out;
}

std::vector<ElementSet> RefinablePartition::to_sets() const {
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(class_count_));
    for (int c = first_class_; c != none; c = cls_next_[static_cast<std::size_t>(c)])
        out.emplace_back(universe_, members(c));
    return out;
}

int RefinablePartition::new_class_before(int cls) {
    int handle = static_cast<int>(head_.size());
    head_.push_back(none);
    tail_.push_back(none);
    size_.push_back(0);
    int left = cls_prev_[static_cast<std::size_t>(cls)];
    cls_prev_.push_back(left);
    cls_next_.push_back(cls);
    group_.push_back(group_[static_cast<std::size_t>(cls)]);
    buddy_.push_back(none);
    cls_prev_[static_cast<std::size_t>(cls)] = handle;
    if (left == none)
        first_class_ = handle;
    else
        cls_next_[static_cast<std::size_t>(left)] = handle;
    ++class_count_;
    return handle;
}

void RefinablePartition::unlink_class(int cls) {
    int left = cls_prev_[static_cast<std::size_t>(cls)];
    int right = cls_next_[static_cast<std::size_t>(cls)];
    if (left == none)
        first_class_ = right;
    else
        cls_next_[static_cast<std::size_t>(left)] = right;
    if (right != none)
        cls_prev_[static_cast<std::size_t>(right)] = left;
    --class_count_;
}

void RefinablePartition::detach_element(Element v) {
    auto vi = static_cast<std::size_t>(v);
    int cls = class_of_[vi];
    Element p = elem_prev_[vi], q = elem_next_[vi];
    if (p == none)
        head_[static_cast<std::size_t>(cls)] = q;
    else
        elem_next_[static_cast<std::size_t>(p)] = q;
    if (q == none)
        tail_[static_cast<std::size_t>(cls)] = p;
    else
        elem_prev_[static_cast<std::size_t>(q)] = p;
    --size_[static_cast<std::size_t>(cls)];
    class_of_[vi] = none;
}

void RefinablePartition::append_element(int cls, Element v) {
    auto vi = static_cast<std::size_t>(v);
    Element t = tail_[static_cast<std::size_t>(cls)];
    elem_prev_[vi] = t;
    elem_next_[vi] = none;
    if (t == none)
        head_[static_cast<std::size_t>(cls)] = v;
    else
        elem_next_[static_cast<std::size_t>(t)] = v;
    tail_[static_cast<std::size_t>(cls)] = v;
    class_of_[vi] = cls;
    ++size_[static_cast<std::size_t>(cls)];
}

std::vector<int> RefinablePartition::refine_by_set(const std::vector<Element> &r) {
    std::vector<int> touched; // origin classes that lost elements to a buddy
    for (Element v : r) {
        ++ops_;
        if (v < 0 || v >= universe_ || !contains(v))
            continue;
        int cls = class_of_[static_cast<std::size_t>(v)];
        if (buddy_[static_cast<std::size_t>(cls)] == none) {
            buddy_[static_cast<std::size_t>(cls)] = new_class_before(cls);
            touched.push_back(cls);
        }
        detach_element(v);
        append_element(buddy_[static_cast<std::size_t>(cls)], v);
    }
    // second scan: reset flags; undo "splits" that emptied their origin
    // (the class was contained in R, so nothing actually split)
    std::vector<int> created;
    for (int cls : touched) {
        int b = buddy_[static_cast<std::size_t>(cls)];
        buddy_[static_cast<std::size_t>(cls)] = none;
        if (size_[static_cast<std::size_t>(cls)] == 0) {
            for (Element v = head_[static_cast<std::size_t>(b)]; v != none;) {
                Element next = elem_next_[static_cast<std::size_t>(v)];
                ++ops_;
                detach_element(v);
                append_element(cls, v);
                v = next;
            }
            unlink_class(b);
        } else {
            created.push_back(b);
        }
    }
    return created;
}

std::vector<int> RefinablePartition::refine_by_set(const ElementSet &r) {
    return refine_by_set(r.members());
}

void RefinablePartition::advance_groups() {
    for (int c = first_class_; c != none; c = cls_next_[static_cast<std::size_t>(c)]) {
        ++ops_;
        group_[static_cast<std::size_t>(c)] = c;
    }
}

} // namespace homodec
