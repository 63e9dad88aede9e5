#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace homodec {

using Element = int;

// Subset of a ground set [0, n). Members are kept sorted, so iteration is
// proportional to size and comparisons are lexicographic; a bitmap gives
// O(1) membership tests.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe);
    ElementSet(int universe, std::initializer_list<Element> members);
    ElementSet(int universe, std::vector<Element> members);

    static ElementSet full(int universe);
    static ElementSet single(int universe, Element v);

    int universe() const { return universe_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(Element v) const {
        return v >= 0 && v < universe_ && (bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1u);
    }

    void insert(Element v);
    void erase(Element v);

    const std::vector<Element> &members() const { return members_; }
    std::vector<Element>::const_iterator begin() const { return members_.begin(); }
    std::vector<Element>::const_iterator end() const { return members_.end(); }
    Element min() const { return members_.front(); }

    ElementSet set_union(const ElementSet &other) const;
    ElementSet set_intersection(const ElementSet &other) const;
    ElementSet set_difference(const ElementSet &other) const;
    ElementSet set_symmetric_difference(const ElementSet &other) const;
    ElementSet complement() const;

    bool is_subset_of(const ElementSet &other) const;
    // A and B overlap when A∩B, A∖B and B∖A are all nonempty.
    bool overlaps(const ElementSet &other) const;

    bool operator==(const ElementSet &other) const { return members_ == other.members_; }
    bool operator!=(const ElementSet &other) const { return members_ != other.members_; }
    // Lexicographic on the sorted member list; the canonical family order.
    bool operator<(const ElementSet &other) const { return members_ < other.members_; }

    std::uint32_t to_mask() const; // universe must fit in 32 bits
    static ElementSet from_mask(int universe, std::uint32_t mask);

    std::string to_string() const;

private:
    int universe_ = 0;
    std::vector<Element> members_;
    std::vector<std::uint64_t> bits_;

    void check_range(Element v) const;
};

} // namespace homodec
