#pragma once

#include "homodec/element_set.hpp"

#include <cstddef>
#include <vector>

namespace homodec {

// A collection of ElementSets with total-size accounting. Canonical form:
// sets sorted lexicographically, duplicates removed.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<ElementSet> sets);

    void add(ElementSet set);
    void canonicalize();

    std::size_t count() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    std::size_t total_size() const { return total_size_; }

    const ElementSet &operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<ElementSet> &sets() const { return sets_; }
    std::vector<ElementSet>::const_iterator begin() const { return sets_.begin(); }
    std::vector<ElementSet>::const_iterator end() const { return sets_.end(); }

    bool contains(const ElementSet &set) const; // canonical form only

    bool operator==(const SetFamily &other) const { return sets_ == other.sets_; }
    bool operator!=(const SetFamily &other) const { return sets_ != other.sets_; }

private:
    std::vector<ElementSet> sets_;
    std::size_t total_size_ = 0;
};

} // namespace homodec
