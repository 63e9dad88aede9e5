#include "homodec/set_family.hpp"

#include <algorithm>

namespace homodec {

SetFamily::SetFamily(std::vector<ElementSet> sets) : sets_(std::move(sets)) {
    for (const ElementSet &s : sets_)
        total_size_ += static_cast<std::size_t>(s.size());
}

void SetFamily::add(ElementSet set) {
    total_size_ += static_cast<std::size_t>(set.size());
    sets_.push_back(std::move(set));
}

void SetFamily::canonicalize() {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    total_size_ = 0;
    for (const ElementSet &s : sets_)
        total_size_ += static_cast<std::size_t>(s.size());
}

bool SetFamily::contains(const ElementSet &set) const {
    return std::binary_search(sets_.begin(), sets_.end(), set);
}

} // namespace homodec
