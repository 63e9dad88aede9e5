#include "homodec/element_set.hpp"

#include "homodec/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace homodec {

namespace {
std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
}
} // namespace

ElementSet::ElementSet(int universe) : universe_(universe), bits_(word_count(universe), 0) {
    assert(universe >= 0);
}

ElementSet::ElementSet(int universe, std::initializer_list<Element> members)
    : ElementSet(universe, std::vector<Element>(members)) {}

ElementSet::ElementSet(int universe, std::vector<Element> members)
    : universe_(universe), members_(std::move(members)), bits_(word_count(universe), 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Element v : members_) {
        check_range(v);
        bits_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
}

ElementSet ElementSet::full(int universe) {
    std::vector<Element> all(static_cast<std::size_t>(universe));
    for (int v = 0; v < universe; ++v)
        all[static_cast<std::size_t>(v)] = v;
    return ElementSet(universe, std::move(all));
}

ElementSet ElementSet::single(int universe, Element v) {
    return ElementSet(universe, {v});
}

void ElementSet::check_range(Element v) const {
    if (v < 0 || v >= universe_)
        fail(errc::index_out_of_range,
             "element " + std::to_string(v) + " outside ground set of size " + std::to_string(universe_));
}

void ElementSet::insert(Element v) {
    check_range(v);
    if (contains(v))
        return;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
    bits_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void ElementSet::erase(Element v) {
    if (!contains(v))
        return;
    members_.erase(std::lower_bound(members_.begin(), members_.end(), v));
    bits_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

ElementSet ElementSet::set_union(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    std::vector<Element> out;
    out.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
}

ElementSet ElementSet::set_intersection(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    std::vector<Element> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
}

ElementSet ElementSet::set_difference(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    std::vector<Element> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
}

ElementSet ElementSet::set_symmetric_difference(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    std::vector<Element> out;
    std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(),
                                  other.members_.end(), std::back_inserter(out));
    return ElementSet(universe_, std::move(out));
}

ElementSet ElementSet::complement() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(universe_) - members_.size());
    for (int v = 0; v < universe_; ++v)
        if (!contains(v))
            out.push_back(v);
    return ElementSet(universe_, std::move(out));
}

bool ElementSet::is_subset_of(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w])
            return false;
    return true;
}

bool ElementSet::overlaps(const ElementSet &other) const {
    assert(universe_ == other.universe_);
    bool common = false, left = false, right = false;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        common = common || (bits_[w] & other.bits_[w]);
        left = left || (bits_[w] & ~other.bits_[w]);
        right = right || (~bits_[w] & other.bits_[w]);
        if (common && left && right)
            return true;
    }
    return false;
}

std::uint32_t ElementSet::to_mask() const {
    assert(universe_ <= 32);
    std::uint32_t mask = 0;
    for (Element v : members_)
        mask |= std::uint32_t{1} << v;
    return mask;
}

ElementSet ElementSet::from_mask(int universe, std::uint32_t mask) {
    std::vector<Element> out;
    for (int v = 0; v < universe; ++v)
        if (mask >> v & 1u)
            out.push_back(v);
    return ElementSet(universe, std::move(out));
}

std::string ElementSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

} // namespace homodec
