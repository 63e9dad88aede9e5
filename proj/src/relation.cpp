#include "homodec/relation.hpp"

#include "homodec/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace homodec {

Relation Relation::from_partitions(int n, const std::vector<std::vector<std::vector<Element>>> &partitions) {
    if (n < 1)
        throw std::invalid_argument("ground set must have at least one element");
    if (static_cast<int>(partitions.size()) != n)
        fail(errc::element_missing, "expected " + std::to_string(n) + " per-element partitions, got " +
                                        std::to_string(partitions.size()));
    RelationBuilder builder(n);
    for (Element s = 0; s < n; ++s) {
        std::vector<bool> assigned(static_cast<std::size_t>(n), false);
        int next_id = 0;
        for (const std::vector<Element> &cls : partitions[static_cast<std::size_t>(s)]) {
            if (cls.empty())
                continue;
            for (Element x : cls) {
                if (x < 0 || x >= n)
                    fail(errc::index_out_of_range, "element " + std::to_string(x) +
                                                       " outside ground set in partition of " + std::to_string(s));
                if (x == s)
                    fail(errc::self_in_class,
                         "element " + std::to_string(s) + " appears in its own partition", s);
                if (assigned[static_cast<std::size_t>(x)])
                    fail(errc::element_repeated, "element " + std::to_string(x) +
                                                     " assigned twice in partition of " + std::to_string(s),
                         x);
                assigned[static_cast<std::size_t>(x)] = true;
                builder.set_class(s, x, next_id);
            }
            ++next_id;
        }
        for (Element x = 0; x < n; ++x)
            if (x != s && !assigned[static_cast<std::size_t>(x)])
                fail(errc::element_missing, "element " + std::to_string(x) +
                                                " unassigned in partition of " + std::to_string(s),
                     x);
    }
    return builder.finish();
}

bool Relation::holds(Element s, Element x, Element y) const {
    if (s < 0 || s >= n_ || x < 0 || x >= n_ || y < 0 || y >= n_)
        fail(errc::index_out_of_range, "holds() argument outside ground set");
    if (s == x || s == y)
        fail(errc::not_reflectless, "triple (" + std::to_string(s) + "|" + std::to_string(x) + "," +
                                        std::to_string(y) + ") is not reflectless");
    if (x == y)
        return true;
    return table_[index(s, x)] == table_[index(s, y)];
}

std::vector<ElementSet> Relation::classes_of(Element s) const {
    std::vector<std::vector<Element>> buckets(static_cast<std::size_t>(class_count(s)));
    for (Element x = 0; x < n_; ++x)
        if (x != s)
            buckets[static_cast<std::size_t>(class_id(s, x))].push_back(x);
    std::vector<ElementSet> out;
    out.reserve(buckets.size());
    for (std::vector<Element> &bucket : buckets)
        out.emplace_back(n_, std::move(bucket));
    return out;
}

RelationBuilder::RelationBuilder(int n) : n_(n), table_(static_cast<std::size_t>(n) * n, -1) {
    assert(n >= 1);
}

void RelationBuilder::set_class(Element s, Element x, int class_id) {
    assert(s != x && class_id >= 0);
    table_[static_cast<std::size_t>(s) * n_ + x] = class_id;
}

Relation RelationBuilder::finish() {
    Relation r;
    r.n_ = n_;
    r.class_count_.assign(static_cast<std::size_t>(n_), 0);
    for (Element s = 0; s < n_; ++s) {
        // densify class ids in order of first appearance
        std::vector<int> remap;
        for (Element x = 0; x < n_; ++x) {
            if (x == s)
                continue;
            int id = table_[static_cast<std::size_t>(s) * n_ + x];
            if (id < 0)
                fail(errc::element_missing,
                     "element " + std::to_string(x) + " unassigned in partition of " + std::to_string(s), x);
            auto it = std::find(remap.begin(), remap.end(), id);
            int dense;
            if (it == remap.end()) {
                dense = static_cast<int>(remap.size());
                remap.push_back(id);
            } else {
                dense = static_cast<int>(it - remap.begin());
            }
            table_[static_cast<std::size_t>(s) * n_ + x] = dense;
        }
        r.class_count_[static_cast<std::size_t>(s)] = static_cast<int>(remap.size());
    }
    r.table_ = std::move(table_);
    return r;
}

ElementSet splitters(const Relation &r, const ElementSet &x) {
    if (x.empty())
        fail(errc::empty_set, "splitters of the empty set are undefined");
    const int n = r.size();
    std::vector<Element> found;
    for (Element s = 0; s < n; ++s) {
        if (x.contains(s))
            continue;
        const int first = r.class_id(s, x.members().front());
        for (Element member : x) {
            if (r.class_id(s, member) != first) {
                found.push_back(s);
                break;
            }
        }
    }
    return ElementSet(n, std::move(found));
}

int splitter_count(const Relation &r, const ElementSet &x) {
    if (x.empty())
        return -r.size();
    return splitters(r, x).size();
}

bool is_homogeneous_set(const Relation &r, const ElementSet &x) {
    if (x.empty())
        fail(errc::empty_set, "homogeneity of the empty set is undefined");
    return splitter_count(r, x) == 0;
}

RestrictedRelation restrict_to(const Relation &r, const ElementSet &x) {
    if (x.empty())
        fail(errc::empty_set, "cannot restrict to the empty set");
    const std::vector<Element> &members = x.members();
    const int m = static_cast<int>(members.size());
    RelationBuilder builder(m);
    for (int si = 0; si < m; ++si)
        for (int xi = 0; xi < m; ++xi)
            if (si != xi)
                builder.set_class(si, xi, r.class_id(members[static_cast<std::size_t>(si)],
                                                     members[static_cast<std::size_t>(xi)]));
    return RestrictedRelation{builder.finish(), members};
}

CongruencePartition::CongruencePartition(int universe, std::vector<ElementSet> parts)
    : parts_(std::move(parts)) {
    std::vector<bool> seen(static_cast<std::size_t>(universe), false);
    std::size_t covered = 0;
    for (const ElementSet &part : parts_) {
        if (part.empty())
            throw std::invalid_argument("congruence partition contains an empty part");
        for (Element v : part) {
            if (v < 0 || v >= universe || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("congruence partition parts must be disjoint subsets of the ground set");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(universe))
        throw std::invalid_argument("congruence partition must cover the ground set");
}

namespace {

// Two members of a part perceive V∖part identically when their class tables
// restricted to V∖part agree up to a bijective renaming.
bool same_outside_view(const Relation &r, Element a, Element b, const ElementSet &part) {
    const int n = r.size();
    std::vector<int> fwd(static_cast<std::size_t>(n), -1), bwd(static_cast<std::size_t>(n), -1);
    for (Element w = 0; w < n; ++w) {
        if (part.contains(w) || w == a || w == b)
            continue;
        int ca = r.class_id(a, w), cb = r.class_id(b, w);
        if (fwd[static_cast<std::size_t>(ca)] == -1 && bwd[static_cast<std::size_t>(cb)] == -1) {
            fwd[static_cast<std::size_t>(ca)] = cb;
            bwd[static_cast<std::size_t>(cb)] = ca;
        } else if (fwd[static_cast<std::size_t>(ca)] != cb || bwd[static_cast<std::size_t>(cb)] != ca) {
            return false;
        }
    }
    return true;
}

} // namespace

Relation quotient(const Relation &r, const CongruencePartition &p, bool verify_representatives) {
    const std::vector<ElementSet> &parts = p.parts();
    const int k = static_cast<int>(parts.size());
    std::vector<Element> rep(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (!is_homogeneous_set(r, parts[static_cast<std::size_t>(i)]))
            fail(errc::part_not_homogeneous, "part " + std::to_string(i) + " " +
                                                 parts[static_cast<std::size_t>(i)].to_string() +
                                                 " is not a homogeneous set",
                 i);
        rep[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)].min();
    }
    if (verify_representatives) {
        for (int i = 0; i < k; ++i) {
            const ElementSet &part = parts[static_cast<std::size_t>(i)];
            for (Element v : part)
                if (v != rep[static_cast<std::size_t>(i)] &&
                    !same_outside_view(r, rep[static_cast<std::size_t>(i)], v, part))
                    fail(errc::part_not_homogeneous,
                         "members of part " + std::to_string(i) + " perceive the outside differently", i);
        }
    }
    if (k == 1) {
        // single part: one-element quotient
        return Relation::from_partitions(1, {{}});
    }
    RelationBuilder builder(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b)
                builder.set_class(a, b,
                                  r.class_id(rep[static_cast<std::size_t>(a)], rep[static_cast<std::size_t>(b)]));
    return builder.finish();
}

bool equivalent_relations(const Relation &a, const Relation &b) {
    if (a.size() != b.size())
        return false;
    const int n = a.size();
    for (Element s = 0; s < n; ++s) {
        if (a.class_count(s) != b.class_count(s))
            return false;
        std::vector<int> fwd(static_cast<std::size_t>(a.class_count(s)), -1);
        std::vector<int> bwd(static_cast<std::size_t>(b.class_count(s)), -1);
        for (Element x = 0; x < n; ++x) {
            if (x == s)
                continue;
            int ca = a.class_id(s, x), cb = b.class_id(s, x);
            if (fwd[static_cast<std::size_t>(ca)] == -1 && bwd[static_cast<std::size_t>(cb)] == -1) {
                fwd[static_cast<std::size_t>(ca)] = cb;
                bwd[static_cast<std::size_t>(cb)] = ca;
            } else if (fwd[static_cast<std::size_t>(ca)] != cb || bwd[static_cast<std::size_t>(cb)] != ca) {
                return false;
            }
        }
    }
    return true;
}

} // namespace homodec
