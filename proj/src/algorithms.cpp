#include "homodec/algorithms.hpp"

#include "homodec/errors.hpp"
#include "homodec/refinable_partition.hpp"

#include <algorithm>
#include <vector>

namespace homodec {

ElementSet shs(const Relation &r, const ElementSet &s) {
    if (s.empty())
        fail(errc::empty_set, "shs of the empty set is undefined");
    const int n = r.size();
    const Element anchor = s.members().front();

    enum : unsigned char { outside, in_worklist, in_m };
    std::vector<unsigned char> state(static_cast<std::size_t>(n), outside);
    std::vector<Element> m{anchor};
    state[static_cast<std::size_t>(anchor)] = in_m;
    std::vector<Element> worklist;
    for (Element v : s)
        if (v != anchor) {
            worklist.push_back(v);
            state[static_cast<std::size_t>(v)] = in_worklist;
        }

    // Invariant: every splitter of m is in the worklist. When y joins m, a
    // fresh splitter must separate y from the rest of m, hence from the
    // anchor; one holds() test per outside element keeps the bound.
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        Element y = worklist[i];
        state[static_cast<std::size_t>(y)] = in_m;
        m.push_back(y);
        for (Element z = 0; z < n; ++z)
            if (state[static_cast<std::size_t>(z)] == outside && !r.holds(z, anchor, y)) {
                worklist.push_back(z);
                state[static_cast<std::size_t>(z)] = in_worklist;
            }
    }
    return ElementSet(n, std::move(m));
}

std::vector<ElementSet> partition_by_pivot_classes(const ElementSet &z, Element y, const Relation &r) {
    if (z.contains(y))
        fail(errc::pivot_inside, "pivot " + std::to_string(y) + " lies inside the set to partition", y);
    std::vector<std::vector<Element>> buckets(static_cast<std::size_t>(r.class_count(y)));
    std::vector<int> order; // class ids in first-touch order
    for (Element v : z) {
        int id = r.class_id(y, v);
        if (buckets[static_cast<std::size_t>(id)].empty())
            order.push_back(id);
        buckets[static_cast<std::size_t>(id)].push_back(v);
    }
    std::vector<ElementSet> out;
    out.reserve(order.size());
    for (int id : order)
        out.emplace_back(z.universe(), std::move(buckets[static_cast<std::size_t>(id)]));
    return out;
}

namespace {

// One pivot pass: partition z by the pivot's classes and stash the buckets
// in the refining pool. Raw vectors keep this allocation-light.
void pool_pivot_buckets(const Relation &r, Element pivot, const std::vector<Element> &z,
                        std::vector<std::vector<Element>> &pool, bool reversed,
                        std::vector<std::vector<Element>> &buckets, std::vector<int> &order) {
    for (int id : order)
        buckets[static_cast<std::size_t>(id)].clear();
    order.clear();
    for (Element v : z) {
        int id = r.class_id(pivot, v);
        if (buckets[static_cast<std::size_t>(id)].empty())
            order.push_back(id);
        buckets[static_cast<std::size_t>(id)].push_back(v);
    }
    if (reversed)
        std::reverse(order.begin(), order.end());
    for (int id : order)
        pool.push_back(buckets[static_cast<std::size_t>(id)]);
}

} // namespace

SetFamily mhs(const Relation &r, Element x, const MhsOptions &options) {
    const int n = r.size();
    if (x < 0 || x >= n)
        fail(errc::index_out_of_range, "mhs pivot " + std::to_string(x) + " outside ground set");
    SetFamily out;
    if (n <= 1)
        return out;

    // Start from the classes of H_x (every homogeneous set avoiding x lies
    // inside one) in a single group, then refine: for a pivot y, split every
    // class but y's own by the classes of H_y. A pivot re-examines only
    // elements of its group — the class it sat in one round earlier — which
    // charges each (pivot, element) pair to a single round.
    RefinablePartition p(n, r.classes_of(x));
    std::vector<std::vector<Element>> buckets(static_cast<std::size_t>(n));
    std::vector<int> order;
    std::vector<std::vector<Element>> pool;
    std::vector<Element> z;

    for (;;) {
        pool.clear();
        std::vector<int> classes = p.classes();
        // groups are contiguous runs of the class list (splits insert the
        // new class adjacent to its origin), so one linear sweep finds them
        std::vector<std::pair<std::size_t, std::size_t>> runs;
        for (std::size_t i = 0; i < classes.size();) {
            std::size_t j = i + 1;
            while (j < classes.size() &&
                   p.group_of_class(classes[j]) == p.group_of_class(classes[i]))
                ++j;
            runs.emplace_back(i, j);
            i = j;
        }
        if (options.reversed)
            std::reverse(runs.begin(), runs.end());
        std::vector<std::vector<Element>> run_members;
        for (auto [begin, end] : runs) {
            run_members.clear();
            for (std::size_t i = begin; i < end; ++i) {
                run_members.push_back(p.members(classes[i]));
                p.count_ops(static_cast<long>(run_members.back().size()) + 1);
            }
            if (end - begin < 2)
                continue; // a group of one class yields no pivot work
            for (std::size_t i = begin; i < end; ++i) {
                std::size_t self = options.reversed ? end - 1 - (i - begin) : i;
                // z := the group minus the pivot class
                z.clear();
                for (std::size_t j = begin; j < end; ++j)
                    if (j != self)
                        z.insert(z.end(), run_members[j - begin].begin(), run_members[j - begin].end());
                p.count_ops(static_cast<long>(z.size()));
                std::vector<Element> pivots = run_members[self - begin];
                if (options.reversed)
                    std::reverse(pivots.begin(), pivots.end());
                for (Element y : pivots) {
                    p.count_ops(static_cast<long>(z.size()));
                    pool_pivot_buckets(r, y, z, pool, options.reversed, buckets, order);
                }
            }
        }
        p.advance_groups();
        std::size_t splits = 0;
        for (const std::vector<Element> &refining : pool)
            splits += p.refine_by_set(refining).size();
        if (splits == 0)
            break;
    }

    if (options.ops_out != nullptr)
        *options.ops_out = p.ops();
    for (const ElementSet &cls : p.to_sets())
        out.add(cls);
    out.canonicalize();
    return out;
}

bool is_trivial(const Relation &r) {
    const int n = r.size();
    if (n < 2)
        return true;
    for (const ElementSet &part : mhs(r, 0))
        if (part.size() > 1)
            return false;
    for (const ElementSet &part : mhs(r, 1))
        if (part.size() > 1)
            return false;
    // all nontrivial homogeneous sets now contain both 0 and 1
    return shs(r, ElementSet(n, {0, 1})).size() == n;
}

} // namespace homodec
