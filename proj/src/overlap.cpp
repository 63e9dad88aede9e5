#include "homodec/overlap.hpp"

#include "homodec/refinable_partition.hpp"

#include <algorithm>
#include <numeric>

namespace homodec {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }

    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

std::vector<ElementSet> atoms_of(const std::vector<ElementSet> &members, const ElementSet &support) {
    RefinablePartition p(support.universe(), {support});
    for (const ElementSet &m : members)
        p.refine_by_set(m);
    std::vector<ElementSet> atoms = p.to_sets();
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

std::vector<OverlapClass> overlap_classes(const SetFamily &family) {
    const auto k = family.count();
    // order sets by minimum, then lexicographically; once a set's minimum
    // exceeds another's maximum, the two cannot share an element
    std::vector<std::size_t> by_min(k);
    std::iota(by_min.begin(), by_min.end(), std::size_t{0});
    std::sort(by_min.begin(), by_min.end(), [&](std::size_t a, std::size_t b) {
        if (family[a].min() != family[b].min())
            return family[a].min() < family[b].min();
        return family[a] < family[b];
    });

    UnionFind uf(k);
    for (std::size_t i = 0; i < k; ++i) {
        const ElementSet &a = family[by_min[i]];
        const Element a_max = a.members().back();
        for (std::size_t j = i + 1; j < k; ++j) {
            const ElementSet &b = family[by_min[j]];
            if (b.min() > a_max)
                break;
            if (uf.find(static_cast<int>(by_min[i])) != uf.find(static_cast<int>(by_min[j])) &&
                a.overlaps(b))
                uf.unite(static_cast<int>(by_min[i]), static_cast<int>(by_min[j]));
        }
    }

    std::vector<std::vector<std::size_t>> groups(k);
    for (std::size_t i = 0; i < k; ++i)
        groups[static_cast<std::size_t>(uf.find(static_cast<int>(i)))].push_back(i);

    std::vector<OverlapClass> out;
    for (const std::vector<std::size_t> &group : groups) {
        if (group.empty())
            continue;
        OverlapClass cls;
        cls.support = ElementSet(family[group.front()].universe());
        for (std::size_t i : group) {
            cls.members.push_back(family[i]);
            cls.support = cls.support.set_union(family[i]);
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.atoms = atoms_of(cls.members, cls.support);
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(),
              [](const OverlapClass &a, const OverlapClass &b) { return a.support < b.support; });
    return out;
}

} // namespace homodec
