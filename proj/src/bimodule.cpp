#include "homodec/bimodule.hpp"

#include "homodec/errors.hpp"
#include "homodec/overlap.hpp"

#include <algorithm>
#include <queue>

namespace homodec {

bool BimoduleInstance::splits(Element s, const ElementSet &x) const {
    if (x.contains(s))
        return false;
    // s distinguishes two members of the opposite color; same-color members
    // are invisible to s (no edges inside a color class).
    bool want_black = !is_black(s);
    int seen = -1;
    for (Element v : x.members()) {
        if (is_black(v) != want_black)
            continue;
        int a = adjacent(s, v) ? 1 : 0;
        if (seen < 0)
            seen = a;
        else if (seen != a)
            return true;
    }
    return false;
}

ElementSet BimoduleInstance::splitters(const ElementSet &x) const {
    std::vector<Element> out;
    for (Element s = 0; s < n; ++s)
        if (!x.contains(s) && splits(s, x))
            out.push_back(s);
    return ElementSet(n, out);
}

bool BimoduleInstance::is_bimodule(const ElementSet &x) const {
    if (x.size() == 0)
        return false;
    for (Element s = 0; s < n; ++s)
        if (!x.contains(s) && splits(s, x))
            return false;
    return true;
}

BimoduleInstance from_bipartite_bimodular(const Graph &g) {
    if (g.kind != GraphKind::bipartite)
        fail(errc::not_bipartite,
             "expected a bipartite graph, got " +
                 std::string(graph_kind_name(g.kind)));
    BimoduleInstance inst;
    inst.n = g.n;
    inst.black = ElementSet(g.n, g.black);
    inst.adj = g.adjacency();
    return inst;
}

ElementSet smallest_bimodule(const BimoduleInstance &inst, const ElementSet &s) {
    if (s.size() == 0)
        fail(errc::empty_set, "smallest_bimodule needs a nonempty seed");
    int n = inst.n;
    enum : char { outside, pending, inside };
    std::vector<char> state(static_cast<std::size_t>(n), outside);
    std::queue<Element> work;
    for (Element v : s.members()) {
        state[static_cast<std::size_t>(v)] = pending;
        work.push(v);
    }
    // One anchor per color. A vertex z outside M∪F sees every opposite-color
    // member of M alike (otherwise it would already be pending), so when y
    // joins M the only new splitters are opposite-color vertices that
    // distinguish y from the anchor of y's color.
    Element anchor[2] = {-1, -1};
    std::vector<Element> result;
    while (!work.empty()) {
        Element y = work.front();
        work.pop();
        state[static_cast<std::size_t>(y)] = inside;
        result.push_back(y);
        int color = inst.is_black(y) ? 1 : 0;
        if (anchor[color] < 0) {
            anchor[color] = y; // first of its color: nothing to distinguish yet
            continue;
        }
        Element a = anchor[color];
        for (Element z = 0; z < n; ++z) {
            if (state[static_cast<std::size_t>(z)] != outside)
                continue;
            if (inst.is_black(z) == inst.is_black(y))
                continue;
            if (inst.adjacent(z, y) != inst.adjacent(z, a)) {
                state[static_cast<std::size_t>(z)] = pending;
                work.push(z);
            }
        }
    }
    return ElementSet(n, result);
}

SetFamily maximal_bimodules_avoiding(const BimoduleInstance &inst, Element x) {
    int n = inst.n;
    SetFamily out;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    covered[static_cast<std::size_t>(x)] = true;
    for (Element seed = 0; seed < n; ++seed) {
        if (covered[static_cast<std::size_t>(seed)])
            continue;
        // Grow in one ascending pass: smallest_bimodule is monotone in its
        // seed, so a z once rejected (its closure would capture x) stays
        // rejected no matter how the set grows afterwards.
        ElementSet m(n, {seed});
        for (Element z = 0; z < n; ++z) {
            if (z == x || m.contains(z))
                continue;
            std::vector<Element> seeded(m.members());
            seeded.push_back(z);
            ElementSet grown = smallest_bimodule(inst, ElementSet(n, seeded));
            if (!grown.contains(x))
                m = grown;
        }
        for (Element v : m.members())
            covered[static_cast<std::size_t>(v)] = true;
        out.add(m);
    }
    out.canonicalize();
    return out;
}

SetFamily bimodule_z_family(const BimoduleInstance &inst) {
    SetFamily out;
    for (Element x = 0; x < inst.n; ++x) {
        SetFamily avoiding = maximal_bimodules_avoiding(inst, x);
        for (const ElementSet &m : avoiding)
            out.add(m);
    }
    out.canonicalize();
    return out;
}

namespace {

ClosureReport check_closure_exhaustive(const BimoduleInstance &inst) {
    int n = inst.n;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    std::uint32_t black_mask = inst.black.to_mask();
    for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
            if (inst.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                nbr[static_cast<std::size_t>(u)] |= std::uint32_t(1) << v;
    std::uint32_t all = (std::uint32_t(1) << n) - 1;
    auto mask_is_bimodule = [&](std::uint32_t mask) {
        for (Element s = 0; s < n; ++s) {
            if (mask >> s & 1)
                continue;
            std::uint32_t opposite =
                (black_mask >> s & 1) ? ~black_mask : black_mask;
            std::uint32_t inside = mask & opposite & all;
            if (inside == 0)
                continue;
            std::uint32_t seen = nbr[static_cast<std::size_t>(s)] & inside;
            if (seen != 0 && seen != inside)
                return false;
        }
        return true;
    };
    std::vector<std::uint32_t> family;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (mask_is_bimodule(mask))
            family.push_back(mask);
    std::vector<bool> member(static_cast<std::size_t>(all) + 1, false);
    for (std::uint32_t mask : family)
        member[static_cast<std::size_t>(mask)] = true;
    ClosureReport report;
    report.exhaustive = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            std::uint32_t a = family[i], b = family[j];
            if ((a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0)
                continue; // disjoint or nested: nothing to require
            if (!member[static_cast<std::size_t>(a | b)]) {
                report.holds = false;
                report.witness_a = ElementSet::from_mask(n, a);
                report.witness_b = ElementSet::from_mask(n, b);
                return report;
            }
        }
    }
    return report;
}

ClosureReport check_closure_sampled(const BimoduleInstance &inst) {
    ClosureReport report;
    report.exhaustive = false;
    SetFamily z = bimodule_z_family(inst);
    for (std::size_t i = 0; i < z.count(); ++i) {
        for (std::size_t j = i + 1; j < z.count(); ++j) {
            const ElementSet &a = z[i];
            const ElementSet &b = z[j];
            if (!a.overlaps(b))
                continue;
            std::vector<Element> merged(a.members());
            merged.insert(merged.end(), b.members().begin(), b.members().end());
            if (!inst.is_bimodule(ElementSet(inst.n, merged))) {
                report.holds = false;
                report.witness_a = a;
                report.witness_b = b;
                return report;
            }
        }
    }
    return report;
}

} // namespace

ClosureReport check_union_closure(const BimoduleInstance &inst) {
    if (inst.n <= 12)
        return check_closure_exhaustive(inst);
    return check_closure_sampled(inst);
}

BimodularResult strong_bimodules(const BimoduleInstance &inst) {
    BimodularResult result;
    result.closure = check_union_closure(inst);
    if (!result.closure.holds)
        return result;
    SetFamily z = bimodule_z_family(inst);
    result.strong.add(ElementSet::full(inst.n));
    for (Element v = 0; v < inst.n; ++v)
        result.strong.add(ElementSet(inst.n, {v}));
    for (const OverlapClass &cls : overlap_classes(z)) {
        result.strong.add(cls.support);
        // Same caveat as in strong_sets: atoms are differences, so they can
        // escape the family even when it is union-closed.
        for (const ElementSet &atom : cls.atoms)
            if (inst.is_bimodule(atom))
                result.strong.add(atom);
    }
    result.strong.canonicalize();
    return result;
}

} // namespace homodec
