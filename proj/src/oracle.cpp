#include "homodec/oracle.hpp"

#include "homodec/errors.hpp"

#include <string>
#include <vector>

namespace homodec {
namespace oracle {

namespace {

void guard(int n, int limit, const char *what) {
    if (n > limit)
        fail(errc::too_large,
             std::string(what) + " is limited to " + std::to_string(limit) + " elements, got " +
                 std::to_string(n),
             n);
}

// class-of-s membership masks; mask-based scans keep the 2^n loops cheap
std::vector<std::vector<std::uint32_t>> class_masks(const Relation &r) {
    const int n = r.size();
    std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(n));
    for (Element s = 0; s < n; ++s) {
        out[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(r.class_count(s)), 0);
        for (Element x = 0; x < n; ++x)
            if (x != s)
                out[static_cast<std::size_t>(s)][static_cast<std::size_t>(r.class_id(s, x))] |=
                    std::uint32_t{1} << x;
    }
    return out;
}

bool mask_homogeneous(std::uint32_t mask, const std::vector<std::vector<std::uint32_t>> &classes, int n) {
    for (Element s = 0; s < n; ++s) {
        if (mask >> s & 1)
            continue;
        int touched = 0;
        for (std::uint32_t cls : classes[static_cast<std::size_t>(s)])
            if ((mask & cls) != 0 && ++touched > 1)
                return false;
    }
    return true;
}

} // namespace

SetFamily enumerate_homogeneous_sets(const Relation &r) {
    guard(r.size(), 20, "enumerate_homogeneous_sets");
    const int n = r.size();
    const auto classes = class_masks(r);
    SetFamily out;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (mask_homogeneous(mask, classes, n))
            out.add(ElementSet::from_mask(n, mask));
    out.canonicalize();
    return out;
}

ElementSet brute_shs(const Relation &r, const ElementSet &s) {
    guard(r.size(), 12, "brute_shs");
    if (s.empty())
        fail(errc::empty_set, "brute_shs of the empty set is undefined");
    const std::uint32_t seed = s.to_mask();
    ElementSet best;
    for (const ElementSet &candidate : enumerate_homogeneous_sets(r)) {
        std::uint32_t mask = candidate.to_mask();
        if ((mask & seed) == seed && (best.universe() == 0 || candidate.size() < best.size()))
            best = candidate;
    }
    return best; // V qualifies, so a candidate always exists
}

SetFamily brute_mhs(const Relation &r, Element x) {
    guard(r.size(), 12, "brute_mhs");
    SetFamily family = enumerate_homogeneous_sets(r);
    std::vector<std::uint32_t> avoiding;
    for (const ElementSet &candidate : family)
        if (!candidate.contains(x))
            avoiding.push_back(candidate.to_mask());
    SetFamily out;
    for (std::size_t i = 0; i < avoiding.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < avoiding.size() && maximal; ++j)
            if (i != j && (avoiding[i] & avoiding[j]) == avoiding[i])
                maximal = false;
        if (maximal)
            out.add(ElementSet::from_mask(r.size(), avoiding[i]));
    }
    out.canonicalize();
    return out;
}

SetFamily strong_members(const SetFamily &family) {
    SetFamily out;
    for (std::size_t i = 0; i < family.count(); ++i) {
        bool strong = true;
        for (std::size_t j = 0; j < family.count() && strong; ++j)
            if (i != j && family[i].overlaps(family[j]))
                strong = false;
        if (strong)
            out.add(family[i]);
    }
    out.canonicalize();
    return out;
}

SetFamily brute_strong_sets(const Relation &r) {
    guard(r.size(), 12, "brute_strong_sets");
    return strong_members(enumerate_homogeneous_sets(r));
}

SetFamily brute_bimodules(const Graph &g) {
    if (g.kind != GraphKind::bipartite)
        fail(errc::not_bipartite, "brute_bimodules needs a bipartite graph, got " +
                                      std::string(graph_kind_name(g.kind)));
    guard(g.n, 12, "brute_bimodules");
    const int n = g.n;
    std::uint32_t black = 0;
    for (Element v : g.black)
        black |= std::uint32_t{1} << v;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    const std::uint32_t white = all & ~black;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const Graph::Edge &e : g.edges) {
        nbr[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }

    SetFamily out;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        bool bimodule = true;
        for (Element s = 0; s < n && bimodule; ++s) {
            if (mask >> s & 1)
                continue;
            // s only distinguishes members of the opposite color
            std::uint32_t inside = mask & (black >> s & 1 ? white : black);
            std::uint32_t seen = inside & nbr[static_cast<std::size_t>(s)];
            if (seen != 0 && seen != inside)
                bimodule = false;
        }
        if (bimodule)
            out.add(ElementSet::from_mask(n, mask));
    }
    out.canonicalize();
    return out;
}

SetFamily brute_strong_bimodules(const Graph &g) {
    return strong_members(brute_bimodules(g));
}

} // namespace oracle
} // namespace homodec
