#include "homodec/axioms.hpp"

#include "homodec/errors.hpp"
#include "homodec/oracle.hpp"

#include <numeric>
#include <random>

namespace homodec {

const char *axiom_name(Axiom which) {
    switch (which) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    }
    return "?";
}

AxiomReport check_base(const Relation &) {
    // The table stores one class id per (s, x): symmetry and transitivity
    // cannot be violated, and reflexivity is answered without the table.
    return {"base", true, {}, {}};
}

namespace {

// Union-find over the elements of one H_s, path-halving only.
struct UnionFind {
    std::vector<Element> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    Element find(Element v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(Element a, Element b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

AxiomReport check_base(const TripleList &raw) {
    int n = raw.n;
    for (std::size_t i = 0; i < raw.triples.size(); ++i) {
        const auto &[s, x, y] = raw.triples[i];
        for (Element v : {s, x, y})
            if (v < 0 || v >= n)
                fail(errc::index_out_of_range,
                     "triple " + std::to_string(i) + " mentions element " +
                         std::to_string(v) + " outside [0, " + std::to_string(n) + ")",
                     static_cast<long>(i));
        if (s == x || s == y)
            fail(errc::not_reflectless,
                 "triple " + std::to_string(i) + " is not reflectless",
                 static_cast<long>(i));
    }

    std::vector<std::vector<std::array<Element, 2>>> by_s(static_cast<std::size_t>(n));
    for (const auto &[s, x, y] : raw.triples)
        if (x != y) // reflexive facts are implicit, listing them is harmless
            by_s[static_cast<std::size_t>(s)].push_back({x, y});

    std::vector<char> related(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto at = [&](Element x, Element y) -> char & {
        return related[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(y)];
    };
    for (Element s = 0; s < n; ++s) {
        const auto &pairs = by_s[static_cast<std::size_t>(s)];
        for (const auto &[x, y] : pairs)
            at(x, y) = 1;
        // Symmetry first, then transitivity: two positives and a missing
        // closure pair. Scanning x < y keeps the witness deterministic.
        AxiomReport report{"base", true, {}, {}};
        for (Element x = 0; x < n && report.holds; ++x)
            for (Element y = x + 1; y < n; ++y)
                if (at(x, y) != at(y, x)) {
                    report.holds = false;
                    report.witness = at(x, y) ? std::vector<Element>{s, x, y}
                                              : std::vector<Element>{s, y, x};
                    break;
                }
        if (report.holds) {
            UnionFind uf(n);
            for (const auto &[x, y] : pairs)
                uf.unite(x, y);
            for (Element x = 0; x < n && report.holds; ++x) {
                if (x == s)
                    continue;
                for (Element y = x + 1; y < n; ++y) {
                    if (y == s)
                        continue;
                    if (uf.find(x) == uf.find(y) && !at(x, y)) {
                        report.holds = false;
                        report.witness = {s, x, y};
                        break;
                    }
                }
            }
        }
        for (const auto &[x, y] : pairs)
            at(x, y) = 0;
        if (!report.holds)
            return report;
    }
    return {"base", true, {}, {}};
}

namespace {

// H(s|xy) assuming s, x, y pairwise distinct: one table row comparison.
inline bool rel(const Relation &r, Element s, Element x, Element y) {
    return r.class_id(s, x) == r.class_id(s, y);
}

// A1 and A4 quantify over three distinct elements and are invariant under
// swapping x and y, so scan x < y with z free.
AxiomReport scan_triples(const Relation &r, Axiom which) {
    AxiomReport report{axiom_name(which), true, {}, {}};
    int n = r.size();
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
                if (z == x || z == y)
                    continue;
                bool bad = which == Axiom::A1
                               ? rel(r, x, y, z) && rel(r, y, x, z) && !rel(r, z, x, y)
                               : !rel(r, x, y, z) && !rel(r, y, x, z) && !rel(r, z, x, y);
                if (bad) {
                    report.holds = false;
                    report.witness = {x, y, z};
                    return report;
                }
            }
    return report;
}

// A2 and A3 quantify over four distinct elements; both are invariant under
// swapping x and y while s and t play ordered roles.
AxiomReport scan_quadruples(const Relation &r, Axiom which) {
    AxiomReport report{axiom_name(which), true, {}, {}};
    int n = r.size();
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            for (Element s = 0; s < n; ++s) {
                if (s == x || s == y)
                    continue;
                for (Element t = 0; t < n; ++t) {
                    if (t == s || t == x || t == y)
                        continue;
                    if (!rel(r, x, s, t) || !rel(r, y, s, t))
                        continue;
                    bool premise = which == Axiom::A2
                                       ? rel(r, t, x, y)
                                       : rel(r, t, s, x) && rel(r, t, s, y);
                    if (premise && !rel(r, s, x, y)) {
                        report.holds = false;
                        report.witness = {x, y, s, t};
                        return report;
                    }
                }
            }
    return report;
}

} // namespace

AxiomReport check_axiom(const Relation &r, Axiom which) {
    switch (which) {
    case Axiom::A1:
    case Axiom::A4: return scan_triples(r, which);
    case Axiom::A2:
    case Axiom::A3: return scan_quadruples(r, which);
    }
    return {"?", true, {}, {}};
}

namespace {

AxiomReport submodular_exhaustive(const Relation &r) {
    int n = r.size();
    if (n > 12)
        fail(errc::too_large,
             "exhaustive submodularity check limited to 12 elements, got " +
                 std::to_string(n),
             n);
    std::uint32_t all = (std::uint32_t(1) << n) - 1;
    // splitter count per subset; the empty set's -n is never consulted
    // because overlapping pairs have nonempty intersection.
    std::vector<int> count(static_cast<std::size_t>(all) + 1, -n);
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        int c = 0;
        for (Element s = 0; s < n; ++s) {
            if (mask >> s & 1)
                continue;
            int seen = -1;
            for (Element x = 0; x < n; ++x) {
                if (!(mask >> x & 1) || x == s)
                    continue;
                int id = r.class_id(s, x);
                if (seen < 0)
                    seen = id;
                else if (seen != id) {
                    ++c;
                    break;
                }
            }
        }
        count[mask] = c;
    }
    AxiomReport report{"submodularity", true, {}, {}};
    for (std::uint32_t a = 1; a <= all; ++a)
        for (std::uint32_t b = a + 1; b <= all; ++b) {
            if ((a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0)
                continue;
            if (count[a] + count[b] < count[a | b] + count[a & b]) {
                report.holds = false;
                report.witness_sets = {ElementSet::from_mask(n, a),
                                       ElementSet::from_mask(n, b)};
                return report;
            }
        }
    return report;
}

AxiomReport submodular_sampled(const Relation &r, std::uint64_t seed, int samples) {
    AxiomReport report{"submodularity", true, {}, {}};
    int n = r.size();
    std::mt19937_64 rng(seed);
    std::vector<Element> xs, ys;
    for (int i = 0; i < samples; ++i) {
        xs.clear();
        ys.clear();
        for (Element v = 0; v < n; ++v) {
            std::uint64_t bits = rng();
            if (bits & 1)
                xs.push_back(v);
            if (bits & 2)
                ys.push_back(v);
        }
        ElementSet a(n, xs), b(n, ys);
        if (!a.overlaps(b))
            continue;
        if (splitter_count(r, a) + splitter_count(r, b) <
            splitter_count(r, a.set_union(b)) + splitter_count(r, a.set_intersection(b))) {
            report.holds = false;
            report.witness_sets = {a, b};
            return report;
        }
    }
    return report;
}

} // namespace

AxiomReport check_submodularity(const Relation &r, SubmodularMode mode,
                                std::uint64_t seed, int samples) {
    return mode == SubmodularMode::exhaustive ? submodular_exhaustive(r)
                                              : submodular_sampled(r, seed, samples);
}

AxiomReport check_family_closure(const Relation &r, ClosureLevel level) {
    int n = r.size();
    if (n > 12)
        fail(errc::too_large,
             "family closure check limited to 12 elements, got " + std::to_string(n),
             n);
    SetFamily family = oracle::enumerate_homogeneous_sets(r);
    std::uint32_t all = n == 0 ? 0 : (std::uint32_t(1) << n) - 1;
    std::vector<bool> member(static_cast<std::size_t>(all) + 1, false);
    std::vector<std::uint32_t> masks;
    masks.reserve(family.count());
    for (const ElementSet &set : family) {
        masks.push_back(set.to_mask());
        member[masks.back()] = true;
    }
    AxiomReport report{level == ClosureLevel::partitive ? "partitive" : "weakly_partitive",
                       true,
                       {},
                       {}};
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            std::uint32_t a = masks[i], b = masks[j];
            if ((a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0)
                continue;
            bool closed = member[a | b] && member[a & b] && member[a & ~b] &&
                          member[b & ~a];
            if (closed && level == ClosureLevel::partitive)
                closed = member[a ^ b];
            if (!closed) {
                report.holds = false;
                report.witness_sets = {family[i], family[j]};
                return report;
            }
        }
    return report;
}

} // namespace homodec
