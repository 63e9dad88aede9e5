#include "homodec/strong_tree.hpp"

#include "homodec/algorithms.hpp"
#include "homodec/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace homodec {

const char *node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::prime: return "prime";
    case NodeKind::degenerate: return "degenerate";
    case NodeKind::linear: return "linear";
    case NodeKind::unclassified: return "unclassified";
    }
    return "?";
}

SetFamily z_family(const Relation &r, const ZFamilyOptions &options) {
    const int n = r.size();
    std::vector<SetFamily> per_pivot(static_cast<std::size_t>(n));
    int threads = std::min(options.threads, n);
    if (threads > 1) {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (int x = next.fetch_add(1); x < n; x = next.fetch_add(1))
                    per_pivot[static_cast<std::size_t>(x)] = mhs(r, x);
            });
        for (std::thread &w : workers)
            w.join();
    } else {
        for (Element x = 0; x < n; ++x)
            per_pivot[static_cast<std::size_t>(x)] = mhs(r, x);
    }
    SetFamily out;
    for (const SetFamily &family : per_pivot)
        for (const ElementSet &set : family)
            out.add(set);
    out.canonicalize();
    return out;
}

SetFamily strong_sets(const Relation &r, const ZFamilyOptions &options) {
    const int n = r.size();
    SetFamily out;
    out.add(ElementSet::full(n));
    for (Element v = 0; v < n; ++v)
        out.add(ElementSet::single(n, v));
    for (const OverlapClass &cls : overlap_classes(z_family(r, options))) {
        out.add(cls.support);
        // An atom is carved out of the support by set differences, so unlike
        // the support it need not be homogeneous; only the homogeneous ones
        // are strong.
        for (const ElementSet &atom : cls.atoms)
            if (is_homogeneous_set(r, atom))
                out.add(atom);
    }
    out.canonicalize();
    return out;
}

StrongTree build_tree(const SetFamily &strong) {
    SetFamily family = strong;
    family.canonicalize();
    if (family.empty())
        throw std::invalid_argument("build_tree needs a nonempty family");
    const int n = family[0].universe();

    // largest first; ties lexicographic, so the layout is deterministic
    std::vector<std::size_t> order(family.count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (family[a].size() != family[b].size())
            return family[a].size() > family[b].size();
        return family[a] < family[b];
    });
    if (family[order.front()].size() != n)
        throw std::invalid_argument("build_tree needs the full ground set in the family");

    for (std::size_t i = 0; i < family.count(); ++i)
        for (std::size_t j = i + 1; j < family.count(); ++j)
            if (family[i].overlaps(family[j]))
                fail(errc::overlapping_sets, "sets " + family[i].to_string() + " and " +
                                                 family[j].to_string() + " overlap");

    StrongTree tree;
    tree.nodes.reserve(family.count());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const ElementSet &set = family[order[rank]];
        StrongTreeNode node;
        node.members = set;
        node.kind = set.size() == 1 ? NodeKind::leaf : NodeKind::unclassified;
        if (rank > 0) {
            // parent: the smallest superset already placed — nodes arrive in
            // decreasing size, so the backwards scan meets it first
            int parent = -1;
            for (std::size_t j = rank; j-- > 0;)
                if (set.is_subset_of(tree.nodes[j].members)) {
                    parent = static_cast<int>(j);
                    break;
                }
            node.parent = parent; // the root is a superset, so parent >= 0
            tree.nodes[static_cast<std::size_t>(parent)].children.push_back(static_cast<int>(rank));
        }
        tree.nodes.push_back(std::move(node));
    }

    int leaves = 0;
    for (const StrongTreeNode &node : tree.nodes)
        if (node.members.size() == 1)
            ++leaves;
    if (leaves != n)
        throw std::invalid_argument("build_tree needs every singleton in the family");

    for (StrongTreeNode &node : tree.nodes)
        std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            return tree.nodes[static_cast<std::size_t>(a)].members.min() <
                   tree.nodes[static_cast<std::size_t>(b)].members.min();
        });
    return tree;
}

namespace {

// Union of two children is homogeneous iff every other child's
// representative sees both representatives alike; contributions from
// outside the parent or inside a child cancel because all node sets are
// homogeneous (quotient reasoning, needs A2).
bool pair_union_homogeneous(const Relation &r, const std::vector<Element> &reps, std::size_t i,
                            std::size_t j) {
    for (std::size_t z = 0; z < reps.size(); ++z)
        if (z != i && z != j && !r.holds(reps[z], reps[i], reps[j]))
            return false;
    return true;
}

bool run_union_homogeneous(const Relation &r, const std::vector<Element> &reps,
                           const std::vector<std::size_t> &path, std::size_t begin, std::size_t end) {
    std::vector<bool> inside(reps.size(), false);
    for (std::size_t i = begin; i < end; ++i)
        inside[path[i]] = true;
    for (std::size_t z = 0; z < reps.size(); ++z) {
        if (inside[z])
            continue;
        for (std::size_t i = begin + 1; i < end; ++i)
            if (!r.holds(reps[z], reps[path[begin]], reps[path[i]]))
                return false;
    }
    return true;
}

// The homogeneous-pair graph of a linear node is the consecutive-pairs
// graph of a path: recover that path, or return empty if the shape fails.
std::vector<std::size_t> recover_path(const std::vector<std::vector<bool>> &adjacent) {
    const std::size_t k = adjacent.size();
    std::vector<std::size_t> degree(k, 0);
    std::vector<std::size_t> ends;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            if (adjacent[i][j])
                ++degree[i];
        edges += degree[i];
        if (degree[i] == 1)
            ends.push_back(i);
        else if (degree[i] != 2)
            return {};
    }
    if (edges != 2 * (k - 1) || ends.size() != 2)
        return {};
    std::vector<std::size_t> path{ends.front()};
    std::vector<bool> used(k, false);
    used[ends.front()] = true;
    while (path.size() < k) {
        std::size_t at = path.back();
        bool advanced = false;
        for (std::size_t j = 0; j < k; ++j)
            if (adjacent[at][j] && !used[j]) {
                path.push_back(j);
                used[j] = true;
                advanced = true;
                break;
            }
        if (!advanced)
            return {}; // disconnected: a path piece plus a cycle
    }
    return path;
}

} // namespace

void type_nodes(StrongTree &tree, const Relation &r, bool strict) {
    for (StrongTreeNode &node : tree.nodes) {
        if (node.children.empty())
            continue;
        const std::size_t k = node.children.size();
        std::vector<Element> reps;
        reps.reserve(k);
        for (int child : node.children)
            reps.push_back(tree.nodes[static_cast<std::size_t>(child)].members.min());

        std::vector<std::vector<bool>> adjacent(k, std::vector<bool>(k, false));
        std::size_t homogeneous_pairs = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (pair_union_homogeneous(r, reps, i, j)) {
                    adjacent[i][j] = adjacent[j][i] = true;
                    ++homogeneous_pairs;
                }

        const std::size_t all_pairs = k * (k - 1) / 2;
        if (homogeneous_pairs == all_pairs) {
            node.kind = NodeKind::degenerate; // includes the two-child convention
            continue;
        }
        if (homogeneous_pairs == 0) {
            node.kind = NodeKind::prime;
            continue;
        }

        std::vector<std::size_t> path = recover_path(adjacent);
        bool linear = !path.empty();
        // every consecutive run must union to a homogeneous set, not just
        // the adjacent pairs
        for (std::size_t begin = 0; linear && begin + 2 < path.size() + 1; ++begin)
            for (std::size_t end = begin + 3; linear && end <= path.size(); ++end)
                linear = run_union_homogeneous(r, reps, path, begin, end);
        if (linear) {
            // canonical direction: the smaller sequence of child minima
            std::vector<std::size_t> reversed(path.rbegin(), path.rend());
            auto minima = [&](const std::vector<std::size_t> &p) {
                std::vector<Element> out;
                out.reserve(p.size());
                for (std::size_t i : p)
                    out.push_back(reps[i]);
                return out;
            };
            if (minima(reversed) < minima(path))
                path = std::move(reversed);
            node.kind = NodeKind::linear;
            node.order.clear();
            for (std::size_t i : path)
                node.order.push_back(node.children[i]);
            continue;
        }

        if (strict)
            fail(errc::not_weakly_partitive,
                 "children of " + node.members.to_string() +
                     " fit neither a prime, degenerate nor linear pattern");
        node.kind = NodeKind::unclassified;
    }
}

namespace {

nlohmann::ordered_json node_to_json(const StrongTree &tree, int id) {
    const StrongTreeNode &node = tree.node(id);
    nlohmann::ordered_json out;
    out["members"] = node.members.members();
    out["kind"] = node_kind_name(node.kind);
    nlohmann::ordered_json children = nlohmann::ordered_json::array();
    for (int child : node.children)
        children.push_back(node_to_json(tree, child));
    out["children"] = std::move(children);
    if (node.kind == NodeKind::linear) {
        nlohmann::ordered_json order = nlohmann::ordered_json::array();
        for (int child : node.order)
            order.push_back(tree.node(child).members.min());
        out["order"] = std::move(order);
    }
    return out;
}

void outline_node(const StrongTree &tree, int id, int depth, std::ostringstream &out) {
    const StrongTreeNode &node = tree.node(id);
    for (int i = 0; i < depth; ++i)
        out << "  ";
    out << node.members.to_string() << ' ' << node_kind_name(node.kind);
    if (node.kind == NodeKind::linear) {
        out << " order";
        for (int child : node.order)
            out << ' ' << tree.node(child).members.min();
    }
    out << '\n';
    for (int child : node.children)
        outline_node(tree, child, depth + 1, out);
}

} // namespace

std::string tree_to_json(const StrongTree &tree) {
    nlohmann::ordered_json out;
    out["node"] = node_to_json(tree, tree.root());
    return out.dump(2) + "\n";
}

std::string tree_to_outline(const StrongTree &tree) {
    std::ostringstream out;
    outline_node(tree, tree.root(), 0, out);
    return out.str();
}

} // namespace homodec
