#include "homodec/instances.hpp"

#include "homodec/errors.hpp"

#include <limits>
#include <map>
#include <queue>
#include <string>
#include <utility>

namespace homodec {

namespace {

void require_kind(const Graph &g, GraphKind kind, const char *what) {
    if (g.kind != kind)
        fail(errc::malformed_graph, std::string(what) + " needs a " + graph_kind_name(kind) +
                                        " graph, got " + graph_kind_name(g.kind));
}

std::vector<std::vector<Element>> neighbor_lists(const Graph &g) {
    std::vector<std::vector<Element>> nb(static_cast<std::size_t>(g.n));
    for (const Graph::Edge &e : g.edges) {
        nb[static_cast<std::size_t>(e.u)].push_back(e.v);
        nb[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return nb;
}

} // namespace

Relation from_undirected(const Graph &g) {
    require_kind(g, GraphKind::undirected, "from_undirected");
    auto adj = g.adjacency();
    RelationBuilder builder(g.n);
    for (Element s = 0; s < g.n; ++s)
        for (Element x = 0; x < g.n; ++x)
            if (x != s)
                builder.set_class(s, x, adj[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] ? 0 : 1);
    return builder.finish();
}

Relation from_directed(const Graph &g) {
    require_kind(g, GraphKind::directed, "from_directed");
    auto adj = g.adjacency();
    RelationBuilder builder(g.n);
    for (Element s = 0; s < g.n; ++s)
        for (Element x = 0; x < g.n; ++x)
            if (x != s) {
                int out = adj[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] ? 1 : 0;
                int in = adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] ? 1 : 0;
                builder.set_class(s, x, out * 2 + in);
            }
    return builder.finish();
}

Relation from_two_structure(const Graph &g, bool ordered) {
    require_kind(g, GraphKind::two_structure, "from_two_structure");
    constexpr int unset = -1;
    std::vector<std::vector<int>> color(static_cast<std::size_t>(g.n),
                                        std::vector<int>(static_cast<std::size_t>(g.n), unset));
    for (const Graph::Edge &e : g.edges) {
        auto u = static_cast<std::size_t>(e.u);
        auto v = static_cast<std::size_t>(e.v);
        if (ordered) {
            color[u][v] = e.color;
        } else {
            if (color[v][u] != unset && color[v][u] != e.color)
                fail(errc::incomplete_coloring, "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                    "} carries two different colors");
            color[u][v] = color[v][u] = e.color;
        }
    }
    for (Element u = 0; u < g.n; ++u)
        for (Element v = 0; v < g.n; ++v)
            if (u != v && color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == unset)
                fail(errc::incomplete_coloring,
                     "pair (" + std::to_string(u) + "," + std::to_string(v) + ") is uncolored");

    RelationBuilder builder(g.n);
    for (Element s = 0; s < g.n; ++s) {
        if (!ordered) {
            for (Element x = 0; x < g.n; ++x)
                if (x != s)
                    builder.set_class(s, x, color[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]);
        } else {
            std::map<std::pair<int, int>, int> ids;
            for (Element x = 0; x < g.n; ++x)
                if (x != s) {
                    std::pair<int, int> key{color[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)],
                                            color[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]};
                    auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
                    builder.set_class(s, x, it->second);
                }
        }
    }
    return builder.finish();
}

Relation distance_k_relation(const Graph &g, int k) {
    require_kind(g, GraphKind::undirected, "distance_k_relation");
    if (k < 1)
        fail(errc::bad_k, "k must be >= 1, got " + std::to_string(k), k);
    auto nb = neighbor_lists(g);
    constexpr int inf = std::numeric_limits<int>::max();
    RelationBuilder builder(g.n);
    std::vector<int> dist(static_cast<std::size_t>(g.n));
    for (Element s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[static_cast<std::size_t>(s)] = 0;
        std::queue<Element> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            Element u = bfs.front();
            bfs.pop();
            for (Element v : nb[static_cast<std::size_t>(u)])
                if (dist[static_cast<std::size_t>(v)] == inf) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    bfs.push(v);
                }
        }
        for (Element x = 0; x < g.n; ++x)
            if (x != s)
                builder.set_class(s, x, dist[static_cast<std::size_t>(x)] <= k ? 0 : 1);
    }
    return builder.finish();
}

Relation path_avoiding_relation(const Graph &g, AvoidMode mode) {
    require_kind(g, GraphKind::undirected, "path_avoiding_relation");
    auto nb = neighbor_lists(g);
    auto adj = g.adjacency();
    RelationBuilder builder(g.n);
    std::vector<int> comp(static_cast<std::size_t>(g.n));
    for (Element s = 0; s < g.n; ++s) {
        // mark removed vertices: s itself, plus N(s) in neighborhood mode
        constexpr int removed = -2, unseen = -1;
        std::fill(comp.begin(), comp.end(), unseen);
        comp[static_cast<std::size_t>(s)] = removed;
        if (mode == AvoidMode::neighborhood)
            for (Element v = 0; v < g.n; ++v)
                if (v != s && adj[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)])
                    comp[static_cast<std::size_t>(v)] = removed;
        int next = 0;
        for (Element x = 0; x < g.n; ++x) {
            if (comp[static_cast<std::size_t>(x)] != unseen)
                continue;
            comp[static_cast<std::size_t>(x)] = next;
            std::queue<Element> bfs;
            bfs.push(x);
            while (!bfs.empty()) {
                Element u = bfs.front();
                bfs.pop();
                for (Element v : nb[static_cast<std::size_t>(u)])
                    if (comp[static_cast<std::size_t>(v)] == unseen) {
                        comp[static_cast<std::size_t>(v)] = next;
                        bfs.push(v);
                    }
            }
            ++next;
        }
        for (Element x = 0; x < g.n; ++x)
            if (x != s) {
                int c = comp[static_cast<std::size_t>(x)];
                // removed (= in N(s)) vertices get singleton classes
                builder.set_class(s, x, c == removed ? next + x : c);
            }
    }
    return builder.finish();
}

} // namespace homodec
