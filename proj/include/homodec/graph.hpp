#pragma once

#include "homodec/element_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace homodec {

enum class GraphKind { undirected, directed, bipartite, two_structure };

const char *graph_kind_name(GraphKind kind);

// Loop-free graph in one of four flavours. Edges keep their input order so
// that serialization round-trips; `color` is meaningful for two_structure
// only. Bipartite graphs carry the set of black vertices.
struct Graph {
    struct Edge {
        Element u = 0;
        Element v = 0;
        int color = 0;
    };

    GraphKind kind = GraphKind::undirected;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Element> black; // bipartite only, sorted

    bool is_black(Element v) const;
    // adjacency matrix; for directed graphs adj[u][v] means arc u -> v
    std::vector<std::vector<bool>> adjacency() const;
};

// Edge-list format: header `<n> <m> <kind>`, one `colors:` line for
// bipartite graphs, then m edge lines. `#` starts a comment.
Graph parse_graph(const std::string &text);
Graph parse_graph(std::istream &in);
std::string serialize_graph(const Graph &g);

struct GnpParams {
    int n = 8;
    double p = 0.5;
    std::uint64_t seed = 1;
};

Graph generate_gnp(const GnpParams &params);
Graph generate_tournament(int n, std::uint64_t seed);
Graph generate_bipartite(int n, double p, std::uint64_t seed);
Graph generate_two_structure(int n, int colors, std::uint64_t seed);

} // namespace homodec
