#include "homodec/graph.hpp"

#include "homodec/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace homodec {

const char *graph_kind_name(GraphKind kind) {
    switch (kind) {
    case GraphKind::undirected: return "undirected";
    case GraphKind::directed: return "directed";
    case GraphKind::bipartite: return "bipartite";
    case GraphKind::two_structure: return "2structure";
    }
    return "?";
}

bool Graph::is_black(Element v) const {
    return std::binary_search(black.begin(), black.end(), v);
}

std::vector<std::vector<bool>> Graph::adjacency() const {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const Edge &e : edges) {
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        if (kind != GraphKind::directed)
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    return adj;
}

namespace {

struct LineReader {
    std::istream &in;
    int line_no = 0;

    // next non-empty, non-comment line
    bool next(std::string &out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            std::size_t begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                continue;
            out = line.substr(begin);
            return true;
        }
        return false;
    }
};

GraphKind parse_kind(const std::string &token, int line_no) {
    if (token == "undirected")
        return GraphKind::undirected;
    if (token == "directed")
        return GraphKind::directed;
    if (token == "bipartite")
        return GraphKind::bipartite;
    if (token == "2structure")
        return GraphKind::two_structure;
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": unknown graph kind '" + token + "'",
         line_no);
}

void check_vertex(Element v, int n, int line_no) {
    if (v < 0 || v >= n)
        fail(errc::index_out_of_range,
             "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " outside [0," +
                 std::to_string(n) + ")",
             line_no);
}

} // namespace

Graph parse_graph(std::istream &in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line))
        fail(errc::parse_error, "empty input", 0);

    Graph g;
    int m = 0;
    {
        std::istringstream header(line);
        std::string kind_token;
        if (!(header >> g.n >> m >> kind_token))
            fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": bad header", reader.line_no);
        std::string extra;
        if (header >> extra)
            fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": trailing header tokens",
                 reader.line_no);
        g.kind = parse_kind(kind_token, reader.line_no);
        if (g.n < 1 || m < 0)
            fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": bad vertex/edge counts",
                 reader.line_no);
    }

    if (g.kind == GraphKind::bipartite) {
        if (!reader.next(line) || line.rfind("colors:", 0) != 0)
            fail(errc::parse_error,
                 "line " + std::to_string(reader.line_no) + ": bipartite graph needs a 'colors:' line",
                 reader.line_no);
        std::istringstream colors(line.substr(7));
        Element v;
        while (colors >> v) {
            check_vertex(v, g.n, reader.line_no);
            g.black.push_back(v);
        }
        std::sort(g.black.begin(), g.black.end());
        g.black.erase(std::unique(g.black.begin(), g.black.end()), g.black.end());
    }

    // Directed graphs and 2-structures (whose ordered variant colors both
    // orientations of a pair) deduplicate ordered pairs; the rest unordered.
    const bool directed = g.kind == GraphKind::directed || g.kind == GraphKind::two_structure;
    std::set<std::pair<Element, Element>> seen;
    for (int i = 0; i < m; ++i) {
        if (!reader.next(line))
            fail(errc::parse_error, "unexpected end of input: expected " + std::to_string(m) + " edges",
                 reader.line_no);
        std::istringstream es(line);
        Graph::Edge e;
        if (!(es >> e.u >> e.v))
            fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": bad edge", reader.line_no);
        if (g.kind == GraphKind::two_structure) {
            if (!(es >> e.color) || e.color < 0)
                fail(errc::parse_error,
                     "line " + std::to_string(reader.line_no) + ": 2structure edge needs a color >= 0",
                     reader.line_no);
        }
        std::string extra;
        if (es >> extra)
            fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": trailing edge tokens",
                 reader.line_no);
        check_vertex(e.u, g.n, reader.line_no);
        check_vertex(e.v, g.n, reader.line_no);
        if (e.u == e.v)
            fail(errc::malformed_graph, "line " + std::to_string(reader.line_no) + ": self-loop on " +
                                            std::to_string(e.u),
                 reader.line_no);
        std::pair<Element, Element> key =
            directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second)
            fail(errc::duplicate_edge, "line " + std::to_string(reader.line_no) + ": duplicate edge " +
                                           std::to_string(e.u) + " " + std::to_string(e.v),
                 reader.line_no);
        if (g.kind == GraphKind::bipartite && g.is_black(e.u) == g.is_black(e.v))
            fail(errc::not_bipartite, "line " + std::to_string(reader.line_no) + ": edge " +
                                          std::to_string(e.u) + " " + std::to_string(e.v) +
                                          " joins same-color vertices",
                 reader.line_no);
        g.edges.push_back(e);
    }
    if (reader.next(line))
        fail(errc::parse_error, "line " + std::to_string(reader.line_no) + ": trailing content", reader.line_no);
    return g;
}

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph &g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << ' ' << graph_kind_name(g.kind) << '\n';
    if (g.kind == GraphKind::bipartite) {
        out << "colors:";
        for (Element v : g.black)
            out << ' ' << v;
        out << '\n';
    }
    for (const Graph::Edge &e : g.edges) {
        out << e.u << ' ' << e.v;
        if (g.kind == GraphKind::two_structure)
            out << ' ' << e.color;
        out << '\n';
    }
    return out.str();
}

namespace {

// std::uniform_* distributions are implementation-defined; draw from the
// engine directly so outputs are stable across standard libraries.
int bounded(std::mt19937_64 &rng, int k) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

bool coin(std::mt19937_64 &rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace

Graph generate_gnp(const GnpParams &params) {
    Graph g;
    g.kind = GraphKind::undirected;
    g.n = params.n;
    std::mt19937_64 rng(params.seed);
    for (Element u = 0; u < g.n; ++u)
        for (Element v = u + 1; v < g.n; ++v)
            if (coin(rng, params.p))
                g.edges.push_back({u, v, 0});
    return g;
}

Graph generate_tournament(int n, std::uint64_t seed) {
    Graph g;
    g.kind = GraphKind::directed;
    g.n = n;
    std::mt19937_64 rng(seed);
    for (Element u = 0; u < n; ++u)
        for (Element v = u + 1; v < n; ++v) {
            if (coin(rng, 0.5))
                g.edges.push_back({u, v, 0});
            else
                g.edges.push_back({v, u, 0});
        }
    return g;
}

Graph generate_bipartite(int n, double p, std::uint64_t seed) {
    Graph g;
    g.kind = GraphKind::bipartite;
    g.n = n;
    std::mt19937_64 rng(seed);
    for (Element v = 0; v < n; ++v)
        if (coin(rng, 0.5))
            g.black.push_back(v);
    if (g.black.empty())
        g.black.push_back(bounded(rng, n));
    if (static_cast<int>(g.black.size()) == n && n > 1)
        g.black.erase(g.black.begin() + bounded(rng, n));
    for (Element u = 0; u < n; ++u)
        for (Element v = u + 1; v < n; ++v)
            if (g.is_black(u) != g.is_black(v) && coin(rng, p))
                g.edges.push_back({u, v, 0});
    return g;
}

Graph generate_two_structure(int n, int colors, std::uint64_t seed) {
    Graph g;
    g.kind = GraphKind::two_structure;
    g.n = n;
    std::mt19937_64 rng(seed);
    for (Element u = 0; u < n; ++u)
        for (Element v = u + 1; v < n; ++v)
            g.edges.push_back({u, v, bounded(rng, colors)});
    return g;
}

} // namespace homodec
