#include "homodec/cli.hpp"

#include "homodec/algorithms.hpp"
#include "homodec/axioms.hpp"
#include "homodec/bimodule.hpp"
#include "homodec/errors.hpp"
#include "homodec/instances.hpp"
#include "homodec/oracle.hpp"
#include "homodec/relation_io.hpp"
#include "homodec/strong_tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace homodec {

namespace {

using nlohmann::ordered_json;

// Misuse that CLI11's option layer cannot see (flag/input conflicts).
struct UsageError {
    std::string message;
};

bool input_stage(errc code) {
    switch (code) {
    case errc::element_repeated:
    case errc::element_missing:
    case errc::self_in_class:
    case errc::malformed_graph:
    case errc::incomplete_coloring:
    case errc::not_bipartite:
    case errc::bad_k:
    case errc::parse_error:
    case errc::duplicate_edge:
    case errc::index_out_of_range:
        return true;
    default:
        return false;
    }
}

std::string read_all(const std::string &path, std::istream &in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            fail(errc::parse_error, "cannot open input file " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string &payload, const std::string &path, std::ostream &out) {
    if (path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw UsageError{"cannot open output file " + path};
    file << payload;
}

bool looks_like_json(const std::string &text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '{';
    return false;
}

struct RelationOptions {
    std::string kind = "adjacency";
    int k = 1;
    bool ordered = false;
};

struct LoadedInput {
    bool bimodular = false;
    Relation relation;        // valid unless bimodular
    Graph graph;              // valid for edge-list inputs
    BimoduleInstance bimodule; // valid when bimodular
};

LoadedInput load_input(const std::string &path, std::istream &in, const RelationOptions &opt) {
    LoadedInput loaded;
    std::string text = read_all(path, in);
    if (looks_like_json(text)) {
        loaded.relation = relation_from_json(text);
        return loaded;
    }
    loaded.graph = parse_graph(text);
    const Graph &g = loaded.graph;
    if (g.kind == GraphKind::bipartite) {
        if (opt.kind != "adjacency")
            throw UsageError{"--kind does not apply to bipartite inputs"};
        loaded.bimodular = true;
        loaded.bimodule = from_bipartite_bimodular(g);
        return loaded;
    }
    if (opt.kind == "adjacency") {
        switch (g.kind) {
        case GraphKind::undirected: loaded.relation = from_undirected(g); break;
        case GraphKind::directed: loaded.relation = from_directed(g); break;
        case GraphKind::two_structure:
            loaded.relation = from_two_structure(g, opt.ordered);
            break;
        case GraphKind::bipartite: break; // handled above
        }
    } else if (opt.kind == "distance") {
        loaded.relation = distance_k_relation(g, opt.k);
    } else if (opt.kind == "avoid-vertex") {
        loaded.relation = path_avoiding_relation(g, AvoidMode::vertex);
    } else {
        loaded.relation = path_avoiding_relation(g, AvoidMode::neighborhood);
    }
    return loaded;
}

int resolve_threads(int from_flag) {
    if (from_flag > 0)
        return from_flag;
    if (const char *env = std::getenv("HOMODEC_THREADS")) {
        int value = std::atoi(env);
        if (value > 0)
            return value;
    }
    return 1;
}

ordered_json set_to_json(const ElementSet &set) {
    return ordered_json(set.members());
}

ordered_json family_to_json(const SetFamily &family) {
    ordered_json out = ordered_json::array();
    for (const ElementSet &set : family)
        out.push_back(set_to_json(set));
    return out;
}

ordered_json report_to_json(const AxiomReport &report) {
    ordered_json j;
    j["axiom"] = report.axiom;
    j["holds"] = report.holds;
    j["witness"] = report.witness.empty() ? ordered_json(nullptr) : ordered_json(report.witness);
    if (!report.witness_sets.empty()) {
        ordered_json sets = ordered_json::array();
        for (const ElementSet &set : report.witness_sets)
            sets.push_back(set_to_json(set));
        j["witness_sets"] = std::move(sets);
    }
    return j;
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

// ---- decompose ----------------------------------------------------------

int cmd_decompose(const LoadedInput &loaded, bool type, bool strict,
                  const std::string &format, const std::string &out_path,
                  int threads, std::ostream &out, std::ostream &err) {
    StrongTree tree;
    if (loaded.bimodular) {
        if (type)
            throw UsageError{"--type-nodes needs a relation input, not a bipartite graph"};
        BimodularResult result = strong_bimodules(loaded.bimodule);
        if (!result.closure.holds) {
            err << "error: bimodule family is not closed under union of "
                   "overlapping sets; refusing to decompose (witness "
                << result.closure.witness_a.to_string() << " and "
                << result.closure.witness_b.to_string() << ")\n";
            return 3;
        }
        tree = build_tree(result.strong);
    } else {
        tree = build_tree(strong_sets(loaded.relation, {resolve_threads(threads)}));
        if (type)
            type_nodes(tree, loaded.relation, strict);
    }
    write_output(format == "text" ? tree_to_outline(tree) : tree_to_json(tree),
                 out_path, out);
    return 0;
}

// ---- query --------------------------------------------------------------

int cmd_query(const LoadedInput &loaded, const std::string &op,
              const std::vector<Element> &ids, std::ostream &out) {
    ordered_json result;
    int n = loaded.bimodular ? loaded.bimodule.n : loaded.relation.size();
    if (op == "shs") {
        if (ids.empty())
            throw UsageError{"query shs needs at least one element id"};
        ElementSet seed(n, ids);
        result["shs"] = set_to_json(loaded.bimodular
                                        ? smallest_bimodule(loaded.bimodule, seed)
                                        : shs(loaded.relation, seed));
    } else if (op == "mhs") {
        if (ids.size() != 1)
            throw UsageError{"query mhs needs exactly one element id"};
        if (ids[0] < 0 || ids[0] >= n)
            fail(errc::index_out_of_range,
                 "element " + std::to_string(ids[0]) + " outside [0, " +
                     std::to_string(n) + ")");
        result["mhs"] = family_to_json(
            loaded.bimodular ? maximal_bimodules_avoiding(loaded.bimodule, ids[0])
                             : mhs(loaded.relation, ids[0]));
    } else {
        if (!ids.empty())
            throw UsageError{"query trivial takes no element ids"};
        if (loaded.bimodular)
            throw UsageError{"query trivial needs a relation input, not a bipartite graph"};
        result["trivial"] = is_trivial(loaded.relation);
    }
    out << dump(result);
    return 0;
}

// ---- check --------------------------------------------------------------

void check_relation_oracle(const Relation &r, std::vector<AxiomReport> &reports) {
    AxiomReport report{"oracle", true, {}, {}};
    bool ok = strong_sets(r) == oracle::brute_strong_sets(r);
    for (Element x = 0; ok && x < r.size(); ++x)
        ok = mhs(r, x) == oracle::brute_mhs(r, x);
    for (Element a = 0; ok && a < r.size(); ++a)
        for (Element b = a + 1; ok && b < r.size(); ++b)
            ok = shs(r, ElementSet(r.size(), {a, b})) ==
                 oracle::brute_shs(r, ElementSet(r.size(), {a, b}));
    report.holds = ok;
    reports.push_back(report);
}

int cmd_check(const LoadedInput &loaded, bool axioms, bool closure, bool submodular,
              bool against_oracle, std::uint64_t seed, int samples, std::ostream &out) {
    if (!axioms && !closure && !submodular && !against_oracle)
        throw UsageError{"check needs at least one of --axioms --closure --submodular --oracle"};
    std::vector<AxiomReport> reports;
    if (loaded.bimodular) {
        if (axioms || submodular)
            throw UsageError{"--axioms and --submodular need a relation input, "
                             "not a bipartite graph"};
        ClosureReport closure_report = check_union_closure(loaded.bimodule);
        if (closure || !closure_report.holds) {
            AxiomReport report{"union_closure", closure_report.holds, {}, {}};
            if (!closure_report.holds)
                report.witness_sets = {closure_report.witness_a, closure_report.witness_b};
            reports.push_back(report);
        }
        if (against_oracle && closure_report.holds) {
            AxiomReport report{"oracle", true, {}, {}};
            report.holds = strong_bimodules(loaded.bimodule).strong ==
                           oracle::brute_strong_bimodules(loaded.graph);
            reports.push_back(report);
        }
    } else {
        const Relation &r = loaded.relation;
        if (axioms) {
            reports.push_back(check_base(r));
            for (Axiom a : {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4})
                reports.push_back(check_axiom(r, a));
        }
        if (closure) {
            reports.push_back(check_family_closure(r, ClosureLevel::weakly_partitive));
            reports.push_back(check_family_closure(r, ClosureLevel::partitive));
        }
        if (submodular)
            reports.push_back(check_submodularity(
                r, r.size() <= 12 ? SubmodularMode::exhaustive : SubmodularMode::sampled,
                seed, samples));
        if (against_oracle)
            check_relation_oracle(r, reports);
    }
    ordered_json doc;
    ordered_json checks = ordered_json::array();
    bool all_hold = true;
    for (const AxiomReport &report : reports) {
        checks.push_back(report_to_json(report));
        all_hold = all_hold && report.holds;
    }
    doc["checks"] = std::move(checks);
    doc["all_hold"] = all_hold;
    out << dump(doc);
    return all_hold ? 0 : 1;
}

// ---- generate -----------------------------------------------------------

int cmd_generate(const std::string &model, int n, double p, int colors,
                 std::uint64_t seed, const std::string &out_path, std::ostream &out) {
    if (n < 1)
        throw UsageError{"--n must be at least 1"};
    if (p < 0.0 || p > 1.0)
        throw UsageError{"--p must lie in [0, 1]"};
    if (colors < 1)
        throw UsageError{"--colors must be at least 1"};
    Graph g;
    if (model == "gnp")
        g = generate_gnp({n, p, seed});
    else if (model == "tournament")
        g = generate_tournament(n, seed);
    else if (model == "bipartite")
        g = generate_bipartite(n, p, seed);
    else
        g = generate_two_structure(n, colors, seed);
    write_output(serialize_graph(g), out_path, out);
    return 0;
}

// ---- oracle -------------------------------------------------------------

int cmd_oracle(const LoadedInput &loaded, const std::string &family, std::ostream &out) {
    SetFamily result;
    if (loaded.bimodular)
        result = family == "homogeneous" ? oracle::brute_bimodules(loaded.graph)
                                         : oracle::brute_strong_bimodules(loaded.graph);
    else
        result = family == "homogeneous"
                     ? oracle::enumerate_homogeneous_sets(loaded.relation)
                     : oracle::brute_strong_sets(loaded.relation);
    ordered_json doc;
    doc["family"] = family_to_json(result);
    out << dump(doc);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err) {
    CLI::App app{"Decomposition of homogeneous relations: strong sets, "
                 "inclusion trees, axiom and closure checks."};
    app.name("homodec");
    app.require_subcommand(1);

    // shared relation-construction options, registered per subcommand
    struct Common {
        std::string input;
        RelationOptions rel;
    };
    auto add_common = [](CLI::App *sub, Common &common) {
        sub->add_option("input", common.input,
                        "input file: edge list or relation JSON, - for stdin")
            ->required();
        sub->add_option("--kind", common.rel.kind,
                        "relation built from a graph input")
            ->check(CLI::IsMember(
                {"adjacency", "distance", "avoid-vertex", "avoid-neighborhood"}))
            ->capture_default_str();
        sub->add_option("-k,--k", common.rel.k, "distance bound for --kind distance")
            ->capture_default_str();
        sub->add_flag("--ordered", common.rel.ordered,
                      "treat 2-structure colors as ordered-pair colors");
    };

    CLI::App *decompose = app.add_subcommand("decompose", "compute the strong-set tree");
    Common dec_common;
    add_common(decompose, dec_common);
    bool dec_type = false, dec_strict = false;
    std::string dec_format = "json", dec_out = "-";
    int dec_threads = 0;
    decompose->add_flag("--type-nodes", dec_type, "label nodes prime/degenerate/linear");
    decompose->add_flag("--strict", dec_strict,
                        "fail instead of marking unclassifiable nodes");
    decompose->add_option("--format", dec_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    decompose->add_option("--out", dec_out, "output file, - for stdout")
        ->capture_default_str();
    decompose->add_option("--threads", dec_threads,
                          "parallel fan-out (0 = HOMODEC_THREADS or 1)");

    CLI::App *query = app.add_subcommand("query", "run one primitive operation");
    Common query_common;
    add_common(query, query_common);
    std::string query_op;
    std::vector<Element> query_ids;
    query->add_option("op", query_op, "shs | mhs | trivial")
        ->required()
        ->check(CLI::IsMember({"shs", "mhs", "trivial"}));
    query->add_option("ids", query_ids, "element ids for shs/mhs");

    CLI::App *check = app.add_subcommand("check", "verify axioms and invariants");
    Common check_common;
    add_common(check, check_common);
    bool check_axioms = false, check_closure = false, check_submodular = false,
         check_oracle = false;
    std::uint64_t check_seed = 1;
    int check_samples = 10000;
    check->add_flag("--axioms", check_axioms, "equivalence base plus A1-A4");
    check->add_flag("--closure", check_closure,
                    "family closure (weakly partitive and partitive), n <= 12");
    check->add_flag("--submodular", check_submodular,
                    "splitter-count submodularity (exhaustive n <= 12, else sampled)");
    check->add_flag("--oracle", check_oracle,
                    "compare fast paths against brute force, n <= 12");
    check->add_option("--seed", check_seed, "seed for sampled checks")
        ->capture_default_str();
    check->add_option("--samples", check_samples, "sample count for sampled checks")
        ->capture_default_str();

    CLI::App *generate = app.add_subcommand("generate", "emit a random graph file");
    std::string gen_model, gen_out = "-";
    int gen_n = 8, gen_colors = 2;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    generate->add_option("--model", gen_model, "graph model")
        ->required()
        ->check(CLI::IsMember({"gnp", "tournament", "bipartite", "2structure"}));
    generate->add_option("--n", gen_n, "vertex count")->capture_default_str();
    generate->add_option("--p", gen_p, "edge probability (gnp, bipartite)")
        ->capture_default_str();
    generate->add_option("--colors", gen_colors, "color count (2structure)")
        ->capture_default_str();
    generate->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    generate->add_option("--out", gen_out, "output file, - for stdout")
        ->capture_default_str();

    CLI::App *oracle_cmd = app.add_subcommand("oracle", "emit brute-force families");
    Common oracle_common;
    add_common(oracle_cmd, oracle_common);
    std::string oracle_family = "strong";
    oracle_cmd->add_option("--family", oracle_family, "which family to enumerate")
        ->check(CLI::IsMember({"homogeneous", "strong"}))
        ->capture_default_str();

    std::vector<const char *> argv;
    argv.push_back("homodec");
    for (const std::string &arg : args)
        argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decompose->parsed())
            return cmd_decompose(load_input(dec_common.input, in, dec_common.rel),
                                 dec_type, dec_strict, dec_format, dec_out,
                                 dec_threads, out, err);
        if (query->parsed())
            return cmd_query(load_input(query_common.input, in, query_common.rel),
                             query_op, query_ids, out);
        if (check->parsed())
            return cmd_check(load_input(check_common.input, in, check_common.rel),
                             check_axioms, check_closure, check_submodular,
                             check_oracle, check_seed, check_samples, out);
        if (generate->parsed())
            return cmd_generate(gen_model, gen_n, gen_p, gen_colors, gen_seed,
                                gen_out, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(load_input(oracle_common.input, in, oracle_common.rel),
                              oracle_family, out);
    } catch (const UsageError &e) {
        err << "error: " << e.message << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return input_stage(e.code()) ? 2 : 3;
    }
    return 0;
}

} // namespace homodec
