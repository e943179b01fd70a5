#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "qary/extlinalg.hpp"
#include "qary/fields.hpp"
#include "qary/incidence.hpp"
#include "qary/qgraph.hpp"
#include "qary/qmatroid.hpp"
#include "qary/spaces.hpp"

namespace qary::cli {

namespace {

std::string slurp(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream os;
        os << stdin_stream.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

GraphFile load_graph(const std::string& path, std::istream& stdin_stream) {
    std::istringstream is(slurp(path, stdin_stream));
    return parse_graph(is);
}

IncidenceMatrix load_matrix(const std::string& path, std::istream& stdin_stream) {
    std::istringstream is(slurp(path, stdin_stream));
    return ingest_matrix(is);
}

// Accepts the full header line with or without the leading `field ` tag.
FieldSpec field_spec_from_flag(const std::string& text) {
    if (text.rfind("field ", 0) == 0) return parse_field_spec(text);
    return parse_field_spec("field " + text);
}

VecExt parse_column(const ExtField& f, const std::string& text) {
    VecExt v;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) v.push_back(f.parse_scalar(item));
    if (static_cast<int>(v.size()) != f.m())
        throw std::invalid_argument("initial column must have m=" + std::to_string(f.m()) + " entries");
    return v;
}

struct GlobalFlags {
    bool coords = false;
    std::string mode = "exhaustive";
    std::uint64_t seed = kDefaultSeed;
    std::size_t pairs = kDefaultSamplePairs;

    CheckMode check_mode() const {
        if (mode == "exhaustive") return CheckMode::exhaustive;
        if (mode == "sample") return CheckMode::sample;
        throw CLI::ValidationError("--mode", "must be exhaustive or sample");
    }
};

int graph_stats(const QGraph& g, std::ostream& out) {
    out << "edges: " << g.edges().size() << "\n";
    out << "vertices: " << g.vertices().size() << "\n";
    std::vector<std::size_t> degs;
    for (const Subspace& x : g.vertices()) degs.push_back(g.degree(x));
    std::sort(degs.rbegin(), degs.rend());
    out << "degrees:";
    for (std::size_t d : degs) out << " " << d;
    out << "\n";

    GraphCheck v = validate(g);
    out << "valid: " << (v.ok ? "PASS" : "FAIL " + v.message) << "\n";
    if (!v.spans_ambient) out << "note: positive-degree vertices span a proper subspace only\n";

    CountCheck ds = check_degree_sum(g);
    out << "degree-sum: " << (ds.ok ? "PASS " : "FAIL ") << ds.detail << "\n";
    out << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
    bool forest = is_forest(g);
    out << "forest: " << (forest ? "yes" : "no") << "\n";
    bool tree = forest && is_connected(g);
    out << "tree: " << (tree ? "yes" : "no") << "\n";
    bool counts_ok = ds.ok;
    if (tree) {
        CountCheck tc = check_tree_count(g);
        out << "tree-count: " << (tc.ok ? "PASS " : "FAIL ") << tc.detail << "\n";
        counts_ok = counts_ok && tc.ok;
    }
    if (!v.ok) return kValidationFailure;
    return counts_ok ? kOk : kCheckFailure;
}

std::string format_walk(const Walk& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) os << " -[" << format_subspace(w.edges[i - 1]) << "]- ";
        os << "<" << format_subspace(w.vertices[i]) << ">";
    }
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-ary graphs, their incidence matrices over F_{q^m}, and the represented q-matroids"};
    app.fallthrough();
    GlobalFlags flags;
    app.add_flag("--coords", flags.coords, "print field entries as coordinate tuples instead of a^k");
    app.add_option("--mode", flags.mode, "exhaustive|sample for lattice checks")->default_str("exhaustive");
    app.add_option("--seed", flags.seed, "seed for sampled checks");
    app.add_option("--pairs", flags.pairs, "sample size for sampled semimodularity checks");
    app.require_subcommand(1);

    int rc = kOk;

    // graph -----------------------------------------------------------
    CLI::App* graph = app.add_subcommand("graph", "build, close, validate and report on q-ary graphs");
    graph->require_subcommand(1);

    auto* g_build = graph->add_subcommand("build", "construct a built-in family");
    std::string fam;
    int fam_q = 2;
    std::optional<int> fam_n;
    std::string out_path;
    g_build->add_option("--family", fam, "q_path2|q_triangle|complete|path_seed|star_seed")->required();
    g_build->add_option("--q", fam_q, "base field size (prime)");
    g_build->add_option("--n", fam_n, "family parameter (ambient dim or classical length)");
    g_build->add_option("--out", out_path, "output file (default stdout)");
    g_build->callback([&] {
        QGraph g = family(fam, fam_q, fam_n);
        bool closed = validate(g).ok;
        emit(format_graph(g, closed), out_path, out);
    });

    auto* g_close = graph->add_subcommand("close", "q-graph closure of a seed edge set");
    std::string in_path = "-";
    g_close->add_option("--in", in_path, "graph file (default stdin)");
    g_close->add_option("--out", out_path, "output file (default stdout)");
    g_close->callback([&] {
        GraphFile gf = load_graph(in_path, in);
        QGraph closed = closure(gf.graph.q(), gf.graph.v(), gf.graph.edges());
        emit(format_graph(closed, true), out_path, out);
    });

    auto* g_validate = graph->add_subcommand("validate", "check the q-graph property");
    g_validate->add_option("--in", in_path, "graph file (default stdin)");
    g_validate->callback([&] {
        GraphFile gf = load_graph(in_path, in);
        GraphCheck r = validate(gf.graph);
        out << (r.ok ? "PASS " : "FAIL ") << r.message << "\n";
        if (!r.spans_ambient) out << "note: positive-degree vertices span a proper subspace only\n";
        if (!r.ok) rc = kValidationFailure;
    });

    auto* g_stats = graph->add_subcommand("stats", "degrees, counting identities, connectivity, forest/tree");
    g_stats->add_option("--in", in_path, "graph file (default stdin)");
    g_stats->callback([&] {
        GraphFile gf = load_graph(in_path, in);
        rc = graph_stats(gf.graph, out);
    });

    auto* g_path = graph->add_subcommand("path", "breadth-first path between two vertices");
    std::string from_text, to_text;
    g_path->add_option("--in", in_path, "graph file (default stdin)");
    g_path->add_option("--from", from_text, "generator vector of the start vertex")->required();
    g_path->add_option("--to", to_text, "generator vector of the target vertex")->required();
    g_path->callback([&] {
        GraphFile gf = load_graph(in_path, in);
        Subspace from(gf.graph.q(), gf.graph.v(), {parse_vec(from_text, gf.graph.q())});
        Subspace to(gf.graph.q(), gf.graph.v(), {parse_vec(to_text, gf.graph.q())});
        std::optional<Walk> w = find_path(gf.graph, from, to);
        if (!w) {
            out << "no path\n";
            rc = kCheckFailure;
            return;
        }
        out << "path of length " << w->length() << ": " << format_walk(*w) << "\n";
    });

    // incidence -------------------------------------------------------
    CLI::App* inc = app.add_subcommand("incidence", "synthesize and audit incidence matrices");
    inc->require_subcommand(1);

    auto* i_build = inc->add_subcommand("build", "build the incidence matrix of a graph");
    std::string graph_path, field_text, initial_text;
    i_build->add_option("--graph", graph_path, "graph file")->required();
    i_build->add_option("--field", field_text, "field spec `q=.. m=.. modulus=..` (default: built-in for (q, v))");
    i_build->add_option("--initial", initial_text, "initial representation, comma-separated a^k entries");
    i_build->add_option("--out", out_path, "output file (default stdout)");
    i_build->callback([&] {
        GraphFile gf = load_graph(graph_path, in);
        FieldSpec spec = field_text.empty() ? default_field_spec(gf.graph.q(), static_cast<int>(gf.graph.v()))
                                            : field_spec_from_flag(field_text);
        auto field = std::make_shared<const ExtField>(spec);
        std::optional<EdgeRep> initial;
        if (!initial_text.empty()) {
            VecExt col = parse_column(*field, initial_text);
            initial = EdgeRep{rank_support(*field, col), col};
        }
        IncidenceMatrix m = build_incidence(field, gf.graph, initial);
        emit(format_incidence(m), out_path, out);
    });

    auto* i_audit = inc->add_subcommand("audit", "verify column invariants and propagation consistency");
    std::string matrix_path = "-";
    i_audit->add_option("--matrix", matrix_path, "incidence matrix file (default stdin)");
    i_audit->callback([&] {
        IncidenceMatrix m = load_matrix(matrix_path, in);
        AuditReport r = audit(m);
        for (const std::string& f : r.failures) out << "FAIL " << f << "\n";
        out << "audit: " << (r.ok ? "PASS" : "FAIL") << " (" << r.columns_checked << " columns, " << r.pairs_checked
            << " adjacent pairs)\n";
        if (!r.ok) rc = kValidationFailure;
    });

    auto* i_reps = inc->add_subcommand("reps", "enumerate all representations of one edge");
    std::string edge_text;
    i_reps->add_option("--edge", edge_text, "edge as `<vec>;<vec>`")->required();
    i_reps->add_option("--field", field_text, "field spec `q=.. m=.. modulus=..`")->required();
    i_reps->callback([&] {
        FieldSpec spec = field_spec_from_flag(field_text);
        ExtField field(spec);
        Subspace edge = parse_subspace(edge_text, spec.q, static_cast<std::size_t>(spec.m));
        std::vector<EdgeRep> reps = all_representations(field, edge);
        out << "edge: " << format_subspace(edge) << "\n";
        out << "representations: " << reps.size() << "\n";
        for (const EdgeRep& r : reps) out << format_vec_ext(field, r.vector, flags.coords) << "\n";
    });

    // matroid ---------------------------------------------------------
    CLI::App* mat = app.add_subcommand("matroid", "rank oracle, axioms, equivalence, signature");
    mat->require_subcommand(1);

    auto* m_rank = mat->add_subcommand("rank", "rank of a subspace of the ground space");
    std::string subspace_text;
    m_rank->add_option("--matrix", matrix_path, "incidence matrix file")->required();
    m_rank->add_option("--subspace", subspace_text, "subspace as `<vec>[;<vec>...]` in F_q^n, n = columns")->required();
    m_rank->callback([&] {
        IncidenceMatrix m = load_matrix(matrix_path, in);
        QMatroid qm(m.field_ptr(), m.matrix());
        Subspace a = parse_subspace(subspace_text, m.field().q(), qm.ground_dim());
        out << "rank: " << qm.rank(a) << "\n";
    });

    auto* m_axioms = mat->add_subcommand("axioms", "check (r1)-(r3) on the subspace lattice");
    m_axioms->add_option("--matrix", matrix_path, "incidence matrix file")->required();
    m_axioms->callback([&] {
        IncidenceMatrix m = load_matrix(matrix_path, in);
        QMatroid qm(m.field_ptr(), m.matrix());
        AxiomReport r = check_axioms(qm, flags.check_mode(), flags.seed, flags.pairs);
        out << "subspaces: " << r.subspaces << "\n";
        if (r.mode == CheckMode::sample) out << "mode: sample seed=" << r.seed << " pairs=" << r.pairs_checked << "\n";
        else out << "mode: exhaustive pairs=" << r.pairs_checked << "\n";
        out << "axiom r1: " << (r.r1.pass ? "PASS" : "FAIL " + r.r1.witness) << "\n";
        out << "axiom r2: " << (r.r2.pass ? "PASS" : "FAIL " + r.r2.witness) << "\n";
        out << "axiom r3: " << (r.r3.pass ? "PASS" : "FAIL " + r.r3.witness) << "\n";
        if (!r.ok()) rc = kCheckFailure;
    });

    auto* m_compare = mat->add_subcommand("compare", "verify two incidence matrices give isomorphic q-matroids");
    std::string a_path, b_path;
    m_compare->add_option("--a", a_path, "first matrix file")->required();
    m_compare->add_option("--b", b_path, "second matrix file")->required();
    m_compare->callback([&] {
        IncidenceMatrix a = load_matrix(a_path, in);
        IncidenceMatrix b = load_matrix(b_path, in);
        CompareReport r = compare_incidence_matroids(a, b, flags.check_mode(), flags.seed, flags.pairs);
        out << (r.isomorphic ? "PASS " : "FAIL ") << r.message << "\n";
        if (!r.isomorphic) rc = kCheckFailure;
    });

    auto* m_sig = mat->add_subcommand("signature", "rank distribution over the subspace lattice");
    m_sig->add_option("--matrix", matrix_path, "incidence matrix file")->required();
    m_sig->callback([&] {
        IncidenceMatrix m = load_matrix(matrix_path, in);
        QMatroid qm(m.field_ptr(), m.matrix());
        out << format_signature(rank_signature(qm));
        out << uniform_pattern(qm).detail << "\n";
    });

    // fixture ---------------------------------------------------------
    CLI::App* fix = app.add_subcommand("fixture", "regenerate and diff the built-in worked examples");
    fix->require_subcommand(1);

    auto* f_list = fix->add_subcommand("list", "list fixture names");
    f_list->callback([&] {
        for (const std::string& n : fixtures::names()) out << n << "\n";
    });

    auto* f_run = fix->add_subcommand("run", "run one fixture, or all");
    std::string fixture_name;
    f_run->add_option("--name", fixture_name, "fixture name or `all`")->required();
    f_run->callback([&] {
        std::vector<fixtures::Result> results;
        if (fixture_name == "all") results = fixtures::run_all();
        else results.push_back(fixtures::run(fixture_name));
        for (const fixtures::Result& r : results) {
            out << r.output;
            out << "fixture " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
            if (!r.pass) rc = kCheckFailure;
        }
    });

    // parse + dispatch --------------------------------------------------
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return rc;
}

}  // namespace qary::cli
