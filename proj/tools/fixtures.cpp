#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qary/extlinalg.hpp"
#include "qary/fields.hpp"
#include "qary/incidence.hpp"
#include "qary/qgraph.hpp"
#include "qary/qmatroid.hpp"
#include "qary/spaces.hpp"

namespace qary::fixtures {

namespace {

const char* kGf8Qp2Matrix =
    "field q=2 m=3 modulus=1,1,0,1\n"
    "edges 3\n"
    "edge 1,0,0;0,1,0\n"
    "edge 0,1,0;0,0,1\n"
    "edge 1,0,1;0,1,0\n"
    "a^1 0 a^1\n"
    "a^0 a^2 a^6\n"
    "0 a^1 a^1\n";

const char* kGf8Qc3Matrix =
    "field q=2 m=3 modulus=1,1,0,1\n"
    "edges 7\n"
    "edge 1,0,0;0,1,0\n"
    "edge 0,1,0;0,0,1\n"
    "edge 1,0,0;0,0,1\n"
    "edge 1,0,1;0,1,0\n"
    "edge 1,0,0;0,1,1\n"
    "edge 1,1,0;0,0,1\n"
    "edge 1,0,1;0,1,1\n"
    "a^1 0 a^2 a^1 a^4 a^2 a^4\n"
    "a^0 a^2 0 a^6 a^0 a^2 a^6\n"
    "0 a^1 a^0 a^1 a^0 a^3 a^3\n";

VecFq unit(std::size_t n, std::size_t i) {
    VecFq v(n, 0);
    v[i] = 1;
    return v;
}

std::string degree_multiset(const QGraph& g) {
    std::vector<std::size_t> degs;
    for (const Subspace& x : g.vertices()) degs.push_back(g.degree(x));
    std::sort(degs.rbegin(), degs.rend());
    std::string s;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degs[i]);
    }
    return s;
}

std::string graph_counts(const QGraph& g) {
    std::ostringstream os;
    os << "edges: " << g.edges().size() << "\n";
    os << "vertices: " << g.vertices().size() << "\n";
    return os.str();
}

std::string fx_q2_p2_counts() {
    QGraph g = family("q_path2", 2);
    std::ostringstream os;
    os << "graph: q_path2 q=2\n" << graph_counts(g);
    os << "degrees: " << degree_multiset(g) << "\n";
    os << "validate: " << (validate(g).ok ? "PASS" : "FAIL") << "\n";
    CountCheck ds = check_degree_sum(g);
    os << "degree-sum: " << (ds.ok ? "PASS " : "FAIL ") << ds.detail << "\n";
    os << "tree: " << (is_tree(g) ? "yes" : "no") << "\n";
    CountCheck tc = check_tree_count(g);
    os << "tree-count: " << (tc.ok ? "PASS " : "FAIL ") << tc.detail << "\n";
    return os.str();
}

const char* kQ2P2Expected =
    "graph: q_path2 q=2\n"
    "edges: 3\n"
    "vertices: 7\n"
    "degrees: 2,1,1,1,1,1,1\n"
    "validate: PASS\n"
    "degree-sum: PASS sum_v [deg(v) 1]_q = 9 == 9 = (q+1)*edges\n"
    "tree: yes\n"
    "tree-count: PASS edges*q + 1 = 7 == 7 = vertices\n";

std::string fx_q2_c3_counts() {
    QGraph g = family("q_triangle", 2);
    std::ostringstream os;
    os << "graph: q_triangle q=2\n" << graph_counts(g);
    os << "degrees: " << degree_multiset(g) << "\n";
    os << "validate: " << (validate(g).ok ? "PASS" : "FAIL") << "\n";
    CountCheck ds = check_degree_sum(g);
    os << "degree-sum: " << (ds.ok ? "PASS " : "FAIL ") << ds.detail << "\n";
    os << "cycle: " << (find_cycle(g) ? "yes" : "no") << "\n";
    return os.str();
}

const char* kQ2C3Expected =
    "graph: q_triangle q=2\n"
    "edges: 7\n"
    "vertices: 7\n"
    "degrees: 2,2,2,2,2,2,2\n"
    "validate: PASS\n"
    "degree-sum: PASS sum_v [deg(v) 1]_q = 21 == 21 = (q+1)*edges\n"
    "cycle: yes\n";

std::string fx_f2_p4_closure() {
    QGraph seed = family("path_seed", 2, 4);
    QGraph g = closure(2, 5, seed.edges());
    std::ostringstream os;
    os << "graph: closure of path_seed n=4 q=2\n";
    os << "seed edges: " << seed.edges().size() << "\n";
    os << graph_counts(g);
    for (const char* text : {"1,0,1,0,0;0,1,0,0,0", "0,1,0,1,0;0,0,1,0,0", "0,0,1,0,1;0,0,0,1,0"}) {
        Subspace e = parse_subspace(text, 2, 5);
        os << "induced edge " << text << ": " << (g.has_edge(e) ? "present" : "missing") << "\n";
    }
    os << "validate: " << (validate(g).ok ? "PASS" : "FAIL") << "\n";
    os << "tree: " << (is_tree(g) ? "yes" : "no") << "\n";
    CountCheck tc = check_tree_count(g);
    os << "tree-count: " << (tc.ok ? "PASS " : "FAIL ") << tc.detail << "\n";
    return os.str();
}

const char* kF2P4Expected =
    "graph: closure of path_seed n=4 q=2\n"
    "seed edges: 4\n"
    "edges: 7\n"
    "vertices: 15\n"
    "induced edge 1,0,1,0,0;0,1,0,0,0: present\n"
    "induced edge 0,1,0,1,0;0,0,1,0,0: present\n"
    "induced edge 0,0,1,0,1;0,0,0,1,0: present\n"
    "validate: PASS\n"
    "tree: yes\n"
    "tree-count: PASS edges*q + 1 = 15 == 15 = vertices\n";

std::string fx_f2_s4_closure() {
    QGraph seed = family("star_seed", 2, 4);
    QGraph g = closure(2, 5, seed.edges());
    std::ostringstream os;
    os << "graph: closure of star_seed n=4 q=2\n";
    os << "seed edges: " << seed.edges().size() << "\n";
    os << graph_counts(g);
    os << "center degree: " << g.degree(Subspace(2, 5, {unit(5, 0)})) << "\n";
    os << "validate: " << (validate(g).ok ? "PASS" : "FAIL") << "\n";
    os << "tree: " << (is_tree(g) ? "yes" : "no") << "\n";
    CountCheck tc = check_tree_count(g);
    os << "tree-count: " << (tc.ok ? "PASS " : "FAIL ") << tc.detail << "\n";
    return os.str();
}

const char* kF2S4Expected =
    "graph: closure of star_seed n=4 q=2\n"
    "seed edges: 4\n"
    "edges: 15\n"
    "vertices: 31\n"
    "center degree: 4\n"
    "validate: PASS\n"
    "tree: yes\n"
    "tree-count: PASS edges*q + 1 = 31 == 31 = vertices\n";

std::string fx_gf27_triangle() {
    auto f = std::make_shared<const ExtField>(FieldSpec{3, 3, {1, 2, 0, 1}});
    Subspace e12(3, 3, {unit(3, 0), unit(3, 1)});
    Subspace e13(3, 3, {unit(3, 0), unit(3, 2)});
    Subspace e23(3, 3, {unit(3, 1), unit(3, 2)});

    // v1 = alpha e1 - e2, the pinned initial representation.
    VecExt v1{f->alpha(), f->from_base(2), f->zero()};
    EdgeRep r1{e12, v1};
    EdgeRep r2 = propagate(*f, r1, Subspace(3, 3, {unit(3, 0)}), e13);
    EdgeRep r3 = propagate(*f, r1, Subspace(3, 3, {unit(3, 1)}), e23);
    EdgeRep r3p = propagate(*f, r2, Subspace(3, 3, {unit(3, 2)}), e23);

    std::ostringstream os;
    os << format_field_spec(f->spec()) << "\n";
    os << "v1 = " << format_vec_ext(*f, r1.vector) << "\n";
    os << "v2 = " << format_vec_ext(*f, r2.vector) << "\n";
    os << "v3 = " << format_vec_ext(*f, r3.vector) << "\n";
    os << "v3' = " << format_vec_ext(*f, r3p.vector) << "\n";
    VecExt neg(3);
    for (int i = 0; i < 3; ++i) neg[static_cast<std::size_t>(i)] = f->neg(r3p.vector[static_cast<std::size_t>(i)]);
    os << "v3 == -v3' : " << (r3.vector == neg ? "PASS" : "FAIL") << "\n";
    return os.str();
}

const char* kGf27Expected =
    "field q=3 m=3 modulus=1,2,0,1\n"
    "v1 = [a^1, a^13, 0]\n"
    "v2 = [a^2, 0, a^13]\n"
    "v3 = [0, a^15, a^1]\n"
    "v3' = [0, a^2, a^14]\n"
    "v3 == -v3' : PASS\n";

std::string fx_gf8_qp2_matrix() {
    auto f = std::make_shared<const ExtField>(FieldSpec{2, 3, {1, 1, 0, 1}});
    QGraph g = family("q_path2", 2);
    Subspace e12(2, 3, {unit(3, 0), unit(3, 1)});
    VecExt v1{f->alpha(), f->one(), f->zero()};
    IncidenceMatrix m = build_incidence(f, g, EdgeRep{e12, v1});

    std::ostringstream os;
    os << format_incidence(m);
    VecExt sum12 = vec_add(*f, m.column(0), m.column(1));
    os << "v1 + v2 == v3 : " << (sum12 == m.column(2) ? "PASS" : "FAIL") << "\n";
    os << "audit: " << (audit(m).ok ? "PASS" : "FAIL") << "\n";
    os << "rank: " << rank_ext(*f, m.matrix()) << "\n";
    return os.str();
}

std::string gf8_qp2_expected() {
    return std::string(kGf8Qp2Matrix) + "v1 + v2 == v3 : PASS\naudit: PASS\nrank: 2\n";
}

std::string fx_gf8_c3_matrix() {
    std::istringstream in(kGf8Qc3Matrix);
    IncidenceMatrix m = ingest_matrix(in);
    std::ostringstream os;
    os << format_incidence(m);
    os << "audit: " << (audit(m).ok ? "PASS" : "FAIL") << "\n";
    os << "rank: " << rank_ext(m.field(), m.matrix()) << "\n";
    // Propagating the first column across the whole graph reproduces every
    // other column exactly.
    IncidenceMatrix rebuilt = build_incidence(m.field_ptr(), m.graph(), EdgeRep{m.order()[0], m.column(0)},
                                              std::vector<Subspace>(m.order()));
    bool same = rebuilt.matrix().cols == m.matrix().cols;
    os << "rebuild from column 1: " << (same ? "identical" : "different") << "\n";
    return os.str();
}

std::string gf8_qc3_expected() {
    return std::string(kGf8Qc3Matrix) + "audit: PASS\nrank: 2\nrebuild from column 1: identical\n";
}

std::string fx_empty() {
    QGraph g(2, 3, {});
    std::ostringstream os;
    os << "graph: empty q=2 v=3\n" << graph_counts(g);
    os << "validate: " << (validate(g).ok ? "PASS" : "FAIL") << "\n";
    CountCheck ds = check_degree_sum(g);
    os << "degree-sum: " << (ds.ok ? "PASS " : "FAIL ") << ds.detail << "\n";
    os << "tree: " << (is_tree(g) ? "yes" : "no") << "\n";
    CountCheck tc = check_tree_count(g);
    os << "tree-count: " << (tc.ok ? "PASS " : "FAIL ") << tc.detail << "\n";
    return os.str();
}

const char* kEmptyExpected =
    "graph: empty q=2 v=3\n"
    "edges: 0\n"
    "vertices: 0\n"
    "validate: PASS\n"
    "degree-sum: PASS sum_v [deg(v) 1]_q = 0 == 0 = (q+1)*edges\n"
    "tree: yes\n"
    "tree-count: PASS empty graph; identity vacuous\n";

struct Entry {
    std::function<std::string()> generate;
    std::function<std::string()> expected;
};

const std::vector<std::pair<std::string, Entry>>& table() {
    static const std::vector<std::pair<std::string, Entry>> t = {
        {"q2-p2-counts", {fx_q2_p2_counts, [] { return std::string(kQ2P2Expected); }}},
        {"q2-c3-counts", {fx_q2_c3_counts, [] { return std::string(kQ2C3Expected); }}},
        {"f2-p4-closure", {fx_f2_p4_closure, [] { return std::string(kF2P4Expected); }}},
        {"f2-s4-closure", {fx_f2_s4_closure, [] { return std::string(kF2S4Expected); }}},
        {"gf27-triangle", {fx_gf27_triangle, [] { return std::string(kGf27Expected); }}},
        {"gf8-qp2-matrix", {fx_gf8_qp2_matrix, gf8_qp2_expected}},
        {"gf8-c3-matrix", {fx_gf8_c3_matrix, gf8_qc3_expected}},
        {"empty", {fx_empty, [] { return std::string(kEmptyExpected); }}},
    };
    return t;
}

}  // namespace

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [name, entry] : table()) out.push_back(name);
    return out;
}

Result run(const std::string& name) {
    for (const auto& [n, entry] : table()) {
        if (n != name) continue;
        Result r;
        r.name = name;
        std::string got = entry.generate();
        std::string expected = entry.expected();
        r.pass = got == expected;
        r.output = got;
        if (!r.pass) r.output += "--- expected ---\n" + expected;
        return r;
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<Result> run_all() {
    std::vector<Result> out;
    for (const auto& [name, entry] : table()) out.push_back(run(name));
    return out;
}

const char* gf8_qp2_matrix_text() { return kGf8Qp2Matrix; }
const char* gf8_qc3_matrix_text() { return kGf8Qc3Matrix; }

}  // namespace qary::fixtures
