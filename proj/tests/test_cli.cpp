#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qary/incidence.hpp"
#include "qary/qgraph.hpp"

using namespace qary;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    RunResult r;
    r.code = qary::cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("build piped into stats") {
    RunResult built = invoke({"graph", "build", "--family", "q_triangle", "--q", "2"});
    REQUIRE(built.code == 0);
    CHECK(built.out.rfind("graph q=2 v=3 closed=true\n", 0) == 0);

    RunResult stats = invoke({"graph", "stats"}, built.out);
    CHECK(stats.code == 0);
    CHECK(stats.out.find("edges: 7") != std::string::npos);
    CHECK(stats.out.find("vertices: 7") != std::string::npos);
    CHECK(stats.out.find("sum_v [deg(v) 1]_q = 21 == 21") != std::string::npos);
    CHECK(stats.out.find("forest: no") != std::string::npos);
}

TEST_CASE("close expands a seed") {
    RunResult seed = invoke({"graph", "build", "--family", "path_seed", "--q", "2", "--n", "4"});
    REQUIRE(seed.code == 0);
    CHECK(seed.out.rfind("graph q=2 v=5 closed=false\n", 0) == 0);

    RunResult closed = invoke({"graph", "close"}, seed.out);
    REQUIRE(closed.code == 0);
    std::istringstream is(closed.out);
    GraphFile gf = parse_graph(is);
    CHECK(gf.closed);
    CHECK(gf.graph.edges().size() == 7);
}

TEST_CASE("validate distinguishes closed and raw graphs") {
    RunResult seed = invoke({"graph", "build", "--family", "path_seed", "--q", "2", "--n", "4"});
    RunResult bad = invoke({"graph", "validate"}, seed.out);
    CHECK(bad.code == qary::cli::kValidationFailure);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("0,1,0,0,0") != std::string::npos);  // witness vertex <e2>

    RunResult tri = invoke({"graph", "build", "--family", "q_triangle", "--q", "2"});
    RunResult good = invoke({"graph", "validate"}, tri.out);
    CHECK(good.code == 0);
    CHECK(good.out.rfind("PASS", 0) == 0);
}

TEST_CASE("path between vertices") {
    RunResult tri = invoke({"graph", "build", "--family", "q_triangle", "--q", "2"});
    RunResult path = invoke({"graph", "path", "--from", "1,0,0", "--to", "0,1,0"}, tri.out);
    CHECK(path.code == 0);
    CHECK(path.out.find("path of length") != std::string::npos);
}

TEST_CASE("incidence build reproduces the pinned matrix") {
    RunResult p2 = invoke({"graph", "build", "--family", "q_path2", "--q", "2"});
    std::ofstream("cli_qp2.qgraph") << p2.out;
    RunResult built = invoke({"incidence", "build", "--graph", "cli_qp2.qgraph", "--field", "q=2 m=3 modulus=1,1,0,1",
                           "--initial", "a,1,0"});
    REQUIRE(built.code == 0);
    CHECK(built.out == std::string(fixtures::gf8_qp2_matrix_text()));
    std::remove("cli_qp2.qgraph");
}

TEST_CASE("incidence audit accepts the reference matrix and rejects a scaled column") {
    RunResult ok = invoke({"incidence", "audit"}, fixtures::gf8_qc3_matrix_text());
    CHECK(ok.code == 0);
    CHECK(ok.out.find("audit: PASS") != std::string::npos);

    std::istringstream is(fixtures::gf8_qp2_matrix_text());
    IncidenceMatrix m = ingest_matrix(is);
    MatExt bad = m.matrix();
    bad.cols[1] = vec_scale(m.field(), m.field().alpha(), bad.cols[1]);
    IncidenceMatrix mbad(m.field_ptr(), m.graph(), m.order(), bad);
    RunResult fail = invoke({"incidence", "audit"}, format_incidence(mbad));
    CHECK(fail.code == qary::cli::kValidationFailure);
    CHECK(fail.out.find("audit: FAIL") != std::string::npos);
}

TEST_CASE("incidence reps lists the full orbit") {
    RunResult r = invoke({"incidence", "reps", "--edge", "1,0,0;0,1,0", "--field", "q=2 m=3 modulus=1,1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("representations: 7") != std::string::npos);

    RunResult rc = invoke({"incidence", "reps", "--edge", "1,0,0;0,1,0", "--field", "q=2 m=3 modulus=1,1,0,1",
                        "--coords"});
    CHECK(rc.code == 0);
    CHECK(rc.out.find("(0,1,0)") != std::string::npos);
}

TEST_CASE("matroid verbs") {
    RunResult rank = invoke({"matroid", "rank", "--matrix", "-", "--subspace", "0,0,1"},
                         fixtures::gf8_qp2_matrix_text());
    CHECK(rank.code == 0);
    CHECK(rank.out == "rank: 1\n");

    RunResult ax = invoke({"matroid", "axioms", "--matrix", "-"}, fixtures::gf8_qp2_matrix_text());
    CHECK(ax.code == 0);
    CHECK(ax.out.find("axiom r1: PASS") != std::string::npos);
    CHECK(ax.out.find("axiom r3: PASS") != std::string::npos);
    CHECK(ax.out.find("mode: exhaustive pairs=256") != std::string::npos);

    RunResult axs = invoke({"matroid", "axioms", "--matrix", "-", "--mode", "sample", "--pairs", "500", "--seed", "9"},
                        fixtures::gf8_qc3_matrix_text());
    CHECK(axs.code == 0);
    CHECK(axs.out.find("mode: sample seed=9 pairs=500") != std::string::npos);

    std::ofstream("cli_a.qim") << fixtures::gf8_qp2_matrix_text();
    std::ofstream("cli_b.qim") << fixtures::gf8_qp2_matrix_text();
    RunResult cmp = invoke({"matroid", "compare", "--a", "cli_a.qim", "--b", "cli_b.qim"});
    CHECK(cmp.code == 0);
    CHECK(cmp.out.rfind("PASS", 0) == 0);
    std::remove("cli_a.qim");
    std::remove("cli_b.qim");

    RunResult sig = invoke({"matroid", "signature", "--matrix", "-"}, fixtures::gf8_qp2_matrix_text());
    CHECK(sig.code == 0);
    CHECK(sig.out.find("dim 3 rank 2: 1") != std::string::npos);
    CHECK(sig.out.find("essential columns: 2") != std::string::npos);
}

TEST_CASE("fixtures all pass") {
    RunResult all = invoke({"fixture", "run", "--name", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);

    RunResult one = invoke({"fixture", "run", "--name", "gf27-triangle"});
    CHECK(one.code == 0);
    CHECK(one.out.find("v3 == -v3' : PASS") != std::string::npos);

    RunResult list = invoke({"fixture", "list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("gf8-qp2-matrix") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    std::string tri = invoke({"graph", "build", "--family", "q_triangle", "--q", "2"}).out;
    CHECK(invoke({"graph", "build", "--family", "q_triangle", "--q", "2"}).out == tri);
    CHECK(invoke({"graph", "stats"}, tri).out == invoke({"graph", "stats"}, tri).out);

    std::vector<std::string> sampled{"matroid", "axioms", "--matrix", "-", "--mode", "sample",
                                     "--pairs", "300", "--seed", "42"};
    CHECK(invoke(sampled, fixtures::gf8_qc3_matrix_text()).out ==
          invoke(sampled, fixtures::gf8_qc3_matrix_text()).out);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"graph", "build", "--family", "nope", "--q", "2"}).code == qary::cli::kParseError);
    CHECK(invoke({"graph", "frobnicate"}).code == qary::cli::kParseError);
    CHECK(invoke({"fixture", "run", "--name", "missing"}).code == qary::cli::kParseError);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"graph", "validate"}, "graph q=4 v=3 closed=false\n").code == qary::cli::kParseError);
}
