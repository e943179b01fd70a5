#include "qary/incidence.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "qary/qmatroid.hpp"

using namespace qary;

namespace {

const FieldSpec kGF8{2, 3, {1, 1, 0, 1}};
const FieldSpec kGF27{3, 3, {1, 2, 0, 1}};

VecFq unit(std::size_t n, std::size_t i) {
    VecFq v(n, 0);
    v[i] = 1;
    return v;
}

Subspace edge_of(int q, const VecFq& a, const VecFq& b) { return Subspace(q, a.size(), {a, b}); }

std::shared_ptr<const ExtField> gf8() { return std::make_shared<const ExtField>(kGF8); }
std::shared_ptr<const ExtField> gf27() { return std::make_shared<const ExtField>(kGF27); }

}  // namespace

TEST_CASE("represent_edge solves the orthogonality constraint") {
    auto f27 = gf27();
    // edge <e1,e3> with x=e1, y=e3, b=-1: a = -(-1) alpha^2/1 = alpha^2
    EdgeRep r = represent_edge(*f27, edge_of(3, unit(3, 0), unit(3, 2)), unit(3, 0), unit(3, 2), f27->from_base(2));
    CHECK(r.vector == VecExt{f27->alpha_pow(2), f27->zero(), f27->from_base(2)});

    auto f8 = gf8();
    EdgeRep r8 = represent_edge(*f8, edge_of(2, unit(3, 0), unit(3, 1)), unit(3, 1), unit(3, 0), f8->alpha());
    CHECK(r8.vector == VecExt{f8->alpha(), f8->one(), f8->zero()});

    // Linearity in b: doubling b doubles the representation.
    EdgeRep rb = represent_edge(*f27, edge_of(3, unit(3, 0), unit(3, 1)), unit(3, 0), unit(3, 1), f27->one());
    EdgeRep rb2 = represent_edge(*f27, edge_of(3, unit(3, 0), unit(3, 1)), unit(3, 0), unit(3, 1), f27->from_base(2));
    CHECK(vec_scale(*f27, f27->from_base(2), rb.vector) == rb2.vector);

    CHECK_THROWS_AS(represent_edge(*f8, edge_of(2, unit(3, 0), unit(3, 1)), unit(3, 1), unit(3, 0), f8->zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(represent_edge(*f8, edge_of(2, unit(3, 0), unit(3, 1)), unit(3, 0), unit(3, 2), f8->one()),
                    std::invalid_argument);
}

TEST_CASE("representation invariants hold by construction") {
    auto f8 = gf8();
    VecExt u = f8->u_vector();
    for (const Subspace& e : enumerate_subspaces(3, 2, 2)) {
        EdgeRep r = default_representation(*f8, e);
        CHECK(dot_ext(*f8, u, r.vector).is_zero());
        CHECK(rank_support(*f8, r.vector) == e);
        CHECK(rank_weight(*f8, r.vector) == 2);
    }
}

TEST_CASE("propagation reproduces the GF(27) triangle walk") {
    auto f = gf27();
    Subspace e12 = edge_of(3, unit(3, 0), unit(3, 1));
    Subspace e13 = edge_of(3, unit(3, 0), unit(3, 2));
    Subspace e23 = edge_of(3, unit(3, 1), unit(3, 2));
    EdgeRep v1{e12, {f->alpha(), f->from_base(2), f->zero()}};

    EdgeRep v2 = propagate(*f, v1, Subspace(3, 3, {unit(3, 0)}), e13);
    CHECK(v2.vector == VecExt{f->alpha_pow(2), f->zero(), f->from_base(2)});

    EdgeRep v3 = propagate(*f, v1, Subspace(3, 3, {unit(3, 1)}), e23);
    CHECK(v3.vector == VecExt{f->zero(), f->neg(f->alpha_pow(2)), f->alpha()});

    EdgeRep v3p = propagate(*f, v2, Subspace(3, 3, {unit(3, 2)}), e23);
    CHECK(v3p.vector == VecExt{f->zero(), f->alpha_pow(2), f->neg(f->alpha())});

    // v3 = -v3'
    VecExt neg(3);
    for (std::size_t i = 0; i < 3; ++i) neg[i] = f->neg(v3p.vector[i]);
    CHECK(v3.vector == neg);

    CHECK_THROWS_AS(propagate(*f, v1, Subspace(3, 3, {unit(3, 2)}), e23), std::invalid_argument);
    CHECK_THROWS_AS(propagate(*f, v1, Subspace(3, 3, {unit(3, 0)}), e12), std::invalid_argument);
}

TEST_CASE("build_incidence on q_path2 over GF(8)") {
    auto f = gf8();
    QGraph g = family("q_path2", 2);
    EdgeRep init{edge_of(2, unit(3, 0), unit(3, 1)), {f->alpha(), f->one(), f->zero()}};
    IncidenceMatrix m = build_incidence(f, g, init);

    REQUIRE(m.order().size() == 3);
    CHECK(m.column(0) == VecExt{f->alpha(), f->one(), f->zero()});
    CHECK(m.column(1) == VecExt{f->zero(), f->alpha_pow(2), f->alpha()});
    CHECK(m.column(2) == VecExt{f->alpha(), f->alpha_pow(6), f->alpha()});
    CHECK(vec_add(*f, m.column(0), m.column(1)) == m.column(2));

    CHECK(format_incidence(m) == std::string(fixtures::gf8_qp2_matrix_text()));
}

TEST_CASE("build_incidence single edge and precondition failures") {
    auto f = gf8();
    Subspace e(2, 3, {unit(3, 1), unit(3, 2)});
    QGraph g(2, 3, {e});
    EdgeRep init = default_representation(*f, e);
    IncidenceMatrix m = build_incidence(f, g, init);
    CHECK(m.column(0) == init.vector);

    // Initial rep for an edge that is not first in its component.
    QGraph p2 = family("q_path2", 2);
    EdgeRep second = default_representation(*f, p2.edges()[1]);
    CHECK_THROWS_AS(build_incidence(f, p2, second), std::invalid_argument);

    // Not a valid representation: support mismatch.
    EdgeRep wrong{p2.edges()[0], {f->one(), f->zero(), f->zero()}};
    CHECK_THROWS_AS(build_incidence(f, p2, wrong), std::invalid_argument);

    // Field/graph dimension mismatch.
    QGraph g4(2, 4, {edge_of(2, unit(4, 0), unit(4, 1))});
    CHECK_THROWS_AS(build_incidence(f, g4), std::invalid_argument);
}

TEST_CASE("audit accepts consistent matrices and catches scaled columns") {
    auto f = gf8();
    QGraph tri = family("q_triangle", 2);
    IncidenceMatrix m = build_incidence(f, tri);
    AuditReport ok = audit(m);
    CHECK(ok.ok);
    CHECK(ok.columns_checked == 7);
    CHECK(ok.pairs_checked > 0);

    // Scaling one column by alpha leaves its own invariants intact but
    // breaks F_q^*-consistency with its neighbours.
    MatExt bad = m.matrix();
    bad.cols[3] = vec_scale(*f, f->alpha(), bad.cols[3]);
    IncidenceMatrix mbad(f, tri, m.order(), bad);
    AuditReport fail = audit(mbad);
    CHECK_FALSE(fail.ok);
    for (const std::string& line : fail.failures) CHECK(line.find("F_q^*") != std::string::npos);
}

TEST_CASE("audit across every family at desk scale") {
    for (int q : {2, 3}) {
        for (int v = 3; v <= 4; ++v) {
            FieldSpec spec = q == 3 && v == 4 ? FieldSpec{3, 4, {2, 1, 0, 0, 1}} : default_field_spec(q, v);
            auto f = std::make_shared<const ExtField>(spec);
            CHECK(audit(build_incidence(f, family("complete", q, v))).ok);
            if (v == 4) {
                QGraph path = closure(q, 4, family("path_seed", q, 3).edges());
                QGraph star = closure(q, 4, family("star_seed", q, 3).edges());
                CHECK(audit(build_incidence(f, path)).ok);
                CHECK(audit(build_incidence(f, star)).ok);
            }
        }
        auto f3 = std::make_shared<const ExtField>(default_field_spec(q, 3));
        CHECK(audit(build_incidence(f3, family("q_path2", q))).ok);
    }
}

TEST_CASE("all_representations enumerates the full scalar orbit") {
    auto f8 = gf8();
    Subspace e12 = edge_of(2, unit(3, 0), unit(3, 1));
    std::vector<EdgeRep> reps = all_representations(*f8, e12);
    CHECK(reps.size() == 7);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            ExtScalar ratio;
            CHECK(scalar_ratio(*f8, reps[i].vector, reps[j].vector, &ratio));
            CHECK_FALSE(ratio.is_zero());
        }

    // Completeness oracle: enumerate every a*x + b*y over F_8 x F_8 and keep
    // the vectors that satisfy both representation constraints.
    std::set<VecExt> all_valid;
    VecExt u = f8->u_vector();
    for (std::uint32_t ai = 0; ai < f8->size(); ++ai)
        for (std::uint32_t bi = 0; bi < f8->size(); ++bi) {
            VecExt v = vec_add(*f8, vec_scale(*f8, ExtScalar{ai}, embed(*f8, unit(3, 0))),
                               vec_scale(*f8, ExtScalar{bi}, embed(*f8, unit(3, 1))));
            if (!dot_ext(*f8, u, v).is_zero()) continue;
            if (!(rank_support(*f8, v) == e12)) continue;
            all_valid.insert(v);
        }
    std::set<VecExt> produced;
    for (const EdgeRep& r : reps) produced.insert(r.vector);
    CHECK(all_valid == produced);

    auto f27 = gf27();
    Subspace e23 = edge_of(3, unit(3, 1), unit(3, 2));
    std::vector<EdgeRep> reps27 = all_representations(*f27, e23);
    CHECK(reps27.size() == 26);
    std::set<VecExt> set27;
    for (const EdgeRep& r : reps27) set27.insert(r.vector);
    CHECK(set27.count(VecExt{f27->zero(), f27->neg(f27->alpha_pow(2)), f27->alpha()}) == 1);
    CHECK(set27.count(VecExt{f27->zero(), f27->alpha_pow(2), f27->neg(f27->alpha())}) == 1);
}

TEST_CASE("combination closure on one edge") {
    auto f = gf27();
    Subspace e = edge_of(3, unit(3, 0), unit(3, 1));
    EdgeRep v1 = default_representation(*f, e);
    EdgeRep v2{e, vec_scale(*f, f->alpha_pow(7), v1.vector)};
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
    VecExt u = f->u_vector();
    for (int t = 0; t < 200; ++t) {
        VecExt w = vec_add(*f, vec_scale(*f, ExtScalar{pick(rng)}, v1.vector),
                           vec_scale(*f, ExtScalar{pick(rng)}, v2.vector));
        if (vec_is_zero(w)) continue;
        CHECK(dot_ext(*f, u, w).is_zero());
        CHECK(rank_support(*f, w) == e);
    }
}

TEST_CASE("star linearity: combinations of matched representations") {
    // Matched representations at a vertex: any F_q-combination represents
    // the predicted combined edge.
    for (int q : {2, 3}) {
        auto f = std::make_shared<const ExtField>(default_field_spec(q, 3));
        VecFq x = unit(3, 0);
        Subspace e1 = edge_of(q, x, unit(3, 1));
        Subspace e2 = edge_of(q, x, unit(3, 2));
        EdgeRep v1 = default_representation(*f, e1);
        EdgeRep v2 = propagate(*f, v1, Subspace(q, 3, {x}), e2);
        PrimeField fq(q);
        for (int l1 = 0; l1 < q; ++l1)
            for (int l2 = 0; l2 < q; ++l2) {
                if (l1 == 0 && l2 == 0) continue;
                VecExt w = vec_add(*f, vec_scale(*f, f->from_base(l1), v1.vector),
                                   vec_scale(*f, f->from_base(l2), v2.vector));
                VecFq y(3, 0);
                for (std::size_t k = 0; k < 3; ++k) y[k] = fq.add(fq.mul(l1, unit(3, 1)[k]), fq.mul(l2, unit(3, 2)[k]));
                Subspace predicted = l2 == 0 ? e1 : (l1 == 0 ? e2 : edge_of(q, x, y));
                CHECK(rank_support(*f, w) == predicted);
                CHECK(dot_ext(*f, f->u_vector(), w).is_zero());
            }
    }
}

TEST_CASE("initial scaling multiplies every column") {
    auto f = gf8();
    QGraph tri = family("q_triangle", 2);
    IncidenceMatrix m1 = build_incidence(f, tri);
    EdgeRep scaled{tri.edges().front(),
                   vec_scale(*f, f->alpha(), default_representation(*f, tri.edges().front()).vector)};
    IncidenceMatrix m2 = build_incidence(f, tri, scaled);
    for (std::size_t i = 0; i < m1.order().size(); ++i) {
        ExtScalar ratio;
        REQUIRE(scalar_ratio(*f, m1.column(i), m2.column(i), &ratio));
        CHECK(ratio == f->alpha());
    }
}

TEST_CASE("basis change scales propagated columns by t_i/t_1") {
    // Degree-2 star over GF(27), all basis choices (c, s_i, t_i).
    auto f = gf27();
    PrimeField f3(3);
    VecFq x = unit(3, 0);
    Subspace e1 = edge_of(3, x, unit(3, 1));
    Subspace e2 = edge_of(3, x, unit(3, 2));
    EdgeRep v1 = default_representation(*f, e1);
    auto [a1, b1] = decompose_rank2(*f, v1.vector, x, unit(3, 1));
    EdgeRep v2 = represent_edge(*f, e2, x, unit(3, 2), b1);

    for (int c = 1; c < 3; ++c)
        for (int s1 = 0; s1 < 3; ++s1)
            for (int t1 = 1; t1 < 3; ++t1)
                for (int s2 = 0; s2 < 3; ++s2)
                    for (int t2 = 1; t2 < 3; ++t2) {
                        VecFq cx(3, 0);
                        cx[0] = c;
                        VecFq z1(3, 0), z2(3, 0);
                        for (std::size_t k = 0; k < 3; ++k) {
                            z1[k] = f3.add(f3.mul(s1, x[k]), f3.mul(t1, unit(3, 1)[k]));
                            z2[k] = f3.add(f3.mul(s2, x[k]), f3.mul(t2, unit(3, 2)[k]));
                        }
                        auto [a1p, b1p] = decompose_rank2(*f, v1.vector, cx, z1);
                        EdgeRep v2p = represent_edge(*f, e2, cx, z2, b1p);
                        ExtScalar factor = f->from_base(f3.mul(t2, f3.inv(t1)));
                        CHECK(v2p.vector == vec_scale(*f, factor, v2.vector));
                    }
}

TEST_CASE("disconnected graphs get one free representation per component") {
    auto f = std::make_shared<const ExtField>(FieldSpec{2, 4, {1, 1, 0, 0, 1}});
    QGraph g(2, 4, {edge_of(2, unit(4, 0), unit(4, 1)), edge_of(2, unit(4, 2), unit(4, 3))});
    IncidenceMatrix m = build_incidence(f, g);
    CHECK(audit(m).ok);
    CHECK(m.column(0) == default_representation(*f, g.edges()[0]).vector);
    CHECK(m.column(1) == default_representation(*f, g.edges()[1]).vector);

    // An initial representation for the second component's edge is accepted:
    // that edge is the first of its own component.
    EdgeRep init{g.edges()[1], vec_scale(*f, f->alpha(), default_representation(*f, g.edges()[1]).vector)};
    IncidenceMatrix m2 = build_incidence(f, g, init);
    CHECK(m2.column(1) == init.vector);
    CHECK(m2.column(0) == m.column(0));
}

TEST_CASE("matrix file ingest") {
    std::istringstream in(fixtures::gf8_qc3_matrix_text());
    IncidenceMatrix m = ingest_matrix(in);
    CHECK(m.order().size() == 7);
    CHECK(audit(m).ok);
    CHECK(format_incidence(m) == std::string(fixtures::gf8_qc3_matrix_text()));

    std::istringstream in3(fixtures::gf8_qp2_matrix_text());
    IncidenceMatrix m3 = ingest_matrix(in3);
    CHECK(audit(m3).ok);

    // Wrong m: the entries and edges disagree with the header.
    std::istringstream bad(
        "field q=2 m=4 modulus=1,1,0,0,1\nedges 1\nedge 1,0,0;0,1,0\na^1\na^0\n0\n0\n");
    CHECK_THROWS_AS(ingest_matrix(bad), std::invalid_argument);

    std::istringstream bad2("field q=2 m=3 modulus=1,0,0,1\nedges 0\n");
    CHECK_THROWS_AS(ingest_matrix(bad2), std::invalid_argument);  // reducible modulus

    std::istringstream bad3("field q=2 m=3 modulus=1,1,0,1\nedges 1\nedge 1,0,0;0,1,0\na^1 a^1\na^0\n0\n");
    CHECK_THROWS_AS(ingest_matrix(bad3), std::invalid_argument);  // trailing entry

    std::istringstream dup(
        "field q=2 m=3 modulus=1,1,0,1\nedges 2\nedge 1,0,0;0,1,0\nedge 1,0,0;0,1,0\na^1 a^1\na^0 a^0\n0 0\n");
    CHECK_THROWS_AS(ingest_matrix(dup), std::invalid_argument);  // duplicate edges
}
