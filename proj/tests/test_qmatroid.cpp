#include "qary/qmatroid.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"

using namespace qary;

namespace {

const FieldSpec kGF8{2, 3, {1, 1, 0, 1}};

VecFq unit(std::size_t n, std::size_t i) {
    VecFq v(n, 0);
    v[i] = 1;
    return v;
}

QMatroid reference_3col() {
    std::istringstream in(fixtures::gf8_qp2_matrix_text());
    IncidenceMatrix m = ingest_matrix(in);
    return QMatroid(m.field_ptr(), m.matrix());
}

QMatroid reference_7col() {
    std::istringstream in(fixtures::gf8_qc3_matrix_text());
    IncidenceMatrix m = ingest_matrix(in);
    return QMatroid(m.field_ptr(), m.matrix());
}

Subspace full_space(int q, std::size_t n) {
    std::vector<VecFq> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit(n, i));
    return Subspace(q, n, rows);
}

MatExt random_invertible_ext(const ExtField& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    while (true) {
        MatExt a;
        a.n_rows = n;
        a.cols.assign(n, VecExt(n));
        for (auto& col : a.cols)
            for (auto& e : col) e = ExtScalar{pick(rng)};
        if (rank_ext(f, a) == n) return a;
    }
}

MatFq random_invertible_fq(int q, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, q - 1);
    while (true) {
        MatFq b;
        b.cols = n;
        b.rows.assign(n, VecFq(n, 0));
        for (auto& row : b.rows)
            for (auto& e : row) e = pick(rng);
        if (rank_fq(b, q) == n) return b;
    }
}

}  // namespace

TEST_CASE("rank oracle on the 3-column matrix") {
    QMatroid m = reference_3col();
    CHECK(m.ground_dim() == 3);
    CHECK(m.rank(full_space(2, 3)) == 2);
    CHECK(m.rank(Subspace::zero(2, 3)) == 0);
    // The third column is the F_2-sum of the first two, but is itself nonzero.
    CHECK(m.rank(Subspace(2, 3, {unit(3, 2)})) == 1);
}

TEST_CASE("rank is basis independent") {
    QMatroid m = reference_7col();
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> entry(0, 1);
    std::uniform_int_distribution<int> nrows(1, 5);
    for (int t = 0; t < 100; ++t) {
        std::vector<VecFq> gens;
        for (int i = 0; i < nrows(rng); ++i) {
            VecFq v(7);
            for (auto& e : v) e = entry(rng);
            gens.push_back(v);
        }
        Subspace a(2, 7, gens);
        // Same row space presented by a redundant, non-canonical matrix.
        MatFq y;
        y.cols = 7;
        y.rows = gens;
        y.rows.insert(y.rows.end(), a.basis().begin(), a.basis().end());
        std::size_t direct = rank_ext(m.field(), mul_by_fq_transpose(m.field(), m.matrix(), y));
        CHECK(direct == m.rank(a));
    }
}

TEST_CASE("axioms hold exhaustively on the 3-column matrix") {
    QMatroid m = reference_3col();
    AxiomReport r = check_axioms(m, CheckMode::exhaustive);
    CHECK(r.subspaces == 16);
    CHECK(r.pairs_checked == 256);
    CHECK(r.ok());
}

TEST_CASE("axioms hold on the 7-column matrix with sampled semimodularity") {
    QMatroid m = reference_7col();
    AxiomReport r = check_axioms(m, CheckMode::sample, 12345, 2000);
    CHECK(r.subspaces == 29212);
    CHECK(r.pairs_checked == 2000);
    CHECK(r.ok());
}

TEST_CASE("axioms hold for every family matrix at q=2, v=3") {
    // Exhaustive (r3) is gated at ground dimension 5; the 7-column families
    // run with sampled semimodularity instead.
    auto f = std::make_shared<const ExtField>(kGF8);
    for (const char* fam : {"q_path2", "q_triangle", "complete"}) {
        IncidenceMatrix m = build_incidence(f, family(fam, 2));
        QMatroid qm(m.field_ptr(), m.matrix());
        CheckMode mode = qm.ground_dim() <= 5 ? CheckMode::exhaustive : CheckMode::sample;
        CHECK(check_axioms(qm, mode, 777, 5000).ok());
    }
}

TEST_CASE("corrupted rank oracles are rejected with witnesses") {
    // r(A) = dim A + 1 on one subspace breaks (r1).
    Subspace bad(2, 3, {unit(3, 0)});
    auto rank_fn = [&](const Subspace& a) -> std::size_t { return a.dim() + (a == bad ? 1 : 0); };
    AxiomReport r = check_axioms_fn(2, 3, rank_fn, CheckMode::exhaustive);
    CHECK_FALSE(r.r1.pass);
    CHECK(r.r1.witness.find("1,0,0") != std::string::npos);

    // A rank function that drops on a cover breaks (r2).
    auto drop_fn = [&](const Subspace& a) -> std::size_t { return a.dim() == 1 ? 1 : 0; };
    AxiomReport r2 = check_axioms_fn(2, 3, drop_fn, CheckMode::exhaustive);
    CHECK_FALSE(r2.r2.pass);
    CHECK_FALSE(r2.r2.witness.empty());
}

TEST_CASE("row transforms preserve the rank function") {
    QMatroid m = reference_3col();
    const ExtField& f = m.field();

    MatExt id;
    id.n_rows = 3;
    id.cols.assign(3, VecExt(3, ExtScalar{}));
    for (std::size_t i = 0; i < 3; ++i) id.cols[i][i] = f.one();
    CHECK(verify_row_invariance(m, id).ok);
    CHECK(row_transform(m, id).matrix().cols == m.matrix().cols);

    MatExt alpha_id = id;
    for (std::size_t i = 0; i < 3; ++i) alpha_id.cols[i][i] = f.alpha();
    CHECK(verify_row_invariance(m, alpha_id).ok);

    std::mt19937_64 rng(47);
    for (int t = 0; t < 20; ++t) {
        MatExt a = random_invertible_ext(f, 3, rng);
        InvarianceReport r = verify_row_invariance(m, a);
        CHECK(r.ok);
        CHECK(r.subspaces_checked == 16);
    }

    MatExt singular = id;
    singular.cols[2] = singular.cols[1];
    CHECK_THROWS_AS(row_transform(m, singular), std::invalid_argument);
}

TEST_CASE("column transforms give isomorphic matroids") {
    QMatroid m = reference_3col();
    int q = m.field().q();

    MatFq idm;
    idm.cols = 3;
    idm.rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto [mt, iso] = col_transform(m, idm);
    CHECK(iso.apply(full_space(q, 3)) == full_space(q, 3));
    CHECK(verify_col_isomorphism(m, idm).ok);

    MatFq perm;
    perm.cols = 3;
    perm.rows = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(verify_col_isomorphism(m, perm).ok);

    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        MatFq b = random_invertible_fq(q, 3, rng);
        InvarianceReport r = verify_col_isomorphism(m, b);
        CHECK(r.ok);
        CHECK(r.subspaces_checked == 16);
    }

    MatFq singular;
    singular.cols = 3;
    singular.rows = {{1, 0, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(col_transform(m, singular), std::domain_error);
}

TEST_CASE("signatures are transform invariant") {
    QMatroid m = reference_3col();
    SignatureTable base = rank_signature(m);
    CHECK(base[{3, 2}] == 1);
    CHECK(base[{0, 0}] == 1);

    std::mt19937_64 rng(59);
    for (int t = 0; t < 5; ++t) {
        CHECK(rank_signature(row_transform(m, random_invertible_ext(m.field(), 3, rng))) == base);
        auto [mt, iso] = col_transform(m, random_invertible_fq(2, 3, rng));
        CHECK(rank_signature(mt) == base);
    }

    QMatroid m7 = reference_7col();
    SignatureTable sig7 = rank_signature(m7);
    CHECK(sig7[{7, 2}] == 1);
    for (const auto& [key, count] : sig7)
        if (key.first == 1) CHECK(key.second <= 1);

    MatExt zero;
    zero.n_rows = 3;
    zero.cols.assign(3, VecExt(3, ExtScalar{}));
    QMatroid mz(m.field_ptr(), zero);
    for (const auto& [key, count] : rank_signature(mz)) CHECK(key.second == 0);
}

TEST_CASE("compare: rebuilds of the same graph are isomorphic") {
    auto f = std::make_shared<const ExtField>(kGF8);
    QGraph g = family("q_path2", 2);
    IncidenceMatrix m1 = build_incidence(f, g);

    SUBCASE("identical matrices") {
        CompareReport r = compare_incidence_matroids(m1, m1);
        CHECK(r.isomorphic);
        REQUIRE(r.global_scale.has_value());
        CHECK(*r.global_scale == f->one());
    }

    SUBCASE("initial representation scaled by alpha") {
        EdgeRep init{g.edges().front(), vec_scale(*f, f->alpha(), default_representation(*f, g.edges().front()).vector)};
        IncidenceMatrix m2 = build_incidence(f, g, init);
        CompareReport r = compare_incidence_matroids(m1, m2);
        CHECK(r.isomorphic);
        CHECK(*r.global_scale == f->alpha());
        CHECK(r.signature_match);
    }

    SUBCASE("permuted edge order") {
        std::vector<Subspace> order = g.edges();
        std::rotate(order.begin(), order.begin() + 1, order.end());
        IncidenceMatrix m2 = build_incidence(f, g, std::nullopt, order);
        CompareReport r = compare_incidence_matroids(m1, m2);
        CHECK(r.isomorphic);
    }

    SUBCASE("different graphs are rejected") {
        QGraph tri = family("q_triangle", 2);
        IncidenceMatrix m2 = build_incidence(f, tri);
        CompareReport r = compare_incidence_matroids(m1, m2);
        CHECK_FALSE(r.isomorphic);
        CHECK(r.message.find("different graphs") != std::string::npos);
    }

    SUBCASE("a non-representation column is rejected") {
        MatExt bad = m1.matrix();
        bad.cols[1] = vec_add(*f, bad.cols[1], bad.cols[0]);  // support moves off the edge
        IncidenceMatrix m2(f, g, m1.order(), bad);
        CompareReport r = compare_incidence_matroids(m1, m2);
        CHECK_FALSE(r.isomorphic);
    }

    SUBCASE("different moduli are reported, not compared") {
        auto f2 = std::make_shared<const ExtField>(FieldSpec{2, 3, {1, 0, 1, 1}});  // x^3 + x^2 + 1
        IncidenceMatrix m2 = build_incidence(f2, g);
        CompareReport r = compare_incidence_matroids(m1, m2);
        CHECK_FALSE(r.isomorphic);
        CHECK(r.message.find("field spec") != std::string::npos);
    }
}

TEST_CASE("compare: independently scaled components have no single witness") {
    auto f = std::make_shared<const ExtField>(FieldSpec{2, 4, {1, 1, 0, 0, 1}});
    QGraph g(2, 4, {Subspace(2, 4, {unit(4, 0), unit(4, 1)}), Subspace(2, 4, {unit(4, 2), unit(4, 3)})});
    IncidenceMatrix m1 = build_incidence(f, g);
    // Scale only the second component's representation.
    EdgeRep init{g.edges()[1], vec_scale(*f, f->alpha(), default_representation(*f, g.edges()[1]).vector)};
    IncidenceMatrix m2 = build_incidence(f, g, init);
    CHECK(audit(m2).ok);
    CompareReport r = compare_incidence_matroids(m1, m2);
    CHECK_FALSE(r.isomorphic);
    CHECK(r.message.find("independently scaled") != std::string::npos);
}

TEST_CASE("uniform pattern of the reference matroids") {
    UniformPattern p3 = uniform_pattern(reference_3col());
    CHECK(p3.holds);
    CHECK(p3.essential_columns == 2);
    CHECK(p3.overall_rank == 2);

    UniformPattern p7 = uniform_pattern(reference_7col());
    CHECK(p7.holds);
    CHECK(p7.essential_columns == 3);
    CHECK(p7.overall_rank == 2);
}
