#include "qary/qmatroid.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qary {

namespace {

std::vector<std::uint64_t> subspace_key(const Subspace& a) {
    std::vector<std::uint64_t> key;
    key.reserve(a.dim() + 1);
    key.push_back(a.dim());
    for (const VecFq& row : a.basis()) key.push_back(vec_value(row, a.q()));
    return key;
}

constexpr std::uint64_t kLatticeGuard = 1ull << 17;

std::vector<Subspace> lattice_or_throw(std::size_t n, int q) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
    if (total > kLatticeGuard)
        throw std::invalid_argument("subspace lattice of F_" + std::to_string(q) + "^" + std::to_string(n) +
                                    " has " + std::to_string(total) + " elements, beyond the exhaustive-check guard");
    return enumerate_all(n, q);
}

MatFq basis_matrix(const Subspace& a) {
    MatFq y;
    y.cols = a.ambient();
    y.rows = a.basis();
    return y;
}

}  // namespace

struct QMatroid::RankMemo {
    std::mutex mu;
    std::map<std::vector<std::uint64_t>, std::size_t> values;
};

QMatroid::QMatroid(std::shared_ptr<const ExtField> field, MatExt g)
    : field_(std::move(field)), g_(std::move(g)), memo_(std::make_shared<RankMemo>()) {
    if (!field_) throw std::invalid_argument("QMatroid: null field");
    if (g_.cols.empty()) throw std::invalid_argument("QMatroid: ground space must have dimension >= 1");
    for (const VecExt& c : g_.cols)
        if (c.size() != g_.n_rows) throw std::invalid_argument("QMatroid: ragged matrix");
}

std::size_t QMatroid::rank(const Subspace& a) const {
    if (a.ambient() != ground_dim() || a.q() != field_->q())
        throw std::invalid_argument("QMatroid::rank: subspace not in the ground space F_q^n");
    if (a.dim() == 0) return 0;
    std::vector<std::uint64_t> key = subspace_key(a);
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        if (auto it = memo_->values.find(key); it != memo_->values.end()) return it->second;
    }
    std::size_t r = rank_ext(*field_, mul_by_fq_transpose(*field_, g_, basis_matrix(a)));
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->values.emplace(std::move(key), r);
    return r;
}

AxiomReport check_axioms_fn(int q, std::size_t n, const std::function<std::size_t(const Subspace&)>& rank_fn,
                            CheckMode mode, std::uint64_t seed, std::size_t sample_pairs) {
    AxiomReport rep;
    rep.mode = mode;
    rep.seed = seed;
    std::vector<Subspace> lattice = lattice_or_throw(n, q);
    rep.subspaces = lattice.size();

    // (r1) 0 <= r(A) <= dim A on every subspace.
    for (const Subspace& a : lattice) {
        std::size_t r = rank_fn(a);
        if (r > a.dim()) {
            rep.r1.pass = false;
            std::ostringstream os;
            os << "A=" << format_subspace(a) << " r(A)=" << r << " > dim(A)=" << a.dim();
            rep.r1.witness = os.str();
            break;
        }
    }

    // (r2) monotone on covering pairs; transitivity gives the full order.
    // Covers of A are read off as hyperplanes of each B, enumerated once per
    // dimension in B-coordinates.
    std::map<std::size_t, std::vector<Subspace>> hyperplanes;
    for (const Subspace& b : lattice) {
        if (!rep.r2.pass) break;
        std::size_t k = b.dim();
        if (k == 0) continue;
        std::size_t rb = rank_fn(b);
        auto it = hyperplanes.find(k);
        if (it == hyperplanes.end()) it = hyperplanes.emplace(k, enumerate_subspaces(k, k - 1, q)).first;
        MatFq bbasis = basis_matrix(b);
        for (const Subspace& c : it->second) {
            MatFq rows = mat_mul_fq(basis_matrix(c), bbasis, q);
            Subspace a(q, n, rows.rows);
            std::size_t ra = rank_fn(a);
            if (ra > rb) {
                rep.r2.pass = false;
                std::ostringstream os;
                os << "A=" << format_subspace(a) << " B=" << format_subspace(b) << " r(A)=" << ra << " > r(B)=" << rb;
                rep.r2.witness = os.str();
                break;
            }
        }
    }

    // (r3) semimodularity over ordered pairs.
    auto check_pair = [&](const Subspace& a, const Subspace& b) -> bool {
        std::size_t lhs = rank_fn(sum(a, b)) + rank_fn(intersect(a, b));
        std::size_t rhs = rank_fn(a) + rank_fn(b);
        ++rep.pairs_checked;
        if (lhs <= rhs) return true;
        rep.r3.pass = false;
        std::ostringstream os;
        os << "A=" << format_subspace(a) << " B=" << format_subspace(b) << " r(A+B)+r(A^B)=" << lhs
           << " > r(A)+r(B)=" << rhs;
        rep.r3.witness = os.str();
        return false;
    };
    if (mode == CheckMode::exhaustive) {
        // All-pairs is gated at desk scale (the F_2^5 lattice squared);
        // larger lattices must use seeded sampling.
        if (lattice.size() > 3000)
            throw std::invalid_argument("exhaustive semimodularity over " + std::to_string(lattice.size()) +
                                        "^2 subspace pairs is beyond desk scale; use sample mode");
        for (const Subspace& a : lattice) {
            if (!rep.r3.pass) break;
            for (const Subspace& b : lattice)
                if (!check_pair(a, b)) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
        for (std::size_t t = 0; t < sample_pairs && rep.r3.pass; ++t) check_pair(lattice[pick(rng)], lattice[pick(rng)]);
    }
    return rep;
}

AxiomReport check_axioms(const QMatroid& m, CheckMode mode, std::uint64_t seed, std::size_t sample_pairs) {
    return check_axioms_fn(m.field().q(), m.ground_dim(), [&m](const Subspace& a) { return m.rank(a); }, mode, seed,
                           sample_pairs);
}

QMatroid row_transform(const QMatroid& m, const MatExt& a) {
    const ExtField& f = m.field();
    if (a.cols.size() != m.matrix().n_rows || a.n_rows != m.matrix().n_rows)
        throw std::invalid_argument("row_transform: A must be square with the row count of G");
    if (rank_ext(f, a) != a.n_rows) throw std::invalid_argument("row_transform: A is singular");
    return QMatroid(m.field_ptr(), mat_ext_mul(f, a, m.matrix()));
}

namespace {

std::vector<Subspace> scope_subspaces(std::size_t n, int q, CheckMode mode, std::uint64_t seed, std::size_t samples) {
    if (mode == CheckMode::exhaustive) return lattice_or_throw(n, q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim_pick(0, n);
    std::uniform_int_distribution<int> entry(0, q - 1);
    std::vector<Subspace> out;
    out.reserve(samples);
    for (std::size_t t = 0; t < samples; ++t) {
        std::size_t d = dim_pick(rng);
        std::vector<VecFq> rows;
        for (std::size_t i = 0; i < d; ++i) {
            VecFq v(n, 0);
            for (std::size_t j = 0; j < n; ++j) v[j] = entry(rng);
            rows.push_back(std::move(v));
        }
        out.emplace_back(q, n, rows);
    }
    return out;
}

}  // namespace

InvarianceReport verify_row_invariance(const QMatroid& m, const MatExt& a, CheckMode mode, std::uint64_t seed,
                                       std::size_t samples) {
    QMatroid t = row_transform(m, a);
    InvarianceReport rep;
    for (const Subspace& x : scope_subspaces(m.ground_dim(), m.field().q(), mode, seed, samples)) {
        ++rep.subspaces_checked;
        if (m.rank(x) != t.rank(x)) {
            std::ostringstream os;
            os << "rank changed on X=" << format_subspace(x) << ": " << m.rank(x) << " -> " << t.rank(x);
            rep.message = os.str();
            return rep;
        }
    }
    rep.ok = true;
    rep.message = "rank function unchanged on " + std::to_string(rep.subspaces_checked) + " subspaces";
    return rep;
}

Subspace IsoMap::apply(const Subspace& x) const {
    MatFq y = basis_matrix(x);
    MatFq image = mat_mul_fq(y, transpose(b_inv), q);
    return Subspace(q, x.ambient(), image.rows);
}

std::pair<QMatroid, IsoMap> col_transform(const QMatroid& m, const MatFq& b) {
    const ExtField& f = m.field();
    std::size_t n = m.ground_dim();
    if (b.rows.size() != n || b.cols != n) throw std::invalid_argument("col_transform: B must be n x n");
    MatFq b_inv = invert_fq(b, f.q());  // throws if singular

    MatExt gb;
    gb.n_rows = m.matrix().n_rows;
    gb.cols.assign(n, VecExt(gb.n_rows, ExtScalar{}));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            int c = b.rows[k][j];
            if (c == 0) continue;
            for (std::size_t i = 0; i < gb.n_rows; ++i)
                gb.cols[j][i] = f.add(gb.cols[j][i], f.mul(f.from_base(c), m.matrix().cols[k][i]));
        }
    return {QMatroid(m.field_ptr(), std::move(gb)), IsoMap{f.q(), b, std::move(b_inv)}};
}

InvarianceReport verify_col_isomorphism(const QMatroid& m, const MatFq& b, CheckMode mode, std::uint64_t seed,
                                        std::size_t samples) {
    auto [t, iso] = col_transform(m, b);
    InvarianceReport rep;
    for (const Subspace& x : scope_subspaces(m.ground_dim(), m.field().q(), mode, seed, samples)) {
        ++rep.subspaces_checked;
        std::size_t lhs = m.rank(x), rhs = t.rank(iso.apply(x));
        if (lhs != rhs) {
            std::ostringstream os;
            os << "r_M(X) != r_M'(phi(X)) on X=" << format_subspace(x) << ": " << lhs << " != " << rhs;
            rep.message = os.str();
            return rep;
        }
    }
    rep.ok = true;
    rep.message = "rank isomorphism holds on " + std::to_string(rep.subspaces_checked) + " subspaces";
    return rep;
}

SignatureTable rank_signature(const QMatroid& m) {
    SignatureTable t;
    for (const Subspace& a : lattice_or_throw(m.ground_dim(), m.field().q())) ++t[{a.dim(), m.rank(a)}];
    return t;
}

std::string format_signature(const SignatureTable& t) {
    std::ostringstream os;
    for (const auto& [key, count] : t) os << "dim " << key.first << " rank " << key.second << ": " << count << "\n";
    return os.str();
}

CompareReport compare_incidence_matroids(const IncidenceMatrix& m1, const IncidenceMatrix& m2, CheckMode mode,
                                         std::uint64_t seed, std::size_t samples) {
    CompareReport rep;
    if (!(m1.graph().edges() == m2.graph().edges()) || m1.field().q() != m2.field().q()) {
        rep.message = "matrices are over different graphs";
        return rep;
    }
    if (!(m1.field().spec() == m2.field().spec())) {
        rep.message = "matrices use different field specs; witness factorization requires a common field";
        return rep;
    }
    const ExtField& f = m1.field();
    std::size_t n = m1.order().size();

    // Per-edge ratio of the aligned columns.
    std::vector<ExtScalar> gamma(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = m1.index_of(m2.order()[j]);
        if (!scalar_ratio(f, m1.column(i), m2.column(j), &gamma[j])) {
            rep.message = "columns for edge " + format_subspace(m2.order()[j]) +
                          " are not F_{q^m}^*-multiples; not representations of the same edge";
            return rep;
        }
    }
    ExtScalar global = gamma[0];
    std::vector<int> col_scalar(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        ExtScalar c = f.div(gamma[j], global);
        int cv = 0;
        if (!f.in_base(c, &cv) || cv == 0) {
            rep.message = "column for edge " + format_subspace(m2.order()[j]) + " differs by " +
                          f.to_power_string(gamma[j]) + ", not an F_q^* multiple of the global scale " +
                          f.to_power_string(global) + " (independently scaled components?)";
            return rep;
        }
        col_scalar[j] = cv;
    }

    // Witness column operation: permutation combined with the per-column
    // scalars, so that global * (G1 * B) == G2 entry for entry.
    MatFq b;
    b.cols = n;
    b.rows.assign(n, VecFq(n, 0));
    for (std::size_t j = 0; j < n; ++j) b.rows[m1.index_of(m2.order()[j])][j] = col_scalar[j];

    QMatroid q1(m1.field_ptr(), m1.matrix());
    auto [qt, iso] = col_transform(q1, b);
    MatExt expect = qt.matrix();
    for (std::size_t j = 0; j < n; ++j)
        if (!(vec_scale(f, global, expect.cols[j]) == m2.matrix().cols[j])) {
            rep.message = "internal witness verification failed (this indicates a bug)";
            return rep;
        }

    QMatroid q2(m2.field_ptr(), m2.matrix());
    for (const Subspace& x : scope_subspaces(n, f.q(), mode, seed, samples)) {
        ++rep.subspaces_checked;
        if (q1.rank(x) != q2.rank(iso.apply(x))) {
            rep.message = "rank isomorphism fails on X=" + format_subspace(x);
            return rep;
        }
    }
    rep.signature_match = rank_signature(q1) == rank_signature(q2);
    if (!rep.signature_match) {
        rep.message = "rank signatures differ";
        return rep;
    }

    rep.isomorphic = true;
    rep.global_scale = global;
    rep.iso = iso;
    std::ostringstream os;
    os << "isomorphic: M2 = " << f.to_power_string(global) << " * (M1 * B); rank isomorphism verified on "
       << rep.subspaces_checked << " subspaces; signatures match";
    rep.message = os.str();
    return rep;
}

UniformPattern uniform_pattern(const QMatroid& m) {
    const ExtField& f = m.field();
    UniformPattern up;
    std::size_t n = m.ground_dim();
    std::size_t mm = static_cast<std::size_t>(f.m());

    // Expand each column of G to a vector over F_q of length m*m.
    std::vector<VecFq> expanded;
    for (const VecExt& col : m.matrix().cols) {
        VecFq e;
        e.reserve(mm * col.size());
        for (ExtScalar s : col)
            for (int c : f.coords(s)) e.push_back(c);
        expanded.push_back(std::move(e));
    }
    std::size_t width = expanded.front().size();

    // Greedy maximal F_q-independent set of columns, left to right.
    std::vector<std::size_t> essential;
    MatFq acc;
    acc.cols = width;
    for (std::size_t j = 0; j < n; ++j) {
        MatFq trial = acc;
        trial.rows.push_back(expanded[j]);
        if (rank_fq(trial, f.q()) > acc.rows.size()) {
            acc = rref(trial, f.q());
            essential.push_back(j);
        }
    }
    std::size_t s = essential.size();
    up.essential_columns = s;

    // Coefficients C with G = G_E * C over F_q.
    MatFq e_cols;  // width x s, columns are the essential expanded vectors
    e_cols.cols = s;
    e_cols.rows.assign(width, VecFq(s, 0));
    for (std::size_t t = 0; t < s; ++t)
        for (std::size_t r = 0; r < width; ++r) e_cols.rows[r][t] = expanded[essential[t]][r];
    MatFq c;  // s x n
    c.cols = n;
    c.rows.assign(s, VecFq(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<VecFq> sol = solve_fq(e_cols, expanded[j], f.q());
        if (!sol) throw std::logic_error("uniform_pattern: dependent column has no F_q expression");
        for (std::size_t t = 0; t < s; ++t) c.rows[t][j] = (*sol)[t];
    }

    MatExt ge;
    ge.n_rows = m.matrix().n_rows;
    for (std::size_t t = 0; t < s; ++t) ge.cols.push_back(m.matrix().cols[essential[t]]);
    std::size_t k = rank_ext(f, ge);
    up.overall_rank = rank_ext(f, m.matrix());

    // The essential-column matroid must be uniform U_{k,s} ...
    QMatroid me(m.field_ptr(), ge);
    bool uniform = true;
    for (const Subspace& z : lattice_or_throw(s, f.q())) {
        if (me.rank(z) != std::min(k, z.dim())) {
            uniform = false;
            break;
        }
    }
    // ... and the full rank function must factor through the projection.
    if (uniform) {
        MatFq ct = transpose(c);
        for (const Subspace& a : lattice_or_throw(n, f.q())) {
            MatFq image = mat_mul_fq(basis_matrix(a), ct, f.q());
            Subspace psi(f.q(), s, image.rows);
            if (m.rank(a) != std::min(k, psi.dim())) {
                uniform = false;
                break;
            }
        }
    }
    up.holds = uniform;
    std::ostringstream os;
    os << "essential columns: " << s << "; overall rank: " << up.overall_rank << "; uniform U_{" << k << "," << s
       << "} pattern via F_q-projection: " << (uniform ? "yes" : "no");
    up.detail = os.str();
    return up;
}

}  // namespace qary
