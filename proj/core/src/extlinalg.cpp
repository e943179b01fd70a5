#include "qary/extlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qary {

ExtScalar dot_ext(const ExtField& f, const VecExt& a, const VecExt& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_ext: length mismatch");
    ExtScalar acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

VecExt embed(const ExtField& f, const VecFq& x) {
    VecExt v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = f.from_base(x[i]);
    return v;
}

VecExt vec_add(const ExtField& f, const VecExt& a, const VecExt& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    VecExt out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

VecExt vec_sub(const ExtField& f, const VecExt& a, const VecExt& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    VecExt out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

VecExt vec_scale(const ExtField& f, ExtScalar c, const VecExt& a) {
    VecExt out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

bool vec_is_zero(const VecExt& a) {
    return std::all_of(a.begin(), a.end(), [](ExtScalar s) { return s.is_zero(); });
}

MatFq expand(const ExtField& f, const VecExt& v) {
    MatFq out;
    out.cols = static_cast<std::size_t>(f.m());
    for (ExtScalar s : v) out.rows.push_back(f.coords(s));
    return out;
}

Subspace rank_support(const ExtField& f, const VecExt& v) {
    MatFq e = expand(f, v);
    // Columns of the expansion, read as vectors in F_q^n.
    std::vector<VecFq> cols;
    for (int j = 0; j < f.m(); ++j) {
        VecFq c(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = e.rows[i][static_cast<std::size_t>(j)];
        cols.push_back(std::move(c));
    }
    return Subspace(f.q(), v.size(), cols);
}

std::size_t rank_weight(const ExtField& f, const VecExt& v) { return rank_support(f, v).dim(); }

std::pair<ExtScalar, ExtScalar> decompose_rank2(const ExtField& f, const VecExt& v, const VecFq& x, const VecFq& y) {
    std::size_t n = v.size();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("decompose_rank2: length mismatch");
    Subspace xy(f.q(), n, {x, y});
    if (xy.dim() != 2) throw std::invalid_argument("decompose_rank2: basis side failed ({x, y} not independent over F_q)");
    if (!(rank_support(f, v) == xy))
        throw std::invalid_argument("decompose_rank2: support side failed (rank support of v != <x, y>)");

    // Two positions where [x; y] is invertible: the pivot columns of its RREF.
    MatFq m;
    m.cols = n;
    m.rows = {x, y};
    MatFq r = rref(m, f.q());
    std::size_t i = 0, j = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (r.rows[0][c] != 0) { i = c; break; }
    for (std::size_t c = i + 1; c < n; ++c)
        if (r.rows[1][c] != 0) { j = c; break; }

    ExtScalar xi = f.from_base(x[i]), xj = f.from_base(x[j]);
    ExtScalar yi = f.from_base(y[i]), yj = f.from_base(y[j]);
    ExtScalar det = f.sub(f.mul(xi, yj), f.mul(xj, yi));
    ExtScalar a = f.div(f.sub(f.mul(v[i], yj), f.mul(v[j], yi)), det);
    ExtScalar b = f.div(f.sub(f.mul(v[j], xi), f.mul(v[i], xj)), det);

    // The 2x2 solve pins (a, b); the support precondition makes it exact on
    // every coordinate, which we verify.
    VecExt check = vec_add(f, vec_scale(f, a, embed(f, x)), vec_scale(f, b, embed(f, y)));
    if (check != v) throw std::invalid_argument("decompose_rank2: support side failed (v is not an F_{q^m}-combination of x, y)");
    return {a, b};
}

std::size_t rank_ext(const ExtField& f, const MatExt& m) {
    if (m.cols.empty()) return 0;
    std::vector<VecExt> rows(m.n_rows, VecExt(m.cols.size()));
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        if (m.cols[j].size() != m.n_rows) throw std::invalid_argument("rank_ext: ragged matrix");
        for (std::size_t i = 0; i < m.n_rows; ++i) rows[i][j] = m.cols[j][i];
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols.size() && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        ExtScalar inv = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < rows[rank].size(); ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            ExtScalar c = rows[i][col];
            for (std::size_t j = col; j < rows[i].size(); ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

MatExt mat_ext_mul(const ExtField& f, const MatExt& a, const MatExt& b) {
    if (a.cols.size() != b.n_rows) throw std::invalid_argument("mat_ext_mul: shape mismatch");
    MatExt out;
    out.n_rows = a.n_rows;
    out.cols.assign(b.cols.size(), VecExt(a.n_rows, ExtScalar{}));
    for (std::size_t j = 0; j < b.cols.size(); ++j)
        for (std::size_t k = 0; k < a.cols.size(); ++k) {
            ExtScalar c = b.cols[j][k];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < a.n_rows; ++i)
                out.cols[j][i] = f.add(out.cols[j][i], f.mul(c, a.cols[k][i]));
        }
    return out;
}

MatExt mul_by_fq_transpose(const ExtField& f, const MatExt& g, const MatFq& y) {
    if (y.cols != g.cols.size()) throw std::invalid_argument("mul_by_fq_transpose: shape mismatch");
    MatExt out;
    out.n_rows = g.n_rows;
    out.cols.assign(y.rows.size(), VecExt(g.n_rows, ExtScalar{}));
    for (std::size_t r = 0; r < y.rows.size(); ++r)
        for (std::size_t k = 0; k < y.cols; ++k) {
            int c = y.rows[r][k];
            if (c == 0) continue;
            for (std::size_t i = 0; i < g.n_rows; ++i)
                out.cols[r][i] = f.add(out.cols[r][i], f.mul(f.from_base(c), g.cols[k][i]));
        }
    return out;
}

bool scalar_ratio(const ExtField& f, const VecExt& a, const VecExt& b, ExtScalar* ratio) {
    if (a.size() != b.size()) return false;
    ExtScalar c = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        ExtScalar r = f.div(b[i], a[i]);
        if (c.is_zero()) c = r;
        else if (!(c == r)) return false;
    }
    if (c.is_zero()) return false;  // both vectors zero: no well-defined ratio
    if (ratio) *ratio = c;
    return true;
}

std::string format_vec_ext(const ExtField& f, const VecExt& v, bool coords) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += coords ? f.to_coord_string(v[i]) : f.to_power_string(v[i]);
    }
    s += "]";
    return s;
}

}  // namespace qary
