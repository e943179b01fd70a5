#include "qary/spaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qary/fields.hpp"

namespace qary {

std::uint64_t vec_value(const VecFq& v, int q) {
    std::uint64_t value = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        value = value * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(v[i]);
    return value;
}

VecFq vec_from_value(std::uint64_t value, std::size_t n, int q) {
    VecFq v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<int>(value % static_cast<std::uint64_t>(q));
        value /= static_cast<std::uint64_t>(q);
    }
    return v;
}

MatFq rref(const MatFq& m, int q) {
    const PrimeField& f = prime_field(q);
    MatFq out;
    out.cols = m.cols;
    std::vector<VecFq> rows = m.rows;
    for (const VecFq& r : rows)
        if (r.size() != m.cols) throw std::invalid_argument("rref: ragged matrix");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        int inv = f.inv(rows[pivot_row][col]);
        for (std::size_t j = col; j < m.cols; ++j) rows[pivot_row][j] = f.mul(rows[pivot_row][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            int c = rows[i][col];
            for (std::size_t j = col; j < m.cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[pivot_row][j]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank_fq(const MatFq& m, int q) { return rref(m, q).rows.size(); }

std::vector<VecFq> kernel_fq(const MatFq& m, int q) {
    const PrimeField& f = prime_field(q);
    MatFq r = rref(m, q);
    std::vector<int> pivot_col_of_row(r.rows.size(), -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        for (std::size_t j = 0; j < m.cols; ++j)
            if (r.rows[i][j] != 0) {
                pivot_col_of_row[i] = static_cast<int>(j);
                is_pivot[j] = true;
                break;
            }
    }
    std::vector<VecFq> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        VecFq v(m.cols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[pivot_col_of_row[i]] = f.neg(r.rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VecFq> solve_fq(const MatFq& a, const VecFq& b, int q) {
    if (a.rows.size() != b.size()) throw std::invalid_argument("solve_fq: shape mismatch");
    const PrimeField& f = prime_field(q);
    MatFq aug;
    aug.cols = a.cols + 1;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        VecFq row = a.rows[i];
        row.push_back(b[i]);
        aug.rows.push_back(std::move(row));
    }
    MatFq red = rref(aug, q);
    VecFq x(a.cols, 0);
    for (const VecFq& row : red.rows) {
        std::size_t p = 0;
        while (p < aug.cols && row[p] == 0) ++p;
        if (p == a.cols) return std::nullopt;  // pivot in the constant column
        x[p] = row[a.cols];
    }
    // Pivot variables carry the constants only when free columns are zeroed,
    // which holds with free variables set to zero.
    VecFq check(b.size(), 0);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) check[i] = f.add(check[i], f.mul(a.rows[i][j], x[j]));
    if (check != b) return std::nullopt;
    return x;
}

MatFq invert_fq(const MatFq& m, int q) {
    const PrimeField& f = prime_field(q);
    std::size_t n = m.rows.size();
    if (m.cols != n) throw std::invalid_argument("invert_fq: matrix not square");
    std::vector<VecFq> aug(n, VecFq(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m.rows[i][j];
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && aug[sel][col] == 0) ++sel;
        if (sel == n) throw std::domain_error("invert_fq: matrix is singular");
        std::swap(aug[col], aug[sel]);
        int inv = f.inv(aug[col][col]);
        for (std::size_t j = 0; j < 2 * n; ++j) aug[col][j] = f.mul(aug[col][j], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            int c = aug[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] = f.sub(aug[i][j], f.mul(c, aug[col][j]));
        }
    }
    MatFq out;
    out.cols = n;
    out.rows.assign(n, VecFq(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.rows[i][j] = aug[i][n + j];
    return out;
}

MatFq mat_mul_fq(const MatFq& a, const MatFq& b, int q) {
    const PrimeField& f = prime_field(q);
    if (a.cols != b.rows.size()) throw std::invalid_argument("mat_mul_fq: shape mismatch");
    MatFq out;
    out.cols = b.cols;
    out.rows.assign(a.rows.size(), VecFq(b.cols, 0));
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            int c = a.rows[i][k];
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.rows[i][j] = f.add(out.rows[i][j], f.mul(c, b.rows[k][j]));
        }
    return out;
}

MatFq transpose(const MatFq& m) {
    MatFq out;
    out.cols = m.rows.size();
    out.rows.assign(m.cols, VecFq(m.rows.size(), 0));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.rows[j][i] = m.rows[i][j];
    return out;
}

Subspace::Subspace(int q, std::size_t ambient, const std::vector<VecFq>& spanning) : q_(q), ambient_(ambient) {
    if (!is_prime(q)) throw std::invalid_argument("Subspace: q must be prime");
    for (const VecFq& v : spanning) {
        if (v.size() != ambient) throw std::invalid_argument("Subspace: vector length != ambient dimension");
        for (int e : v)
            if (e < 0 || e >= q) throw std::invalid_argument("Subspace: entry out of [0, q)");
    }
    MatFq m;
    m.cols = ambient;
    m.rows = spanning;
    rows_ = rref(m, q).rows;
}

Subspace Subspace::zero(int q, std::size_t ambient) { return Subspace(q, ambient, {}); }

bool Subspace::contains(const VecFq& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    const PrimeField& f = prime_field(q_);
    VecFq r = v;
    for (const VecFq& row : rows_) {
        std::size_t p = 0;
        while (p < ambient_ && row[p] == 0) ++p;
        if (r[p] != 0) {
            int c = r[p];
            for (std::size_t j = p; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
        }
    }
    return std::all_of(r.begin(), r.end(), [](int e) { return e == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (other.ambient_ != ambient_ || other.q_ != q_)
        throw std::invalid_argument("Subspace::contains_subspace: ambient mismatch");
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const VecFq& v) { return contains(v); });
}

std::vector<VecFq> Subspace::vectors() const {
    const PrimeField& f = prime_field(q_);
    std::vector<VecFq> out;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim(); ++i) count *= static_cast<std::uint64_t>(q_);
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        VecFq coeff = vec_from_value(t, dim(), q_);
        VecFq v(ambient_, 0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] = f.add(v[j], f.mul(coeff[i], rows_[i][j]));
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [this](const VecFq& a, const VecFq& b) { return vec_value(a, q_) < vec_value(b, q_); });
    return out;
}

std::vector<VecFq> Subspace::nonzero_vectors() const {
    std::vector<VecFq> out = vectors();
    out.erase(out.begin());  // value order puts the zero vector first
    return out;
}

std::vector<Subspace> Subspace::lines() const {
    std::set<Subspace> seen;
    for (const VecFq& v : nonzero_vectors()) seen.insert(Subspace(q_, ambient_, {v}));
    return {seen.begin(), seen.end()};
}

bool Subspace::operator==(const Subspace& other) const {
    return q_ == other.q_ && ambient_ == other.ambient_ && rows_ == other.rows_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
    if (auto c = q_ <=> other.q_; c != 0) return c;
    if (auto c = ambient_ <=> other.ambient_; c != 0) return c;
    if (auto c = rows_.size() <=> other.rows_.size(); c != 0) return c;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (auto c = vec_value(rows_[i], q_) <=> vec_value(other.rows_[i], q_); c != 0) return c;
    return std::strong_ordering::equal;
}

Subspace span(int q, std::size_t ambient, const std::vector<VecFq>& vectors) { return Subspace(q, ambient, vectors); }

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.q() != b.q()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<VecFq> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.q(), a.ambient(), rows);
}

// Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
// intersection on the right.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.q() != b.q()) throw std::invalid_argument("intersect: ambient mismatch");
    std::size_t n = a.ambient();
    MatFq m;
    m.cols = 2 * n;
    for (const VecFq& r : a.basis()) {
        VecFq row(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
        m.rows.push_back(std::move(row));
    }
    for (const VecFq& r : b.basis()) {
        VecFq row(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = r[j];
        m.rows.push_back(std::move(row));
    }
    MatFq red = rref(m, a.q());
    std::vector<VecFq> inter;
    for (const VecFq& row : red.rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
        if (left_zero) inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
    return Subspace(a.q(), n, inter);
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k, int q) {
    if (k > n) throw std::invalid_argument("enumerate_subspaces: k > n");
    std::vector<Subspace> out;
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;

    auto emit_for_pivots = [&]() {
        // Free positions: non-pivot columns to the right of each row's pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        std::uint64_t count = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) count *= static_cast<std::uint64_t>(q);
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<VecFq> rows(k, VecFq(n, 0));
            for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
            std::uint64_t v = t;
            for (const auto& [ri, cj] : free_pos) {
                rows[ri][cj] = static_cast<int>(v % static_cast<std::uint64_t>(q));
                v /= static_cast<std::uint64_t>(q);
            }
            out.emplace_back(q, n, rows);
        }
    };

    if (k == 0) {
        out.push_back(Subspace::zero(q, n));
        return out;
    }
    // Walk all k-combinations of pivot columns.
    while (true) {
        emit_for_pivots();
        std::size_t i = k;
        while (i-- > 0) {
            if (pivots[i] < n - (k - i)) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

std::vector<Subspace> enumerate_all(std::size_t n, int q) {
    std::vector<Subspace> out;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Subspace> layer = enumerate_subspaces(n, k, q);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, int q) {
    if (k > n) throw std::invalid_argument("gaussian_binomial: k > n");
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(n + 1, 0);
        next[0] = 1;
        std::uint64_t qk = 1;
        for (std::size_t j = 1; j <= i; ++j) {
            qk *= static_cast<std::uint64_t>(q);
            next[j] = row[j - 1] + row[j] * qk;
        }
        row = std::move(next);
    }
    return row[k];
}

std::string format_vec(const VecFq& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

VecFq parse_vec(const std::string& text, int q) {
    VecFq v;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        int e = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad vector entry: " + item);
        if (e < 0 || e >= q) throw std::invalid_argument("vector entry out of [0, q): " + item);
        v.push_back(e);
    }
    if (v.empty()) throw std::invalid_argument("empty vector text");
    return v;
}

std::string format_subspace(const Subspace& s) {
    std::string out;
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
        if (i) out += ";";
        out += format_vec(s.basis()[i]);
    }
    if (out.empty()) out = "0";  // zero subspace
    return out;
}

Subspace parse_subspace(const std::string& text, int q, std::size_t ambient) {
    if (text == "0") return Subspace::zero(q, ambient);
    std::vector<VecFq> rows;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) rows.push_back(parse_vec(item, q));
    for (const VecFq& r : rows)
        if (r.size() != ambient) throw std::invalid_argument("subspace vector has wrong length: " + text);
    return Subspace(q, ambient, rows);
}

}  // namespace qary
