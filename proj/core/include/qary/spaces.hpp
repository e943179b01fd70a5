#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qary {

/// Vector over F_q; entries in [0, q).
using VecFq = std::vector<int>;

/// Rectangular matrix over F_q, row-major.
struct MatFq {
    std::size_t cols = 0;
    std::vector<VecFq> rows;
};

/// Base-q integer value of a vector, first entry least significant. This is
/// the total order used for every canonical ordering in the library, so that
/// e1 < e2 < e1+e2 < e3 < ...
std::uint64_t vec_value(const VecFq& v, int q);
VecFq vec_from_value(std::uint64_t value, std::size_t n, int q);

/// Reduced row echelon form (canonical; zero rows dropped).
MatFq rref(const MatFq& m, int q);
std::size_t rank_fq(const MatFq& m, int q);

/// Right kernel of m as a list of basis vectors.
std::vector<VecFq> kernel_fq(const MatFq& m, int q);

/// One solution of a*x = b (free variables set to zero), if consistent.
std::optional<VecFq> solve_fq(const MatFq& a, const VecFq& b, int q);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
MatFq invert_fq(const MatFq& m, int q);

MatFq mat_mul_fq(const MatFq& a, const MatFq& b, int q);
MatFq transpose(const MatFq& m);

/// Subspace of F_q^n in canonical form: basis rows are the RREF of any
/// spanning set, so equality of subspaces is structural equality. Ordered by
/// (ambient, dim, row values); dim-major value order.
class Subspace {
public:
    Subspace(int q, std::size_t ambient, const std::vector<VecFq>& spanning);
    static Subspace zero(int q, std::size_t ambient);

    int q() const { return q_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<VecFq>& basis() const { return rows_; }

    bool contains(const VecFq& v) const;
    bool contains_subspace(const Subspace& other) const;

    /// All q^dim member vectors, in value order; nonzero_vectors drops 0.
    std::vector<VecFq> vectors() const;
    std::vector<VecFq> nonzero_vectors() const;
    /// The 1-dimensional subspaces of this space, in canonical order.
    std::vector<Subspace> lines() const;

    bool operator==(const Subspace& other) const;
    std::strong_ordering operator<=>(const Subspace& other) const;

private:
    int q_;
    std::size_t ambient_;
    std::vector<VecFq> rows_;
};

Subspace span(int q, std::size_t ambient, const std::vector<VecFq>& vectors);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// All k-dimensional subspaces of F_q^n, canonically ordered.
std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k, int q);
/// The whole lattice, dimension-major.
std::vector<Subspace> enumerate_all(std::size_t n, int q);

/// Gaussian binomial [n choose k]_q: the number of k-subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, int q);

/// Text forms: `1,0,1` for vectors, `1,0,0;0,1,0` for subspaces.
std::string format_vec(const VecFq& v);
VecFq parse_vec(const std::string& text, int q);
std::string format_subspace(const Subspace& s);
Subspace parse_subspace(const std::string& text, int q, std::size_t ambient);

}  // namespace qary
