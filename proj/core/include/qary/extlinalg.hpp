#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qary/fields.hpp"
#include "qary/spaces.hpp"

namespace qary {

/// Vector over F_{q^m}.
using VecExt = std::vector<ExtScalar>;

/// Matrix over F_{q^m}, column-major: columns index edges in an incidence
/// matrix, so the column count is the ground dimension of the q-matroid.
struct MatExt {
    std::size_t n_rows = 0;
    std::vector<VecExt> cols;
};

ExtScalar dot_ext(const ExtField& f, const VecExt& a, const VecExt& b);

/// Entrywise embedding of an F_q vector into F_{q^m}^n.
VecExt embed(const ExtField& f, const VecFq& x);

VecExt vec_add(const ExtField& f, const VecExt& a, const VecExt& b);
VecExt vec_sub(const ExtField& f, const VecExt& a, const VecExt& b);
VecExt vec_scale(const ExtField& f, ExtScalar c, const VecExt& a);
bool vec_is_zero(const VecExt& a);

/// n x m matrix over F_q; row i holds the coordinates of entry i over the
/// basis (1, alpha, ..., alpha^{m-1}). Its column space, read in F_q^n, is
/// the rank support.
MatFq expand(const ExtField& f, const VecExt& v);

/// The minimal F_q-subspace of F_q^n whose extension contains v.
Subspace rank_support(const ExtField& f, const VecExt& v);
std::size_t rank_weight(const ExtField& f, const VecExt& v);

/// Unique (a, b) with v = a*x + b*y, given that {x, y} is an F_q-basis of
/// the rank support of v. Throws std::invalid_argument naming the side that
/// failed ("basis" or "support").
std::pair<ExtScalar, ExtScalar> decompose_rank2(const ExtField& f, const VecExt& v, const VecFq& x, const VecFq& y);

/// Rank over F_{q^m} by exact Gaussian elimination.
std::size_t rank_ext(const ExtField& f, const MatExt& m);

MatExt mat_ext_mul(const ExtField& f, const MatExt& a, const MatExt& b);

/// G * Y^T for an F_q matrix Y (rows spanning a subspace of F_q^n).
MatExt mul_by_fq_transpose(const ExtField& f, const MatExt& g, const MatFq& y);

/// If b = c*a entrywise for a single nonzero c, returns true and stores c.
bool scalar_ratio(const ExtField& f, const VecExt& a, const VecExt& b, ExtScalar* ratio);

std::string format_vec_ext(const ExtField& f, const VecExt& v, bool coords = false);

}  // namespace qary
