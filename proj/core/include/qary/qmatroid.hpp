#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qary/extlinalg.hpp"
#include "qary/fields.hpp"
#include "qary/incidence.hpp"
#include "qary/spaces.hpp"

namespace qary {

/// Representable q-matroid M(G): ground space F_q^n (n = columns of G),
/// rank r(A) = rank over F_{q^m} of G * Y^T for any Y whose rows span A.
class QMatroid {
public:
    QMatroid(std::shared_ptr<const ExtField> field, MatExt g);

    const ExtField& field() const { return *field_; }
    std::shared_ptr<const ExtField> field_ptr() const { return field_; }
    const MatExt& matrix() const { return g_; }
    std::size_t ground_dim() const { return g_.cols.size(); }

    /// Memoized per canonical subspace; basis-independent. Safe to call
    /// from concurrent workers sharing one matroid.
    std::size_t rank(const Subspace& a) const;

private:
    struct RankMemo;
    std::shared_ptr<const ExtField> field_;
    MatExt g_;
    std::shared_ptr<RankMemo> memo_;
};

enum class CheckMode { exhaustive, sample };

struct AxiomCheck {
    bool pass = true;
    std::string witness;
};

struct AxiomReport {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = 0;
    std::size_t subspaces = 0;
    std::size_t pairs_checked = 0;
    AxiomCheck r1, r2, r3;

    bool ok() const { return r1.pass && r2.pass && r3.pass; }
};

constexpr std::uint64_t kDefaultSeed = 20250901;
constexpr std::size_t kDefaultSamplePairs = 100000;

/// (r1) bounded by dimension on every subspace; (r2) monotone on covering
/// pairs; (r3) semimodular, exhaustive over ordered pairs or on a seeded
/// sample. Witnesses carried on failure. The rank function is injectable so
/// tests can run negative controls against corrupted oracles.
AxiomReport check_axioms_fn(int q, std::size_t n, const std::function<std::size_t(const Subspace&)>& rank_fn,
                            CheckMode mode, std::uint64_t seed = kDefaultSeed,
                            std::size_t sample_pairs = kDefaultSamplePairs);
AxiomReport check_axioms(const QMatroid& m, CheckMode mode, std::uint64_t seed = kDefaultSeed,
                         std::size_t sample_pairs = kDefaultSamplePairs);

struct InvarianceReport {
    bool ok = false;
    std::size_t subspaces_checked = 0;
    std::string message;
};

/// Row operations over F_{q^m}: A * G represents the same q-matroid.
QMatroid row_transform(const QMatroid& m, const MatExt& a);
InvarianceReport verify_row_invariance(const QMatroid& m, const MatExt& a, CheckMode mode = CheckMode::exhaustive,
                                       std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// Ground-space isomorphism induced by a column operation B: X maps to
/// { B^{-1} x : x in X }.
struct IsoMap {
    int q = 2;
    MatFq b;
    MatFq b_inv;

    Subspace apply(const Subspace& x) const;
};

/// Column operations over F_q: G * B represents an isomorphic q-matroid
/// with witness isomorphism phi.
std::pair<QMatroid, IsoMap> col_transform(const QMatroid& m, const MatFq& b);
InvarianceReport verify_col_isomorphism(const QMatroid& m, const MatFq& b, CheckMode mode = CheckMode::exhaustive,
                                        std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// (dim, rank) -> count of subspaces; invariant under row transforms and
/// column transforms.
using SignatureTable = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;
SignatureTable rank_signature(const QMatroid& m);
std::string format_signature(const SignatureTable& t);

struct CompareReport {
    bool isomorphic = false;
    std::string message;
    /// Witnesses: M2 = global_scale * (M1 * B), B a column operation over
    /// F_q composed of the edge permutation and per-column F_q^* scalars.
    std::optional<ExtScalar> global_scale;
    std::optional<IsoMap> iso;
    std::size_t subspaces_checked = 0;
    bool signature_match = false;
};

/// Factor the difference between two incidence matrices of the same graph
/// into the constructive moves (global F_{q^m}^* scaling, edge reorder,
/// per-column F_q^* scalars), then verify the induced rank-function
/// isomorphism exhaustively (small lattices) or on a seeded sample.
CompareReport compare_incidence_matroids(const IncidenceMatrix& m1, const IncidenceMatrix& m2,
                                         CheckMode mode = CheckMode::exhaustive, std::uint64_t seed = kDefaultSeed,
                                         std::size_t samples = 1000);

struct UniformPattern {
    bool holds = false;
    std::size_t essential_columns = 0;
    std::size_t overall_rank = 0;
    std::string detail;
};

/// Column-reduce G over F_q to the essential columns G_E (a maximal
/// F_q-independent set) and test whether r(A) = min(k, dim psi(A)) for the
/// induced projection psi onto the essential coordinates: the rank pattern
/// of a uniform q-matroid pulled back along an F_q-linear map.
UniformPattern uniform_pattern(const QMatroid& m);

}  // namespace qary
