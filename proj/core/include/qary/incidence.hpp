#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qary/extlinalg.hpp"
#include "qary/fields.hpp"
#include "qary/qgraph.hpp"
#include "qary/spaces.hpp"

namespace qary {

/// A representation of an edge: a vector over F_{q^m} of rank weight 2 whose
/// rank support is the edge and which is orthogonal to the anchor vector u.
struct EdgeRep {
    Subspace edge;
    VecExt vector;
};

/// Canonical basis choices used by propagation: the generator of a 1-space
/// is its RREF row; the completion of x inside an edge is the first edge
/// vector outside <x> in value order.
VecFq canonical_generator(const Subspace& vertex);
VecFq canonical_completion(const Subspace& edge, const VecFq& x);

/// v = a*x + b*y with a = -b (u.y)/(u.x); {x, y} must be a basis of the
/// edge and b nonzero.
EdgeRep represent_edge(const ExtField& f, const Subspace& edge, const VecFq& x, const VecFq& y, ExtScalar b);

/// Default representation: b = 1 on the canonical (RREF) basis of the edge.
EdgeRep default_representation(const ExtField& f, const Subspace& edge);

/// Transport rep across a shared vertex onto target_edge: decompose over the
/// canonical basis (x = generator of the shared vertex), carry b unchanged.
EdgeRep propagate(const ExtField& f, const EdgeRep& rep, const Subspace& shared_vertex, const Subspace& target_edge);

/// All q^m - 1 representations of an edge, in alpha-power order; they are
/// exactly the F_{q^m}^*-multiples of any one of them.
std::vector<EdgeRep> all_representations(const ExtField& f, const Subspace& edge);

/// Incidence matrix: one column per edge, in a fixed edge order (canonical
/// unless a fixture or file pins another).
class IncidenceMatrix {
public:
    IncidenceMatrix(std::shared_ptr<const ExtField> field, QGraph graph, std::vector<Subspace> order, MatExt matrix);

    const ExtField& field() const { return *field_; }
    std::shared_ptr<const ExtField> field_ptr() const { return field_; }
    const QGraph& graph() const { return graph_; }
    const std::vector<Subspace>& order() const { return order_; }
    const MatExt& matrix() const { return matrix_; }
    const VecExt& column(std::size_t i) const { return matrix_.cols[i]; }
    std::size_t index_of(const Subspace& edge) const;  // throws if absent

private:
    std::shared_ptr<const ExtField> field_;
    QGraph graph_;
    std::vector<Subspace> order_;
    MatExt matrix_;
};

/// Fix one representation per connected component (the first edge in column
/// order; `initial` overrides it for its component) and propagate along a
/// breadth-first spanning tree of the edge-adjacency structure.
IncidenceMatrix build_incidence(std::shared_ptr<const ExtField> field, const QGraph& g,
                                std::optional<EdgeRep> initial = std::nullopt,
                                std::optional<std::vector<Subspace>> column_order = std::nullopt);

struct AuditReport {
    bool ok = false;
    std::size_t columns_checked = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::string> failures;
};

/// Checks every column's EdgeRep invariants, then re-propagates across every
/// adjacent edge pair and confirms the stored column up to a scalar in
/// F_q^*. Covers all cycles, not just triangles.
AuditReport audit(const IncidenceMatrix& m);

/// Text format, bit-exact:
///   field q=<q> m=<m> modulus=...
///   edges <k>
///   edge <vec>;<vec>     (k lines, column order)
///   <m lines of k entries in a^k / 0 notation>
std::string format_incidence(const IncidenceMatrix& m);
IncidenceMatrix ingest_matrix(std::istream& in);

}  // namespace qary
