#include "qary/incidence.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qary {

VecFq canonical_generator(const Subspace& vertex) {
    if (vertex.dim() != 1) throw std::invalid_argument("canonical_generator: not a 1-dimensional subspace");
    return vertex.basis().front();
}

VecFq canonical_completion(const Subspace& edge, const VecFq& x) {
    if (edge.dim() != 2) throw std::invalid_argument("canonical_completion: not an edge");
    if (!edge.contains(x)) throw std::invalid_argument("canonical_completion: x not contained in the edge");
    Subspace xline(edge.q(), edge.ambient(), {x});
    for (const VecFq& w : edge.nonzero_vectors())
        if (!xline.contains(w)) return w;
    throw std::logic_error("canonical_completion: no completion found");
}

EdgeRep represent_edge(const ExtField& f, const Subspace& edge, const VecFq& x, const VecFq& y, ExtScalar b) {
    if (b.is_zero()) throw std::invalid_argument("represent_edge: b must be nonzero");
    if (edge.dim() != 2) throw std::invalid_argument("represent_edge: edge must be 2-dimensional");
    Subspace xy(edge.q(), edge.ambient(), {x, y});
    if (!(xy == edge)) throw std::invalid_argument("represent_edge: {x, y} is not a basis of the edge");
    if (static_cast<int>(edge.ambient()) != f.m())
        throw std::invalid_argument("represent_edge: ambient dimension != extension degree m");

    std::vector<ExtScalar> u = f.u_vector();
    ExtScalar ux = dot_ext(f, u, embed(f, x));
    ExtScalar uy = dot_ext(f, u, embed(f, y));
    ExtScalar a = f.neg(f.div(f.mul(b, uy), ux));
    VecExt v = vec_add(f, vec_scale(f, a, embed(f, x)), vec_scale(f, b, embed(f, y)));
    return EdgeRep{edge, std::move(v)};
}

EdgeRep default_representation(const ExtField& f, const Subspace& edge) {
    return represent_edge(f, edge, edge.basis()[0], edge.basis()[1], f.one());
}

EdgeRep propagate(const ExtField& f, const EdgeRep& rep, const Subspace& shared_vertex, const Subspace& target_edge) {
    if (shared_vertex.dim() != 1) throw std::invalid_argument("propagate: shared vertex must be 1-dimensional");
    if (!rep.edge.contains_subspace(shared_vertex))
        throw std::invalid_argument("propagate: shared vertex not on the source edge");
    if (!target_edge.contains_subspace(shared_vertex))
        throw std::invalid_argument("propagate: shared vertex not on the target edge");
    if (rep.edge == target_edge) throw std::invalid_argument("propagate: target edge equals source edge");

    VecFq x = canonical_generator(shared_vertex);
    VecFq y = canonical_completion(rep.edge, x);
    auto [a, b] = decompose_rank2(f, rep.vector, x, y);
    VecFq z = canonical_completion(target_edge, x);
    return represent_edge(f, target_edge, x, z, b);
}

std::vector<EdgeRep> all_representations(const ExtField& f, const Subspace& edge) {
    EdgeRep base = default_representation(f, edge);
    std::vector<EdgeRep> reps;
    reps.reserve(f.group_order());
    std::vector<ExtScalar> u = f.u_vector();
    for (std::uint32_t k = 0; k < f.group_order(); ++k) {
        VecExt v = vec_scale(f, f.alpha_pow(k), base.vector);
        ExtScalar ratio;
        if (!dot_ext(f, u, v).is_zero() || !scalar_ratio(f, base.vector, v, &ratio) || !(rank_support(f, v) == edge))
            throw std::logic_error("all_representations: orbit element violates the representation invariants");
        reps.push_back(EdgeRep{edge, std::move(v)});
    }
    return reps;
}

IncidenceMatrix::IncidenceMatrix(std::shared_ptr<const ExtField> field, QGraph graph, std::vector<Subspace> order,
                                 MatExt matrix)
    : field_(std::move(field)), graph_(std::move(graph)), order_(std::move(order)), matrix_(std::move(matrix)) {
    if (!field_) throw std::invalid_argument("IncidenceMatrix: null field");
    if (field_->q() != graph_.q() || static_cast<std::size_t>(field_->m()) != graph_.v())
        throw std::invalid_argument("IncidenceMatrix: field (q, m) does not match graph (q, v)");
    std::vector<Subspace> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("IncidenceMatrix: duplicate edge in column order");
    if (!(sorted == graph_.edges()))
        throw std::invalid_argument("IncidenceMatrix: column order is not a permutation of the edge set");
    if (matrix_.cols.size() != order_.size() || matrix_.n_rows != static_cast<std::size_t>(field_->m()))
        throw std::invalid_argument("IncidenceMatrix: matrix shape does not match edges x m");
    for (const VecExt& c : matrix_.cols)
        if (c.size() != matrix_.n_rows) throw std::invalid_argument("IncidenceMatrix: ragged column");
}

std::size_t IncidenceMatrix::index_of(const Subspace& edge) const {
    auto it = std::find(order_.begin(), order_.end(), edge);
    if (it == order_.end()) throw std::invalid_argument("IncidenceMatrix: edge not present: " + format_subspace(edge));
    return static_cast<std::size_t>(it - order_.begin());
}

namespace {

// Shared vertex of two distinct edges, if any (distinct 2-spaces meet in
// dimension at most 1).
std::optional<Subspace> shared_vertex_of(const Subspace& a, const Subspace& b) {
    Subspace i = intersect(a, b);
    if (i.dim() == 1) return i;
    return std::nullopt;
}

}  // namespace

IncidenceMatrix build_incidence(std::shared_ptr<const ExtField> field, const QGraph& g, std::optional<EdgeRep> initial,
                                std::optional<std::vector<Subspace>> column_order) {
    if (!field) throw std::invalid_argument("build_incidence: null field");
    if (field->q() != g.q() || static_cast<std::size_t>(field->m()) != g.v())
        throw std::invalid_argument("build_incidence: field (q, m) must match graph (q, v)");
    std::vector<Subspace> order = column_order.value_or(g.edges());

    std::size_t n = order.size();
    std::vector<std::optional<VecExt>> rep(n);

    // Edge adjacency with the shared vertex per pair.
    std::vector<std::vector<std::pair<std::size_t, Subspace>>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto s = shared_vertex_of(order[i], order[j])) {
                adj[i].emplace_back(j, *s);
                adj[j].emplace_back(i, *s);
            }

    std::optional<std::size_t> initial_index;
    if (initial) {
        auto it = std::find(order.begin(), order.end(), initial->edge);
        if (it == order.end())
            throw std::invalid_argument("build_incidence: initial representation is for an edge not in the graph");
        initial_index = static_cast<std::size_t>(it - order.begin());
        ExtScalar dot = dot_ext(*field, field->u_vector(), initial->vector);
        if (!dot.is_zero() || !(rank_support(*field, initial->vector) == initial->edge))
            throw std::invalid_argument("build_incidence: invalid initial representation for its edge");
    }

    for (std::size_t start = 0; start < n; ++start) {
        if (rep[start]) continue;
        // BFS this component to confirm the start edge is its first in order.
        rep[start] = initial && *initial_index == start ? initial->vector : default_representation(*field, order[start]).vector;
        std::vector<std::size_t> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t i = queue[head];
            for (const auto& [j, shared] : adj[i]) {
                if (rep[j]) continue;
                if (initial && j == *initial_index)
                    throw std::invalid_argument(
                        "build_incidence: initial representation must be for the first edge of its component");
                EdgeRep r = propagate(*field, EdgeRep{order[i], *rep[i]}, shared, order[j]);
                rep[j] = r.vector;
                queue.push_back(j);
            }
        }
    }

    MatExt m;
    m.n_rows = static_cast<std::size_t>(field->m());
    for (std::size_t i = 0; i < n; ++i) m.cols.push_back(*rep[i]);
    return IncidenceMatrix(std::move(field), g, std::move(order), std::move(m));
}

AuditReport audit(const IncidenceMatrix& mat) {
    const ExtField& f = mat.field();
    AuditReport r;
    std::vector<ExtScalar> u = f.u_vector();

    for (std::size_t i = 0; i < mat.order().size(); ++i) {
        ++r.columns_checked;
        const VecExt& col = mat.column(i);
        ExtScalar d = dot_ext(f, u, col);
        if (!d.is_zero()) {
            std::ostringstream os;
            os << "column " << i + 1 << " (edge " << format_subspace(mat.order()[i]) << ") not orthogonal to u: u.v = "
               << f.to_power_string(d);
            r.failures.push_back(os.str());
            continue;
        }
        Subspace supp = rank_support(f, col);
        if (!(supp == mat.order()[i])) {
            std::ostringstream os;
            os << "column " << i + 1 << " rank support " << format_subspace(supp) << " != edge "
               << format_subspace(mat.order()[i]);
            r.failures.push_back(os.str());
        }
    }

    if (r.failures.empty()) {
        for (std::size_t i = 0; i < mat.order().size(); ++i) {
            for (std::size_t j = 0; j < mat.order().size(); ++j) {
                if (i == j) continue;
                auto s = shared_vertex_of(mat.order()[i], mat.order()[j]);
                if (!s) continue;
                ++r.pairs_checked;
                EdgeRep prop = propagate(f, EdgeRep{mat.order()[i], mat.column(i)}, *s, mat.order()[j]);
                ExtScalar ratio;
                bool is_mult = scalar_ratio(f, prop.vector, mat.column(j), &ratio);
                int c = 0;
                if (!is_mult || !f.in_base(ratio, &c) || c == 0) {
                    std::ostringstream os;
                    os << "columns " << i + 1 << " -> " << j + 1 << " via vertex " << format_subspace(*s)
                       << ": stored column is not an F_q^*-multiple of the propagated representation (ratio "
                       << (is_mult ? f.to_power_string(ratio) : std::string("none")) << ")";
                    r.failures.push_back(os.str());
                }
            }
        }
    }

    r.ok = r.failures.empty();
    return r;
}

std::string format_incidence(const IncidenceMatrix& m) {
    const ExtField& f = m.field();
    std::ostringstream os;
    os << format_field_spec(f.spec()) << "\n";
    os << "edges " << m.order().size() << "\n";
    for (const Subspace& e : m.order()) os << "edge " << format_subspace(e) << "\n";
    for (int row = 0; row < f.m(); ++row) {
        for (std::size_t i = 0; i < m.order().size(); ++i) {
            if (i) os << " ";
            os << f.to_power_string(m.column(i)[static_cast<std::size_t>(row)]);
        }
        os << "\n";
    }
    return os.str();
}

IncidenceMatrix ingest_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix file: missing field header");
    FieldSpec spec = parse_field_spec(line);
    auto field = std::make_shared<const ExtField>(spec);  // rejects bad specs

    if (!std::getline(in, line)) throw std::invalid_argument("matrix file: missing `edges <k>` line");
    std::istringstream es(line);
    std::string tag;
    std::size_t k = 0;
    es >> tag >> k;
    if (tag != "edges") throw std::invalid_argument("matrix file line 2: expected `edges <k>`, got: " + line);

    std::vector<Subspace> order;
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("matrix file: expected " + std::to_string(k) + " edge lines");
        if (line.rfind("edge ", 0) != 0)
            throw std::invalid_argument("matrix file line " + std::to_string(3 + i) + ": expected `edge <vec>;<vec>`");
        Subspace e = parse_subspace(line.substr(5), spec.q, static_cast<std::size_t>(spec.m));
        if (e.dim() != 2)
            throw std::invalid_argument("matrix file line " + std::to_string(3 + i) + ": edge is not 2-dimensional");
        order.push_back(std::move(e));
    }

    MatExt m;
    m.n_rows = static_cast<std::size_t>(spec.m);
    m.cols.assign(k, VecExt(m.n_rows, ExtScalar{}));
    for (int row = 0; row < spec.m; ++row) {
        if (!std::getline(in, line)) throw std::invalid_argument("matrix file: expected " + std::to_string(spec.m) + " entry rows");
        std::istringstream rs(line);
        for (std::size_t i = 0; i < k; ++i) {
            std::string entry;
            if (!(rs >> entry))
                throw std::invalid_argument("matrix file entry row " + std::to_string(row + 1) + ": expected " +
                                            std::to_string(k) + " entries");
            m.cols[i][static_cast<std::size_t>(row)] = field->parse_scalar(entry);
        }
        std::string extra;
        if (rs >> extra)
            throw std::invalid_argument("matrix file entry row " + std::to_string(row + 1) + ": trailing entry " + extra);
    }

    QGraph g(spec.q, static_cast<std::size_t>(spec.m), order);
    if (g.edges().size() != order.size()) throw std::invalid_argument("matrix file: duplicate edges");
    return IncidenceMatrix(std::move(field), std::move(g), std::move(order), std::move(m));
}

}  // namespace qary
