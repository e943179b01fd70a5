#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qary/spaces.hpp"

namespace qary {

/// A q-ary graph: ambient space F_q^v, edges are 2-dimensional subspaces,
/// kept deduplicated in canonical order. The q-graph property (every
/// 2-space through a vertex inside its neighbourhood space is an edge) is
/// checked by validate(), not enforced on construction, so raw seed graphs
/// can be represented and closed.
class QGraph {
public:
    QGraph(int q, std::size_t v, std::vector<Subspace> edges);

    int q() const { return q_; }
    std::size_t v() const { return v_; }
    const std::vector<Subspace>& edges() const { return edges_; }
    bool has_edge(const Subspace& e) const;

    /// All 1-spaces lying on at least one edge (isolated vertices are
    /// ignored), in canonical order.
    std::vector<Subspace> vertices() const;
    bool has_vertex(const Subspace& x) const;

    std::vector<Subspace> edges_through(const Subspace& x) const;
    /// N(x): the sum of all edges through x. Throws if x is not a vertex.
    Subspace neighbourhood_space(const Subspace& x) const;
    std::size_t degree(const Subspace& x) const;

private:
    int q_;
    std::size_t v_;
    std::vector<Subspace> edges_;
};

struct GraphCheck {
    bool ok = false;
    std::string message;
    std::optional<Subspace> witness_vertex;
    std::optional<Subspace> missing_edge;
    /// Soft condition: vertices of positive degree span the ambient space.
    bool spans_ambient = false;
};

/// Alternating vertex/edge sequence; consecutive vertices are distinct and
/// every edge contains its two endpoints.
struct Walk {
    std::vector<Subspace> vertices;
    std::vector<Subspace> edges;

    std::size_t length() const { return edges.size(); }
};

/// Checks the q-graph property vertex by vertex (vertices in canonical
/// order) and reports the first violation with a witness.
GraphCheck validate(const QGraph& g);

/// Smallest edge set containing the seed and satisfying the q-graph
/// property: fixpoint of per-vertex completion.
QGraph closure(int q, std::size_t v, const std::vector<Subspace>& seed_edges);

/// True iff edges(h) is a subset of edges(g) and h satisfies the q-graph
/// property.
bool is_subgraph(const QGraph& g, const QGraph& h);

std::optional<Walk> find_path(const QGraph& g, const Subspace& from, const Subspace& to);
bool is_connected(const QGraph& g);
/// Connected components as edge-index groups, in canonical order.
std::vector<std::vector<std::size_t>> edge_components(const QGraph& g);

/// A closed walk with all edges distinct, if one exists.
std::optional<Walk> find_cycle(const QGraph& g);
bool is_forest(const QGraph& g);
bool is_tree(const QGraph& g);

struct CountCheck {
    bool ok = false;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    std::string detail;
};

/// Degree-sum identity: sum_v [deg(v) choose 1]_q == (q+1) * #edges.
CountCheck check_degree_sum(const QGraph& g);
/// Tree count identity: #edges * q + 1 == #vertices. Throws on non-trees;
/// vacuous pass on the empty graph.
CountCheck check_tree_count(const QGraph& g);

/// Built-in families: q_path2, q_triangle, complete (n = ambient dim),
/// path_seed (n = classical path length), star_seed (n = ray count).
QGraph family(const std::string& name, int q, std::optional<int> n = std::nullopt);

struct GraphFile {
    QGraph graph;
    bool closed = false;
};

/// Text format, bit-exact:
///   graph q=<q> v=<v> closed=<true|false>
///   edge <vec>;<vec>        (one line per edge, canonical order)
std::string format_graph(const QGraph& g, bool closed);
GraphFile parse_graph(std::istream& in);

}  // namespace qary
