#include "qary/qgraph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qary/fields.hpp"

namespace qary {

QGraph::QGraph(int q, std::size_t v, std::vector<Subspace> edges) : q_(q), v_(v), edges_(std::move(edges)) {
    if (!is_prime(q_)) throw std::invalid_argument("QGraph: q must be prime");
    for (const Subspace& e : edges_) {
        if (e.q() != q_ || e.ambient() != v_) throw std::invalid_argument("QGraph: edge ambient mismatch");
        if (e.dim() != 2) throw std::invalid_argument("QGraph: edges must be 2-dimensional, got dim " + std::to_string(e.dim()));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool QGraph::has_edge(const Subspace& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Subspace> QGraph::vertices() const {
    std::set<Subspace> seen;
    for (const Subspace& e : edges_)
        for (const Subspace& line : e.lines()) seen.insert(line);
    return {seen.begin(), seen.end()};
}

bool QGraph::has_vertex(const Subspace& x) const {
    if (x.dim() != 1) return false;
    return std::any_of(edges_.begin(), edges_.end(), [&](const Subspace& e) { return e.contains_subspace(x); });
}

std::vector<Subspace> QGraph::edges_through(const Subspace& x) const {
    std::vector<Subspace> out;
    for (const Subspace& e : edges_)
        if (e.contains_subspace(x)) out.push_back(e);
    return out;
}

Subspace QGraph::neighbourhood_space(const Subspace& x) const {
    std::vector<Subspace> inc = edges_through(x);
    if (inc.empty()) throw std::invalid_argument("neighbourhood_space: " + format_subspace(x) + " is not a vertex");
    Subspace n = inc.front();
    for (std::size_t i = 1; i < inc.size(); ++i) n = sum(n, inc[i]);
    return n;
}

std::size_t QGraph::degree(const Subspace& x) const { return neighbourhood_space(x).dim() - 1; }

namespace {

// All 2-spaces through x inside the space n, canonically ordered.
std::vector<Subspace> planes_through(const Subspace& x, const Subspace& n) {
    std::set<Subspace> out;
    const VecFq& gen = x.basis().front();
    for (const VecFq& w : n.nonzero_vectors()) {
        if (x.contains(w)) continue;
        out.insert(Subspace(x.q(), x.ambient(), {gen, w}));
    }
    return {out.begin(), out.end()};
}

}  // namespace

GraphCheck validate(const QGraph& g) {
    GraphCheck r;
    Subspace covered = Subspace::zero(g.q(), g.v());
    for (const Subspace& e : g.edges()) covered = sum(covered, e);
    r.spans_ambient = covered.dim() == g.v();

    for (const Subspace& x : g.vertices()) {
        std::vector<Subspace> inc = g.edges_through(x);
        Subspace n = inc.front();
        for (std::size_t i = 1; i < inc.size(); ++i) n = sum(n, inc[i]);
        std::size_t deg = n.dim() - 1;
        std::uint64_t expected = gaussian_binomial(deg, 1, g.q());
        if (inc.size() == expected) continue;
        for (const Subspace& plane : planes_through(x, n)) {
            if (!g.has_edge(plane)) {
                r.witness_vertex = x;
                r.missing_edge = plane;
                break;
            }
        }
        std::ostringstream os;
        os << "q-graph property fails at vertex " << format_subspace(x) << ": " << inc.size()
           << " incident edges, neighbourhood space requires " << expected << "; missing edge "
           << (r.missing_edge ? format_subspace(*r.missing_edge) : std::string("?"));
        r.message = os.str();
        return r;
    }
    r.ok = true;
    r.message = "valid q-ary graph";
    return r;
}

QGraph closure(int q, std::size_t v, const std::vector<Subspace>& seed_edges) {
    std::set<Subspace> edges(seed_edges.begin(), seed_edges.end());
    for (const Subspace& e : edges)
        if (e.dim() != 2 || e.ambient() != v || e.q() != q)
            throw std::invalid_argument("closure: seed edges must be 2-dimensional subspaces of F_q^v");

    bool changed = true;
    while (changed) {
        changed = false;
        std::set<Subspace> verts;
        for (const Subspace& e : edges)
            for (const Subspace& line : e.lines()) verts.insert(line);
        for (const Subspace& x : verts) {
            Subspace n = Subspace::zero(q, v);
            for (const Subspace& e : edges)
                if (e.contains_subspace(x)) n = sum(n, e);
            for (const Subspace& plane : planes_through(x, n))
                if (edges.insert(plane).second) changed = true;
        }
    }
    return QGraph(q, v, {edges.begin(), edges.end()});
}

bool is_subgraph(const QGraph& g, const QGraph& h) {
    if (g.q() != h.q() || g.v() != h.v()) throw std::invalid_argument("is_subgraph: mismatched q or ambient dimension");
    for (const Subspace& e : h.edges())
        if (!g.has_edge(e)) return false;
    return validate(h).ok;
}

namespace {

struct IncidenceIndex {
    std::vector<Subspace> verts;
    std::map<Subspace, std::size_t> vert_id;
    std::vector<std::vector<std::size_t>> edges_of_vert;  // edge indices per vertex
    std::vector<std::vector<std::size_t>> verts_of_edge;  // vertex indices per edge
};

IncidenceIndex build_index(const QGraph& g) {
    IncidenceIndex idx;
    idx.verts = g.vertices();
    for (std::size_t i = 0; i < idx.verts.size(); ++i) idx.vert_id[idx.verts[i]] = i;
    idx.edges_of_vert.resize(idx.verts.size());
    idx.verts_of_edge.resize(g.edges().size());
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        for (const Subspace& line : g.edges()[j].lines()) {
            std::size_t i = idx.vert_id.at(line);
            idx.edges_of_vert[i].push_back(j);
            idx.verts_of_edge[j].push_back(i);
        }
    }
    return idx;
}

}  // namespace

std::optional<Walk> find_path(const QGraph& g, const Subspace& from, const Subspace& to) {
    if (!g.has_vertex(from)) throw std::invalid_argument("find_path: " + format_subspace(from) + " is not a vertex");
    if (!g.has_vertex(to)) throw std::invalid_argument("find_path: " + format_subspace(to) + " is not a vertex");
    if (from == to) return Walk{{from}, {}};

    IncidenceIndex idx = build_index(g);
    std::size_t s = idx.vert_id.at(from), t = idx.vert_id.at(to);
    std::vector<int> parent_vert(idx.verts.size(), -1);
    std::vector<int> parent_edge(idx.verts.size(), -1);
    std::vector<bool> seen(idx.verts.size(), false);
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = queue[head];
        for (std::size_t j : idx.edges_of_vert[u]) {
            for (std::size_t w : idx.verts_of_edge[j]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent_vert[w] = static_cast<int>(u);
                parent_edge[w] = static_cast<int>(j);
                if (w == t) {
                    Walk walk;
                    std::size_t cur = w;
                    while (cur != s) {
                        walk.vertices.push_back(idx.verts[cur]);
                        walk.edges.push_back(g.edges()[static_cast<std::size_t>(parent_edge[cur])]);
                        cur = static_cast<std::size_t>(parent_vert[cur]);
                    }
                    walk.vertices.push_back(idx.verts[s]);
                    std::reverse(walk.vertices.begin(), walk.vertices.end());
                    std::reverse(walk.edges.begin(), walk.edges.end());
                    return walk;
                }
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

bool is_connected(const QGraph& g) {
    IncidenceIndex idx = build_index(g);
    if (idx.verts.empty()) return true;
    std::vector<bool> seen(idx.verts.size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t j : idx.edges_of_vert[queue[head]])
            for (std::size_t w : idx.verts_of_edge[j])
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::vector<std::size_t>> edge_components(const QGraph& g) {
    IncidenceIndex idx = build_index(g);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> edge_seen(g.edges().size(), false);
    for (std::size_t j0 = 0; j0 < g.edges().size(); ++j0) {
        if (edge_seen[j0]) continue;
        std::vector<std::size_t> comp{j0};
        edge_seen[j0] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (std::size_t vi : idx.verts_of_edge[comp[head]])
                for (std::size_t j : idx.edges_of_vert[vi])
                    if (!edge_seen[j]) {
                        edge_seen[j] = true;
                        comp.push_back(j);
                    }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// DFS over the bipartite vertex/edge incidence structure. In an undirected
// DFS every non-tree arc closes a cycle with an ancestor; nodes alternate
// between vertex type and edge type, so the node cycle converts directly to
// a closed walk with distinct edges.
std::optional<Walk> find_cycle(const QGraph& g) {
    IncidenceIndex idx = build_index(g);
    std::size_t nv = idx.verts.size(), ne = g.edges().size();
    std::size_t total = nv + ne;
    std::vector<int> parent(total, -2);  // -2 unvisited, -1 root

    std::vector<std::size_t> cyc;
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) -> bool {
        const std::vector<std::size_t>& nbrs_raw = u < nv ? idx.edges_of_vert[u] : idx.verts_of_edge[u - nv];
        for (std::size_t raw : nbrs_raw) {
            std::size_t w = u < nv ? nv + raw : raw;
            if (static_cast<int>(w) == parent[u]) continue;
            if (parent[w] != -2) {
                // Back arc u -> ancestor w: collect w ... u from the tree.
                std::vector<std::size_t> up;
                std::size_t cur = u;
                while (cur != w) {
                    up.push_back(cur);
                    cur = static_cast<std::size_t>(parent[cur]);
                }
                up.push_back(w);
                std::reverse(up.begin(), up.end());
                cyc = std::move(up);
                return true;
            }
            parent[w] = static_cast<int>(u);
            if (dfs(w)) return true;
        }
        return false;
    };

    for (std::size_t root = 0; root < nv; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        if (dfs(root)) {
            // Rotate so the closed node sequence starts at a vertex node.
            if (cyc.front() >= nv) {
                std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
            }
            Walk walk;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (i % 2 == 0) walk.vertices.push_back(idx.verts[cyc[i]]);
                else walk.edges.push_back(g.edges()[cyc[i] - nv]);
            }
            walk.vertices.push_back(walk.vertices.front());  // close the walk
            return walk;
        }
    }
    return std::nullopt;
}

bool is_forest(const QGraph& g) { return !find_cycle(g).has_value(); }

bool is_tree(const QGraph& g) { return is_forest(g) && is_connected(g); }

CountCheck check_degree_sum(const QGraph& g) {
    CountCheck r;
    for (const Subspace& x : g.vertices()) r.lhs += gaussian_binomial(g.degree(x), 1, g.q());
    r.rhs = static_cast<std::uint64_t>(g.q() + 1) * g.edges().size();
    r.ok = r.lhs == r.rhs;
    std::ostringstream os;
    os << "sum_v [deg(v) 1]_q = " << r.lhs << (r.ok ? " == " : " != ") << r.rhs << " = (q+1)*edges";
    r.detail = os.str();
    return r;
}

CountCheck check_tree_count(const QGraph& g) {
    CountCheck r;
    if (g.edges().empty()) {
        r.ok = true;
        r.detail = "empty graph; identity vacuous";
        return r;
    }
    if (!is_tree(g)) throw std::invalid_argument("check_tree_count: graph is not a tree");
    r.lhs = static_cast<std::uint64_t>(g.edges().size()) * static_cast<std::uint64_t>(g.q()) + 1;
    r.rhs = g.vertices().size();
    r.ok = r.lhs == r.rhs;
    std::ostringstream os;
    os << "edges*q + 1 = " << r.lhs << (r.ok ? " == " : " != ") << r.rhs << " = vertices";
    r.detail = os.str();
    return r;
}

namespace {

VecFq unit_vec(std::size_t n, std::size_t i) {
    VecFq v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

QGraph family(const std::string& name, int q, std::optional<int> n) {
    if (name == "q_path2") {
        if (n && *n != 3) throw std::invalid_argument("family q_path2: fixed ambient dimension 3");
        // All planes through <e2>, the common vertex used throughout.
        Subspace e2(q, 3, {unit_vec(3, 1)});
        std::vector<Subspace> edges;
        for (const Subspace& s : enumerate_subspaces(3, 2, q))
            if (s.contains_subspace(e2)) edges.push_back(s);
        return QGraph(q, 3, edges);
    }
    if (name == "q_triangle") {
        if (n && *n != 3) throw std::invalid_argument("family q_triangle: fixed ambient dimension 3");
        return QGraph(q, 3, enumerate_subspaces(3, 2, q));
    }
    if (name == "complete") {
        int v = n.value_or(3);
        if (v < 2) throw std::invalid_argument("family complete: need ambient dimension >= 2");
        return QGraph(q, static_cast<std::size_t>(v), enumerate_subspaces(static_cast<std::size_t>(v), 2, q));
    }
    if (name == "path_seed" || name == "star_seed") {
        int len = n.value_or(4);
        if (len < 1) throw std::invalid_argument("family " + name + ": need n >= 1");
        std::size_t v = static_cast<std::size_t>(len) + 1;
        std::vector<Subspace> edges;
        for (int i = 0; i < len; ++i) {
            std::size_t a = name == "path_seed" ? static_cast<std::size_t>(i) : 0;
            edges.emplace_back(q, v, std::vector<VecFq>{unit_vec(v, a), unit_vec(v, static_cast<std::size_t>(i) + 1)});
        }
        return QGraph(q, v, edges);
    }
    throw std::invalid_argument("unknown family: " + name +
                                " (known: q_path2, q_triangle, complete, path_seed, star_seed)");
}

std::string format_graph(const QGraph& g, bool closed) {
    std::ostringstream os;
    os << "graph q=" << g.q() << " v=" << g.v() << " closed=" << (closed ? "true" : "false") << "\n";
    for (const Subspace& e : g.edges()) os << "edge " << format_subspace(e) << "\n";
    return os.str();
}

GraphFile parse_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("graph file: missing header line");
    std::istringstream hs(line);
    std::string tag, qtok, vtok, ctok;
    hs >> tag >> qtok >> vtok;
    bool closed = false;
    if (hs >> ctok) {
        if (ctok == "closed=true") closed = true;
        else if (ctok == "closed=false") closed = false;
        else throw std::invalid_argument("graph file: bad closed flag: " + ctok);
    }
    if (tag != "graph" || qtok.rfind("q=", 0) != 0 || vtok.rfind("v=", 0) != 0)
        throw std::invalid_argument("graph file: bad header (want `graph q=<q> v=<v> closed=<bool>`): " + line);
    int q = std::stoi(qtok.substr(2));
    std::size_t v = static_cast<std::size_t>(std::stoul(vtok.substr(2)));

    std::vector<Subspace> edges;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("edge ", 0) != 0)
            throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": expected `edge <vec>;<vec>`");
        Subspace e = parse_subspace(line.substr(5), q, v);
        if (e.dim() != 2)
            throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": edge is not 2-dimensional");
        edges.push_back(std::move(e));
    }
    return GraphFile{QGraph(q, v, std::move(edges)), closed};
}

}  // namespace qary
