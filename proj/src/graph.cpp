#include "mskl/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mskl/error.hpp"

namespace mskl {

namespace {

std::size_t vertex_index(const std::vector<VertexId>& verts, const VertexId& v) {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v) throw domain_error("graph: edge endpoint " + v.str() + " not a vertex");
    return static_cast<std::size_t>(it - verts.begin());
}

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

DiGraph::DiGraph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (const auto& e : edges_) {
        vertex_index(verts_, e.first);
        vertex_index(verts_, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
}

DiGraph DiGraph::from_edges(std::vector<std::pair<VertexId, VertexId>> edges) {
    std::vector<VertexId> verts;
    verts.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        verts.push_back(e.first);
        verts.push_back(e.second);
    }
    return DiGraph(std::move(verts), std::move(edges));
}

std::vector<std::vector<VertexId>> DiGraph::components() const {
    Dsu dsu(verts_.size());
    for (const auto& e : edges_) {
        dsu.unite(vertex_index(verts_, e.first), vertex_index(verts_, e.second));
    }
    std::map<std::size_t, std::vector<VertexId>> buckets;
    for (std::size_t i = 0; i < verts_.size(); ++i) buckets[dsu.find(i)].push_back(verts_[i]);
    std::vector<std::vector<VertexId>> comps;
    comps.reserve(buckets.size());
    for (auto& [root, members] : buckets) comps.push_back(std::move(members));
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

int DiGraph::component_count() const { return static_cast<int>(components().size()); }

int DiGraph::cyclomatic() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(verts_.size()) + component_count();
}

bool DiGraph::is_dag() const {
    std::vector<int> indeg(verts_.size(), 0);
    std::vector<std::vector<std::size_t>> out(verts_.size());
    for (const auto& e : edges_) {
        const auto t = vertex_index(verts_, e.first);
        const auto h = vertex_index(verts_, e.second);
        out[t].push_back(h);
        ++indeg[h];
    }
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (indeg[i] == 0) ready.push_back(i);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        const std::size_t at = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t h : out[at]) {
            if (--indeg[h] == 0) ready.push_back(h);
        }
    }
    return seen == verts_.size();
}

std::string DiGraph::dot(const std::string& name, bool undirected) const {
    std::string s = undirected ? "graph " : "digraph ";
    s += name + " {\n";
    for (const auto& v : verts_) s += "  \"" + v.str() + "\";\n";
    for (const auto& e : edges_) {
        s += "  \"" + e.first.str() + (undirected ? "\" -- \"" : "\" -> \"") + e.second.str() + "\";\n";
    }
    s += "}\n";
    return s;
}

int integer_rank(std::vector<std::vector<long long>> m) {
    if (m.empty() || m.front().empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

std::vector<std::vector<long long>> edge_generators(const DiGraph& g) {
    std::vector<std::vector<long long>> gens;
    gens.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        std::vector<long long> v(g.vertex_count(), 0);
        v[vertex_index(g.vertices(), e.first)] += 1;
        v[vertex_index(g.vertices(), e.second)] -= 1;
        gens.push_back(std::move(v));
    }
    return gens;
}

}  // namespace

Cone edge_cone(const DiGraph& g) {
    if (!g.is_dag()) throw domain_error("edge_cone: graph has a directed cycle");
    Cone cone;
    cone.ambient = static_cast<int>(g.vertex_count());
    cone.generators = edge_generators(g);
    std::sort(cone.generators.begin(), cone.generators.end());
    cone.generators.erase(std::unique(cone.generators.begin(), cone.generators.end()),
                          cone.generators.end());
    return cone;
}

int Cone::dimension() const { return integer_rank(generators); }

int cone_dimension(const DiGraph& g) {
    const int by_count = static_cast<int>(g.vertex_count()) - g.component_count();
    const int by_rank = integer_rank(edge_generators(g));
    if (by_count != by_rank) {
        throw std::logic_error("cone_dimension: |V|-#components (" + std::to_string(by_count) +
                               ") != generator rank (" + std::to_string(by_rank) + ")");
    }
    return by_count;
}

bool doubly_chordal_bipartite(const DiGraph& g) {
    const auto& verts = g.vertices();
    const std::size_t nv = verts.size();
    if (nv > 24) throw domain_error("doubly_chordal_bipartite: graph too large for exhaustive check");

    // Simple undirected adjacency; parallel edges collapse.
    std::vector<std::uint32_t> adj(nv, 0);
    for (const auto& e : g.edges()) {
        if (e.first.star == e.second.star) {
            throw domain_error("doubly_chordal_bipartite: edge inside one side, graph not bipartite");
        }
        const auto a = vertex_index(verts, e.first);
        const auto b = vertex_index(verts, e.second);
        adj[a] |= (std::uint32_t{1} << b);
        adj[b] |= (std::uint32_t{1} << a);
    }

    // A violation is an induced cycle of length >= 6 (a chordless long cycle)
    // or an induced double square (a 6-cycle with exactly one chord).
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << nv); ++subset) {
        const int size = __builtin_popcount(subset);
        if (size < 6) continue;
        int edge_cnt = 0;
        int deg3 = 0;
        bool deg_ok = true;
        std::uint32_t deg3_verts = 0;
        for (std::size_t v = 0; v < nv && deg_ok; ++v) {
            if (!(subset & (std::uint32_t{1} << v))) continue;
            const int d = __builtin_popcount(adj[v] & subset);
            edge_cnt += d;
            if (d == 3) {
                ++deg3;
                deg3_verts |= (std::uint32_t{1} << v);
            } else if (d != 2) {
                deg_ok = false;
            }
        }
        if (!deg_ok) continue;
        edge_cnt /= 2;

        if (deg3 == 0 && edge_cnt == size) {
            // All degrees 2: an induced disjoint union of cycles; it is a
            // single cycle iff connected.  A union of shorter cycles would
            // have been caught at its own (smaller or equal) subset unless
            // every piece is a 4-cycle, so connectivity must be checked.
            std::uint32_t reach = subset & (~subset + 1);  // lowest set bit
            for (;;) {
                std::uint32_t next = reach;
                for (std::size_t v = 0; v < nv; ++v) {
                    if (reach & (std::uint32_t{1} << v)) next |= (adj[v] & subset);
                }
                if (next == reach) break;
                reach = next;
            }
            if (reach == subset) return false;  // induced cycle of length >= 6
        }
        if (size == 6 && deg3 == 2 && edge_cnt == 7) {
            // Degrees {3,3,2,2,2,2} with the two degree-3 vertices adjacent:
            // the induced double square.
            std::size_t a = 0, b = 0;
            bool first = true;
            for (std::size_t v = 0; v < nv; ++v) {
                if (deg3_verts & (std::uint32_t{1} << v)) {
                    (first ? a : b) = v;
                    first = false;
                }
            }
            if (adj[a] & (std::uint32_t{1} << b)) return false;
        }
    }
    return true;
}

}  // namespace mskl
