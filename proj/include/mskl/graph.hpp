#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mskl {

// A graph vertex: a plain integer label, or a starred integer for the
// column side of a bipartite graph ("3" vs "3*").
struct VertexId {
    int id = 0;
    bool star = false;

    std::string str() const { return std::to_string(id) + (star ? "*" : ""); }
    friend bool operator==(const VertexId&, const VertexId&) = default;
    friend auto operator<=>(const VertexId& a, const VertexId& b) {
        if (auto c = a.star <=> b.star; c != 0) return c;
        return a.id <=> b.id;
    }
};

inline VertexId plain(int id) { return VertexId{id, false}; }
inline VertexId starred(int id) { return VertexId{id, true}; }

// A directed graph with an explicit vertex set; multi-edges are kept.
class DiGraph {
public:
    DiGraph() = default;
    DiGraph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

    // Vertex set taken to be exactly the edge endpoints.
    static DiGraph from_edges(std::vector<std::pair<VertexId, VertexId>> edges);

    const std::vector<VertexId>& vertices() const { return verts_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Connected components of the underlying undirected graph, each sorted,
    // ordered by smallest vertex.
    std::vector<std::vector<VertexId>> components() const;
    int component_count() const;

    // |E| - |V| + #components, counting multi-edges: the minimum number of
    // edges whose removal makes the underlying undirected graph a forest.
    int cyclomatic() const;
    bool is_forest() const { return cyclomatic() == 0; }

    // Directed acyclicity; parallel edges in the same direction are harmless.
    bool is_dag() const;

    // GraphViz export; undirected=true renders with "--" edges.
    std::string dot(const std::string& name, bool undirected = false) const;

    friend bool operator==(const DiGraph&, const DiGraph&) = default;

private:
    std::vector<VertexId> verts_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// A rational cone spanned by integer ray generators.
struct Cone {
    int ambient = 0;
    std::vector<std::vector<long long>> generators;  // deduplicated

    // Rank of the generator matrix, computed exactly.
    int dimension() const;
};

// Rank of an integer matrix via fraction-free Gaussian elimination.
int integer_rank(std::vector<std::vector<long long>> m);

// The edge cone of a DAG: one generator e_tail - e_head per edge, with
// coordinates indexed by the graph's vertex list.  Throws domain_error if the
// graph has a directed cycle.
Cone edge_cone(const DiGraph& g);

// |V| - #components.  Also builds the edge-generator matrix and asserts its
// rank matches, so the combinatorial count is cross-checked by exact linear
// algebra on every call.
int cone_dimension(const DiGraph& g);

// True iff every cycle of length >= 6 of the underlying undirected graph has
// at least two chords.  The graph must be bipartite with sides given by the
// star flag; an edge within one side is a domain error.  Decided by induced
// subgraph inspection: such a graph fails exactly when it has an induced
// cycle of length >= 6 or an induced double square (a 6-cycle plus exactly
// one chord).
bool doubly_chordal_bipartite(const DiGraph& g);

}  // namespace mskl
