#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mskl/diagram.hpp"
#include "mskl/graph.hpp"
#include "mskl/permutation.hpp"

namespace mskl {

// The bipartite graph with an edge a -> b* per cell (a, b); isolated
// vertices are never created (the vertex set is exactly the edge endpoints).
DiGraph cell_graph(const Diagram& cells);

// Restriction of cell_graph to cells weakly below the diagonal (row >= col).
DiGraph cell_graph_lower(const Diagram& cells);

// Invariants of the symmetric (equivalently lower-triangular) variant, where
// the defining rank conditions are imposed on a generic symmetric or lower
// triangular matrix instead of a fully generic one.
struct MSVariantReport {
    int sw_above_diagonal = 0;  // |sw ∩ {(i,j): i<j}|
    int dim_x = 0;              // dim of the variety: plain dim_x - n(n-1)/2
    int free_dim = 0;           // coordinates not touched by the conditions, below-diagonal count
    int dim_y = 0;              // plain dim_y - sw_above_diagonal
    int dim_sigma = 0;          // edge-cone dimension of g
    int complexity = 0;         // dim_y - dim_sigma
    DiGraph g;                  // edges from l ∩ lower triangle
};

// Full invariant report for the matrix Schubert variety of w.
struct MSReport {
    Permutation w;
    Regions reg;
    int dim_x = 0;       // n^2 - |dcirc|
    int free_dim = 0;    // n^2 - |sw|
    int dim_y = 0;       // |lprime|
    int dim_sigma = 0;   // edge-cone dimension of g
    int complexity = 0;  // dim_y - dim_sigma
    bool toric_hooks = false;    // lprime splits into disjoint hooks
    bool toric_pattern = false;  // w avoids 4312 and 3412
    bool toric = false;          // == toric_hooks
    DiGraph g;                   // edges a -> b* over cells of l
    std::optional<StaircaseStructure> staircase;  // present when the layout builds
    MSVariantReport sym;

    MSReport() : w(1), reg(Permutation(1)) {}
};

MSReport analyze(const Permutation& w, HeightRule rule = HeightRule::above);

// The embedding v -> (v(1)+m, ..., v(m)+m, m, m-1, ..., 1) into S_{2m}; its
// sw region avoids the strict upper triangle, so the symmetric variant of
// the image has the same complexity as the plain variety of v.
Permutation sym_embedding(const Permutation& v);

// --- Reflection scan --------------------------------------------------------

// Predicted change to the hook layout / weight cone under one reflection.
enum class ConeDelta {
    no_change,      // L(w) itself is unchanged
    gains_edge,     // same hooks, graph gains edge w(M) -> M*
    loses_edge,     // same hooks, graph loses edge w(M+1) -> M*
    new_hook,       // one extra hook appears, the others unchanged
    hook_shorter,   // the affected hook loses a leg cell
    hook_taller,    // the affected hook gains a leg cell
    hook_narrower,  // the affected hook contracts by one column; it may lose
                    // its arm tip, re-root one column east, or disappear
    hook_wider,     // the affected hook gains an arm column (possibly west,
                    // raising the leg onto the new corner)
};

struct ReflectionVerdict {
    int m = 0;                     // swap of columns m, m+1
    ColumnLabel label;             // label of column m (kind none = unlabeled)
    int theorem_case = 0;          // 1..5 matching non-toric case, 0 otherwise
    int corollary_case = 0;        // 1..8 matching toric case, 0 otherwise
    bool labeled = false;          // theorem applies to this column
    bool predicted_toric = false;  // meaningful only when labeled
    std::optional<ConeDelta> predicted_delta;
    // For gains_edge / loses_edge: the edge named by the prediction.
    std::optional<std::pair<VertexId, VertexId>> edge;
    int affected_hook = -1;  // index of the hook a shape delta refers to, -1 if none
};

// Classifies the reflection at column m against the staircase layout of a
// toric base report.  Throws domain_error if base is not toric.
ReflectionVerdict reflection_classify(const MSReport& base, int m);

// Verdicts for every m in 1..n-1.
std::vector<ReflectionVerdict> scan_reflections(const MSReport& base);

}  // namespace mskl
