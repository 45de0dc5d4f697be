#pragma once

// Pairs of permutations v <= w cut out a subvariety of the affine chart
// indexed by v: the chart's generic matrix is specialised by the rank
// conditions of w.  This header computes the chart matrix, its forced-zero
// coordinates, the associated weight graph on [n], and the invariants that
// can be read off the opposite Rothe diagram alone.

#include <optional>
#include <utility>
#include <vector>

#include "mskl/diagram.hpp"
#include "mskl/graph.hpp"
#include "mskl/permutation.hpp"
#include "mskl/symbolic.hpp"

namespace mskl {

// Generic matrix of the chart indexed by v: a 1 at (v(i), i) for each i,
// zeros above each 1 in its column and east of each 1 in its row, and an
// independent variable z_{ij} at every remaining cell.  The variable cells
// are exactly the opposite Rothe diagram of v.
SymMatrix chart_matrix(const Permutation& v);

// Cells (i,j) of the opposite Rothe diagram of v whose coordinate is forced
// to vanish once the rank conditions of w are imposed:
// t_{v(j), i} * v is not below w in Bruhat order.
std::vector<Cell> forced_zeros(const Permutation& v, const Permutation& w);

// Weight graph on vertex set [n]: one edge v(j) -> i for each diagram cell
// (i,j) of v that is not a forced zero.  Always acyclic since v(j) < i.
DiGraph weight_graph(const Permutation& v, const Permutation& w);

// Same graph but with an edge for every diagram cell of v, matching the
// situation where no coordinate is forced to zero.
DiGraph weight_graph_full(const Permutation& v);

struct KLReport {
    Permutation v, w;
    int dim = 0;         // length difference = |diagram(v)| - |diagram(w)|
    std::vector<Cell> zeros;
    DiGraph g;
    int dim_sigma = 0;   // n - number of components of g
    int complexity = 0;  // dim - dim_sigma
    std::vector<Polynomial> generators;  // minors cutting out the subvariety

    KLReport() : v(1), w(1) {}
};

// Full analysis of the pair (v, w).  Throws domain_error unless v <= w.
// Generator expansion can be skipped for bulk runs.
KLReport kl_analyze(const Permutation& v, const Permutation& w,
                    bool with_generators = true);

// Distinguished corners of the diagram of v (lowest in column, leftmost in
// row).  With no forced zeros these count the components of the weight
// graph that have more than one vertex.
std::vector<Cell> corner_cells(const Permutation& v);

// Positions i with v(i) = n+1-i whose column i and row n+1-i are free of
// diagram cells.  With no forced zeros these count the isolated vertices of
// the weight graph.
std::vector<int> lone_antidiagonal_points(const Permutation& v);

// Minimal-distance pairs of diagram cells of v.  A pair of cells with the
// second strictly southeast of the first is added, scanning taxicab
// distances in increasing order, when neither endpoint is already used in
// that role by a strictly closer accepted pair.  All pairs of one distance
// are committed together.  The count equals the cyclomatic number of the
// full weight graph.
std::vector<std::pair<Cell, Cell>> diagonal_pairs(const Permutation& v);

// Binomial relations attached to the decomposable edges of the full weight
// graph: for a cell (k,j) whose edge factors through some intermediate
// vertex i (cells (i,j) and (k, v^{-1}(i)) both present), the relation is
// z_{kj} - z_{ij} * z_{k,v^{-1}(i)}, taking the closest such i and breaking
// ties by the smallest i.
std::vector<Polynomial> toric_binomials(const Permutation& v);

// --- moving one endpoint of the interval ------------------------------

// True when x sits in a component of g of size at least two.
bool moved_vertex(const DiGraph& g, int x);

// Components of the cyclic matching between the one-line notations: orbits
// of a -> w^{-1}(v(a)).  For a toric pair these are exactly the components
// of the chain graph of any maximal chain from v to w.
std::vector<std::vector<int>> matched_cycles(const Permutation& v, const Permutation& w);

// Glueing predicate: given the chain graphs of two stacked intervals, true
// when their union is still cycle-free, i.e. when the bipartite incidence
// between components of the two graphs (one link per shared vertex) is a
// forest.
bool glue_stays_toric(const DiGraph& lower, const DiGraph& upper);

// Predicts whether extending a toric interval [v, w'] by one cover
// w = w' * t keeps it toric: exactly when the two values t exchanges lie in
// different components of the chain graph of [v, w'].
bool extend_stays_toric(const Permutation& v, const Permutation& w_base,
                        const Permutation& w_top);

// --- families with a closed-form complexity ---------------------------

// Shape of a diagram that is a single full rectangle: its essential cell,
// rank bound m, and the side lengths (rows x cols).
struct RectangleShape {
    Cell ess;
    int m = 0;
    int rows = 0;
    int cols = 0;
};
std::optional<RectangleShape> rectangle_shape(const Permutation& w);

// Complexity of the pair (v, w) when the diagram of w is one rectangle,
// computed from the rank of v at the essential cell without expanding the
// weight cone.  Throws domain_error if the shape does not apply or v > w.
int rectangle_complexity(const Permutation& v, const Permutation& w);

// The permutation obtained from the longest element by swapping positions
// l < k, together with the predicted complexity of (v, w0 t).  The two
// essential cells of w0 t are (n-k+2, l) and (n-l+1, k-1); the prediction
// depends on which of the rank bounds v attains.
Permutation longest_times_swap(int n, int l, int k);
int longest_times_swap_complexity(const Permutation& v, int l, int k);

}  // namespace mskl
