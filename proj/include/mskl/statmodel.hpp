#pragma once

// Bridges between the geometry and Gaussian / discrete statistical models:
// conditional-independence statements realised as (symmetric) determinantal
// ideals, block permutations realising one-statement models on charts, and
// quasi-independence models read off hook decompositions.

#include <optional>
#include <utility>
#include <vector>

#include "mskl/graph.hpp"
#include "mskl/matrix_schubert.hpp"
#include "mskl/permutation.hpp"
#include "mskl/symbolic.hpp"

namespace mskl {

// A Gaussian conditional-independence statement A ⟂ B | C on variables
// {1..m}.  Sets are kept sorted; A, B, C are pairwise disjoint and A, B are
// nonempty.  The statement holds iff the covariance submatrix on rows A∪C
// and columns B∪C has rank at most |C|.
struct CIStatement {
    int m = 0;
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;
};

// Validating constructor; throws domain_error on empty A/B, out-of-range
// entries, or overlaps.
CIStatement make_ci(int m, std::vector<int> a, std::vector<int> b, std::vector<int> c);

// {lo, lo+1, ..., hi}; empty when lo > hi.
std::vector<int> interval_set(int lo, int hi);

// The ideal of the statement: all (|C|+1)-minors of the block of a generic
// symmetric m x m matrix on rows A∪C and columns B∪C, expanded,
// sign-normalised and deduplicated.  With C empty these are just the
// entries of the A x B block.
std::vector<Polynomial> ci_condition(const CIStatement& s);

// The permutation whose symmetric matrix Schubert ideal coincides with the
// statement's ideal.  Exactly two shapes are realizable:
//   (1) A = [1..i], B = [j..m], C = {} with i < j;
//   (2) A = [1..i], B = [j..m], C = [i+1..j-1] nonempty.
// Any other shape returns nullopt.
std::optional<Permutation> ci_realize_ms(const CIStatement& s);

// Symmetric complexity of a realizable statement in closed form: 0 when C
// is empty, else (|C|-1)(m-1-|C|/2).  Throws domain_error when the
// statement is not realizable.
int ms_ci_complexity(const CIStatement& s);

// A one-statement model realised on the chart of the block permutation
// v = (n-m, ..., n, n-m-1, ..., 1) in S_n: the chart's variable cells fill
// the weakly-lower triangle of an m x m symmetric matrix, so rank
// conditions on the chart translate verbatim into covariance conditions.
struct KLCIRealization {
    Permutation v;
    Permutation w;
    CIStatement stmt;
    int predicted_complexity = 0;
    int predicted_dim_sigma = 0;

    KLCIRealization() : v(1), w(1) {}
};

// Case (1): marginal statement [1..k] ⟂ [m-l+1..m], needs k + l <= m.
KLCIRealization kl_ci_case1(int n, int m, int k, int l);

// Case (2): [1..s] ⟂ [s+2..m] | {s+1} with s, t >= 1 and s + t = m - 1;
// in terms of the block sizes, k = s + 1 and l = t + 1 with k + l = m + 1.
KLCIRealization kl_ci_case2(int n, int m, int s, int t);

// The variable dictionary for either case: chart variable z_{r,c} becomes
// the covariance entry s_{r-(n-m), c}, stored with sorted indices.
Var kl_ci_rename(int n, int m, const Var& z);

// A two-way quasi-independence model: the allowed states S ⊆ [m] x [n] and
// the bipartite graph with an edge i -> j* per allowed state (i, j).
struct QIModel {
    int m = 0;
    int n = 0;
    std::vector<std::pair<int, int>> states;  // sorted
    DiGraph graph;                            // vertex set [m] ⊔ [n]*
};

// Validating constructor; throws domain_error on out-of-range states.
QIModel make_qi(int m, int n, std::vector<std::pair<int, int>> states);

// One model per hook of a toric variety: the free non-dominant cells inside
// the hook's bounding box, rows renumbered 1..m top to bottom and columns
// 1..n left to right.  The first two columns and the last two rows of each
// model are always fully allowed, and the model graphs are the connected
// components of the weight-cone graph.  Throws domain_error when the
// variety is not toric.
std::vector<QIModel> qi_from_toric(const MSReport& rep);
std::vector<QIModel> qi_from_toric(const Permutation& w);

// True when the model's maximum-likelihood estimate is a rational function
// of the data: equivalent to the state graph being doubly chordal
// bipartite.  Every model produced by qi_from_toric passes.
bool rational_mle(const QIModel& model);

// The minimal failing state space: a six-cycle with exactly one chord.
QIModel double_square();

}  // namespace mskl
