#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mskl/graph.hpp"
#include "mskl/permutation.hpp"

namespace mskl {

// Bruhat order via the rank criterion: v <= w iff every southwest submatrix
// of v has at most as many 1s as the same submatrix of w.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// v is covered by w: w = v * t_{a,b} with exactly one more inversion.
bool is_cover(const Permutation& v, const Permutation& w);

// All covers of v from above: v * t_{a,b} with v(a) < v(b) and no value
// between v(a) and v(b) at a position between a and b.
std::vector<Permutation> covers_above(const Permutation& v);

// Covers of v from above that stay weakly below w.
std::vector<Permutation> covers_above_in(const Permutation& v, const Permutation& w);

std::vector<Permutation> covers_below(const Permutation& w);

// A saturated chain v = elems[0] < elems[1] < ... < elems[k] = w together
// with the values each step swaps: elems[i+1] exchanges the values a < b of
// labels[i] = (a, b).  Value labels (not positions) are what the weight
// graph of the chart sees, so chain graphs are built on them.
struct Chain {
    std::vector<Permutation> elems;
    std::vector<std::pair<int, int>> labels;
};

// Validates that consecutive elements are covers and fills in the labels.
Chain make_chain(std::vector<Permutation> elems);

// The chain's multigraph on the full value set [n]: one edge a -> b per
// label (a, b), multi-edges kept.
DiGraph chain_graph(const Chain& chain);

// Atoms of [v, w]: the elements of length l(v) + 1.
std::vector<Permutation> atoms(const Permutation& v, const Permutation& w);

// Graph on [n] with an edge a -> b for every pair of values a < b whose
// exchange turns v into an atom of [v, w].
DiGraph atom_graph(const Permutation& v, const Permutation& w);

// All elements of the interval [v, w]; empty when v is not below w.
std::vector<Permutation> interval(const Permutation& v, const Permutation& w);

// Number of maximal chains of [v, w] (0 when v is not below w).
std::uint64_t count_maximal_chains(const Permutation& v, const Permutation& w);

// Enumerates every maximal chain of [v, w]; the callback may return false to
// stop early.  Returns the number of chains visited.
std::uint64_t for_each_maximal_chain(const Permutation& v, const Permutation& w,
                                     const std::function<bool(const Chain&)>& visit);

// One maximal chain, chosen deterministically (smallest cover at each step).
Chain some_chain(const Permutation& v, const Permutation& w);

// Independent Bruhat-order oracle via the subword property: v <= w iff v can
// be assembled as a length-increasing subword of one fixed reduced word of w.
bool subword_leq(const Permutation& v, const Permutation& w);

// A reduced word for w (letters are simple-reflection indices).
std::vector<int> reduced_word(const Permutation& w);

// The support of w: letters i such that s_i <= w, i.e. w does not fix the
// initial segment {1..i} setwise.  Every reduced word of w uses exactly
// these letters.
std::vector<int> support(const Permutation& w);

}  // namespace mskl
