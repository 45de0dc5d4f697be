#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mskl {

// A permutation of {1, ..., n} in one-line notation.  w(i) is the value at
// position i; positions and values are 1-based throughout.
//
// The matrix picture used everywhere in this library places a 1 in row w(i),
// column i, with row 1 at the top.  Rank counts are taken over southwest
// submatrices: rank(a, b) counts the 1s weakly below row a and weakly left of
// column b.
class Permutation {
public:
    // Constructs the identity on {1..n}.
    explicit Permutation(int n);

    // Constructs from one-line notation; throws domain_error if `window` is
    // not a permutation of 1..window.size().
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);

    // The longest element n, n-1, ..., 1.
    static Permutation longest(int n);

    // Accepts "45231", "4,5,2,3,1", "4 5 2 3 1", or "[4,5,2,3,1]".
    // Compact digit form is only unambiguous for n <= 9.
    static Permutation parse(const std::string& text);

    int n() const { return static_cast<int>(win_.size()); }
    int operator()(int i) const { return win_[i - 1]; }
    const std::vector<int>& one_line() const { return win_; }

    Permutation inverse() const;

    // Composition: (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    // Right multiplication by the transposition t_{a,b}: swaps the values in
    // positions a and b.
    Permutation swap_positions(int a, int b) const;

    // Left multiplication by t_{a,b}: swaps the values a and b wherever they
    // occur.
    Permutation swap_values(int a, int b) const;

    // Right multiplication by the simple transposition s_i (1 <= i < n).
    Permutation right_simple(int i) const;

    // rank(a, b) = #{ i <= b : w(i) >= a }, the number of 1s in the
    // southwest submatrix with corner (a, b).  1 <= a, b <= n.
    int rank(int a, int b) const;

    // (n+1) x (n+1) table T with T[a][b] = rank(a, b); row 0 and column 0
    // are zero padding so the table can be indexed directly with 1-based
    // coordinates.  Built in O(n^2).
    std::vector<std::vector<int>> rank_table() const;

    // Number of inversions, i.e. the Coxeter length.
    int inversions() const;

    bool is_identity() const;

    // True if some subsequence of the one-line word is order-isomorphic to
    // `pattern` (given in one-line notation on {1..k}).
    bool contains_pattern(const std::vector<int>& pattern) const;

    // Lehmer-code index of this permutation among all n! permutations of
    // {1..n}, counting from 0 in lexicographic order of one-line words.
    std::uint64_t lex_index() const;

    // Inverse of lex_index: the idx-th permutation of {1..n}.
    static Permutation from_lex_index(int n, std::uint64_t idx);

    // "45231" for n <= 9, "[4,5,2,3,1]" otherwise.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.win_ <=> b.win_;
    }

private:
    std::vector<int> win_;
};

// n! as a 64-bit count; throws domain_error for n > 20.
std::uint64_t factorial(int n);

}  // namespace mskl
