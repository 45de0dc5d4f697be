#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "mskl/permutation.hpp"

namespace mskl {

// A variable carrying a symbol and a grid position, e.g. z_{5,3}.
struct Var {
    char sym = 'z';
    int row = 0;
    int col = 0;

    std::string str() const;
    friend bool operator==(const Var&, const Var&) = default;
    friend auto operator<=>(const Var&, const Var&) = default;
};

// coeff * product of vars; vars kept sorted (repeats allowed).
struct Monomial {
    long long coeff = 0;
    std::vector<Var> vars;

    int degree() const { return static_cast<int>(vars.size()); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// A polynomial in canonical form: like terms combined, zero terms dropped,
// terms sorted by degree then lexicographically by variable list.  Signs are
// honest (p and -p are distinct); collections that only care about the ideal
// a polynomial generates should compare sign_normalized() forms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Monomial m);
    explicit Polynomial(std::vector<Monomial> terms);

    static Polynomial constant(long long c);
    static Polynomial variable(Var v);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    // Applies a variable renaming and re-canonicalises (renamings may merge
    // previously distinct terms).
    Polynomial rename(const std::function<Var(const Var&)>& f) const;

    // The same polynomial up to a unit: flips every sign when the leading
    // coefficient is negative.  Generator lists are stored in this form so
    // that set comparison ignores the irrelevant overall sign of a minor.
    Polynomial sign_normalized() const;

    // e.g. "z53 - z23*z54".
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
        return a.terms_ <=> b.terms_;
    }

private:
    void canonicalise();
    std::vector<Monomial> terms_;
};

enum class EntryKind { zero, one, var };

struct Entry {
    EntryKind kind = EntryKind::zero;
    Var var;

    static Entry make_zero() { return Entry{}; }
    static Entry make_one() { return Entry{EntryKind::one, {}}; }
    static Entry make_var(Var v) { return Entry{EntryKind::var, v}; }
};

// A matrix whose entries are 0, 1, or a variable.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Entry& at(int r, int c);              // 1-based
    const Entry& at(int r, int c) const;  // 1-based

    SymMatrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Entry> data_;
};

// n x n matrix of variables sym_{i,j}.
SymMatrix generic_matrix(int n, char sym = 'z');

// m x m symmetric matrix: entry (i,j) and (j,i) share the variable
// sym_{min(i,j), max(i,j)}.
SymMatrix generic_symmetric_matrix(int m, char sym = 's');

// Determinant by cofactor expansion along the row with the fewest nonzero
// entries.
Polynomial det_cofactor(const SymMatrix& m);

// Determinant as the signed sum over all permutations; used to cross-check
// the cofactor expansion.
Polynomial det_leibniz(const SymMatrix& m);

// The rank condition attached to an essential cell (a, b) of a permutation's
// opposite Rothe diagram: the submatrix on rows a..n and columns 1..b has
// rank at most `bound`.
struct RankCondition {
    int a = 0;      // top row of the covered southwest block
    int b = 0;      // rightmost column of the covered block
    int bound = 0;  // rank bound r_w(a, b)
    int n = 0;      // ambient grid size

    friend bool operator==(const RankCondition&, const RankCondition&) = default;
};

// One rank condition per essential cell, with bound r_w(a, b).
std::vector<RankCondition> fulton_conditions(const Permutation& w);

// All (bound+1)-minors of the block of `m` described by `cond`, expanded,
// deduplicated, with zero determinants dropped.  Nonzero constants are kept:
// they witness an inconsistent condition.  If bound+1 exceeds the block's
// smaller side the condition is vacuous and the list is empty.  Throws
// domain_error when bound+1 > size_limit.
std::vector<Polynomial> expand_minors(const SymMatrix& m, const RankCondition& cond,
                                      int size_limit = 8);

}  // namespace mskl
