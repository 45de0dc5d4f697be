#include "mskl/symbolic.hpp"

#include <algorithm>
#include <numeric>

#include "mskl/diagram.hpp"
#include "mskl/error.hpp"

namespace mskl {

std::string Var::str() const {
    std::string s(1, sym);
    if (row <= 9 && col <= 9) {
        s += std::to_string(row);
        s += std::to_string(col);
    } else {
        s += "[" + std::to_string(row) + "," + std::to_string(col) + "]";
    }
    return s;
}

namespace {

// degree first, then the sorted variable lists lexicographically.
bool term_order(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.vars < y.vars;
}

}  // namespace

Polynomial::Polynomial(Monomial m) : terms_{std::move(m)} { canonicalise(); }

Polynomial::Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) { canonicalise(); }

Polynomial Polynomial::constant(long long c) { return Polynomial(Monomial{c, {}}); }

Polynomial Polynomial::variable(Var v) { return Polynomial(Monomial{1, {v}}); }

bool Polynomial::is_constant() const {
    return terms_.size() == 1 && terms_.front().vars.empty();
}

void Polynomial::canonicalise() {
    for (Monomial& m : terms_) std::sort(m.vars.begin(), m.vars.end());
    std::sort(terms_.begin(), terms_.end(), term_order);
    std::vector<Monomial> out;
    for (Monomial& m : terms_) {
        if (!out.empty() && out.back().vars == m.vars) {
            out.back().coeff += m.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (m.coeff != 0) {
            out.push_back(std::move(m));
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::sign_normalized() const {
    if (terms_.empty() || terms_.front().coeff > 0) return *this;
    std::vector<Monomial> flipped = terms_;
    for (Monomial& m : flipped) m.coeff = -m.coeff;
    Polynomial p;
    p.terms_ = std::move(flipped);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Monomial> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Monomial> all = terms_;
    all.reserve(all.size() + o.terms_.size());
    for (const Monomial& m : o.terms_) {
        all.push_back(m);
        all.back().coeff = -all.back().coeff;
    }
    return Polynomial(std::move(all));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Monomial> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Monomial& x : terms_) {
        for (const Monomial& y : o.terms_) {
            Monomial m;
            m.coeff = x.coeff * y.coeff;
            m.vars = x.vars;
            m.vars.insert(m.vars.end(), y.vars.begin(), y.vars.end());
            prod.push_back(std::move(m));
        }
    }
    return Polynomial(std::move(prod));
}

Polynomial Polynomial::rename(const std::function<Var(const Var&)>& f) const {
    std::vector<Monomial> out = terms_;
    for (Monomial& m : out) {
        for (Var& v : m.vars) v = f(v);
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Monomial& m = terms_[i];
        const long long c = m.coeff;
        if (i == 0) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        const long long mag = c < 0 ? -c : c;
        if (mag != 1 || m.vars.empty()) {
            s += std::to_string(mag);
            if (!m.vars.empty()) s += "*";
        }
        for (std::size_t j = 0; j < m.vars.size(); ++j) {
            if (j) s += "*";
            s += m.vars[j].str();
        }
    }
    return s;
}

SymMatrix::SymMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw domain_error("symbolic matrix: negative dimensions");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Entry& SymMatrix::at(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw domain_error("symbolic matrix: index out of range");
    return data_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c - 1)];
}

const Entry& SymMatrix::at(int r, int c) const {
    return const_cast<SymMatrix*>(this)->at(r, c);
}

SymMatrix SymMatrix::submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    SymMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
        for (std::size_t c = 0; c < col_ids.size(); ++c) {
            out.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
                at(row_ids[r], col_ids[c]);
        }
    }
    return out;
}

SymMatrix generic_matrix(int n, char sym) {
    SymMatrix m(n, n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) m.at(r, c) = Entry::make_var(Var{sym, r, c});
    }
    return m;
}

SymMatrix generic_symmetric_matrix(int m, char sym) {
    SymMatrix out(m, m);
    for (int r = 1; r <= m; ++r) {
        for (int c = 1; c <= m; ++c) {
            out.at(r, c) = Entry::make_var(Var{sym, std::min(r, c), std::max(r, c)});
        }
    }
    return out;
}

namespace {

Polynomial entry_poly(const Entry& e) {
    switch (e.kind) {
        case EntryKind::zero: return Polynomial{};
        case EntryKind::one: return Polynomial::constant(1);
        case EntryKind::var: return Polynomial::variable(e.var);
    }
    return Polynomial{};
}

Polynomial det_rec(const SymMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Polynomial::constant(1);
    if (k == 1) return entry_poly(m.at(rows[0], cols[0]));

    // Expand along the row with the fewest nonzero entries.
    std::size_t best = 0;
    int best_nnz = static_cast<int>(k) + 1;
    for (std::size_t ri = 0; ri < k; ++ri) {
        int nnz = 0;
        for (std::size_t ci = 0; ci < k; ++ci) {
            if (m.at(rows[ri], cols[ci]).kind != EntryKind::zero) ++nnz;
        }
        if (nnz < best_nnz) {
            best_nnz = nnz;
            best = ri;
        }
    }
    if (best_nnz == 0) return Polynomial{};

    Polynomial det;
    const int row_id = rows[best];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t ci = 0; ci < k; ++ci) {
        const Entry& e = m.at(row_id, cols[ci]);
        if (e.kind == EntryKind::zero) continue;
        const int col_id = cols[ci];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(ci));
        Polynomial minor = det_rec(m, rows, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(ci), col_id);
        const bool negative = ((best + ci) % 2) != 0;
        Polynomial term = (e.kind == EntryKind::one) ? minor : Polynomial::variable(e.var) * minor;
        det = negative ? det - term : det + term;
    }
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(best), row_id);
    return det;
}

}  // namespace

Polynomial det_cofactor(const SymMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("det: matrix not square");
    std::vector<int> rows(static_cast<std::size_t>(m.rows()));
    std::vector<int> cols(static_cast<std::size_t>(m.cols()));
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    return det_rec(m, rows, cols);
}

Polynomial det_leibniz(const SymMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("det: matrix not square");
    const int k = m.rows();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Monomial> terms;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
            }
        }
        Monomial term;
        term.coeff = (inversions % 2 == 0) ? 1 : -1;
        bool zero = false;
        for (int r = 1; r <= k && !zero; ++r) {
            const Entry& e = m.at(r, perm[static_cast<std::size_t>(r - 1)]);
            switch (e.kind) {
                case EntryKind::zero: zero = true; break;
                case EntryKind::one: break;
                case EntryKind::var: term.vars.push_back(e.var); break;
            }
        }
        if (!zero) terms.push_back(std::move(term));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial(std::move(terms));
}

std::vector<RankCondition> fulton_conditions(const Permutation& w) {
    std::vector<RankCondition> conds;
    for (const Cell& e : essential_cells(opposite_rothe(w))) {
        conds.push_back(RankCondition{e.row, e.col, w.rank(e.row, e.col), w.n()});
    }
    return conds;
}

std::vector<Polynomial> expand_minors(const SymMatrix& m, const RankCondition& cond,
                                      int size_limit) {
    const int k = cond.bound + 1;
    if (k > size_limit) {
        throw domain_error("expand_minors: minor size " + std::to_string(k) +
                           " exceeds limit " + std::to_string(size_limit));
    }
    std::vector<int> block_rows;
    for (int r = cond.a; r <= cond.n; ++r) block_rows.push_back(r);
    std::vector<int> block_cols;
    for (int c = 1; c <= cond.b; ++c) block_cols.push_back(c);
    const int nr = static_cast<int>(block_rows.size());
    const int nc = static_cast<int>(block_cols.size());
    if (k > nr || k > nc) return {};  // vacuous condition

    std::vector<Polynomial> out;
    std::vector<int> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
    std::iota(rsel.begin(), rsel.end(), 0);
    for (;;) {
        std::iota(csel.begin(), csel.end(), 0);
        for (;;) {
            std::vector<int> rr, cc;
            for (int i : rsel) rr.push_back(block_rows[static_cast<std::size_t>(i)]);
            for (int i : csel) cc.push_back(block_cols[static_cast<std::size_t>(i)]);
            Polynomial d = det_cofactor(m.submatrix(rr, cc));
            // Generators matter only up to sign; store the normalised form so
            // the sort/unique below and cross-checks against other generator
            // lists are insensitive to the orientation of the minor.
            if (!d.is_zero()) out.push_back(d.sign_normalized());
            // advance column combination
            int i = k - 1;
            while (i >= 0 && csel[static_cast<std::size_t>(i)] == nc - k + i) --i;
            if (i < 0) break;
            ++csel[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) csel[static_cast<std::size_t>(j)] = csel[static_cast<std::size_t>(j - 1)] + 1;
        }
        int i = k - 1;
        while (i >= 0 && rsel[static_cast<std::size_t>(i)] == nr - k + i) --i;
        if (i < 0) break;
        ++rsel[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) rsel[static_cast<std::size_t>(j)] = rsel[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mskl
