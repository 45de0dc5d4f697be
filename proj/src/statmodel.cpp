#include "mskl/statmodel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mskl/diagram.hpp"
#include "mskl/error.hpp"

namespace mskl {

namespace {

// Sorted union of two disjoint sorted sets.
std::vector<int> merged(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    out.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// Calls visit(subset) for every k-subset of {0, .., total-1}, in
// lexicographic order.
void for_each_subset(int total, int k, std::vector<int>& scratch,
                     const std::function<void(const std::vector<int>&)>& visit, int from = 0) {
    if (static_cast<int>(scratch.size()) == k) {
        visit(scratch);
        return;
    }
    for (int i = from; i <= total - (k - static_cast<int>(scratch.size())); ++i) {
        scratch.push_back(i);
        for_each_subset(total, k, scratch, visit, i + 1);
        scratch.pop_back();
    }
}

bool is_interval(const std::vector<int>& set, int lo, int hi) {
    return set == interval_set(lo, hi);
}

}  // namespace

std::vector<int> interval_set(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

CIStatement make_ci(int m, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    if (a.empty() || b.empty()) throw domain_error("CI statement needs nonempty A and B");
    std::set<int> seen;
    for (const auto* set : {&a, &b, &c}) {
        for (int x : *set) {
            if (x < 1 || x > m) throw domain_error("CI statement: entry out of range");
            if (!seen.insert(x).second) throw domain_error("CI statement: sets overlap");
        }
    }
    return CIStatement{m, std::move(a), std::move(b), std::move(c)};
}

std::vector<Polynomial> ci_condition(const CIStatement& s) {
    const SymMatrix sigma = generic_symmetric_matrix(s.m);
    const SymMatrix block = sigma.submatrix(merged(s.a, s.c), merged(s.b, s.c));
    const int k = static_cast<int>(s.c.size()) + 1;
    std::vector<Polynomial> out;
    if (k > std::min(block.rows(), block.cols())) return out;

    std::vector<int> rows, cols;
    for_each_subset(block.rows(), k, rows, [&](const std::vector<int>& ri) {
        for_each_subset(block.cols(), k, cols, [&](const std::vector<int>& ci) {
            std::vector<int> r1, c1;
            for (int r : ri) r1.push_back(r + 1);
            for (int c : ci) c1.push_back(c + 1);
            Polynomial det = det_cofactor(block.submatrix(r1, c1));
            if (!det.is_zero()) out.push_back(det.sign_normalized());
        });
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Permutation> ci_realize_ms(const CIStatement& s) {
    const int i = static_cast<int>(s.a.size());
    const int j = s.m - static_cast<int>(s.b.size()) + 1;
    if (!is_interval(s.a, 1, i) || !is_interval(s.b, j, s.m) || i >= j) return std::nullopt;

    std::vector<int> win;
    if (s.c.empty()) {
        // (j-1, ..., j-i,  m, ..., j,  j-i-1, ..., 1)
        for (int x = j - 1; x >= j - i; --x) win.push_back(x);
        for (int x = s.m; x >= j; --x) win.push_back(x);
        for (int x = j - i - 1; x >= 1; --x) win.push_back(x);
    } else if (is_interval(s.c, i + 1, j - 1)) {
        // (m, ..., m-j+i+2,  i, ..., 1,  m-j+i+1, ..., i+1)
        for (int x = s.m; x >= s.m - j + i + 2; --x) win.push_back(x);
        for (int x = i; x >= 1; --x) win.push_back(x);
        for (int x = s.m - j + i + 1; x >= i + 1; --x) win.push_back(x);
    } else {
        return std::nullopt;
    }
    return Permutation(std::move(win));
}

int ms_ci_complexity(const CIStatement& s) {
    if (!ci_realize_ms(s)) throw domain_error("statement is not realizable");
    const int c = static_cast<int>(s.c.size());
    if (c == 0) return 0;
    // (c - 1)(m - 1 - c/2), kept in integers: one of the two factors of the
    // doubled product is even.
    return (c - 1) * (2 * (s.m - 1) - c) / 2;
}

namespace {

Permutation block_chart_permutation(int n, int m) {
    std::vector<int> win;
    for (int x = n - m; x <= n; ++x) win.push_back(x);
    for (int x = n - m - 1; x >= 1; --x) win.push_back(x);
    return Permutation(std::move(win));
}

}  // namespace

KLCIRealization kl_ci_case1(int n, int m, int k, int l) {
    if (m < 2 || n < m + 1) throw domain_error("need n > m >= 2");
    if (k < 1 || l < 1 || k + l > m) throw domain_error("case (1) needs k, l >= 1 and k + l <= m");
    KLCIRealization out;
    out.v = block_chart_permutation(n, m);
    std::vector<int> win;
    for (int x = n - l; x >= n - l - k + 1; --x) win.push_back(x);
    for (int x = n; x >= n - l + 1; --x) win.push_back(x);
    for (int x = n - l - k; x >= 1; --x) win.push_back(x);
    out.w = Permutation(std::move(win));
    out.stmt = make_ci(m, interval_set(1, k), interval_set(m - l + 1, m), {});
    out.predicted_complexity = m * (m - 1) / 2 - k * l;
    out.predicted_dim_sigma = m;
    return out;
}

KLCIRealization kl_ci_case2(int n, int m, int s, int t) {
    if (m < 3 || n < m + 1) throw domain_error("need n > m >= 3");
    if (s < 1 || t < 1 || s + t != m - 1) throw domain_error("case (2) needs s, t >= 1 and s + t = m - 1");
    KLCIRealization out;
    out.v = block_chart_permutation(n, m);
    std::vector<int> win;
    win.push_back(n);
    for (int x = n - 1 - t; x >= n - t - s; --x) win.push_back(x);
    for (int x = n - 1; x >= n - t; --x) win.push_back(x);
    for (int x = n - t - s - 1; x >= 1; --x) win.push_back(x);
    out.w = Permutation(std::move(win));
    out.stmt = make_ci(m, interval_set(1, s), interval_set(s + 2, m), {s + 1});
    out.predicted_complexity = m * (m - 1) / 2 - s * t;
    out.predicted_dim_sigma = m;
    return out;
}

Var kl_ci_rename(int n, int m, const Var& z) {
    (void)m;
    const int r = z.row - (n - m);
    const int c = z.col;
    return Var{'s', std::min(r, c), std::max(r, c)};
}

QIModel make_qi(int m, int n, std::vector<std::pair<int, int>> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    std::vector<VertexId> verts;
    for (int i = 1; i <= m; ++i) verts.push_back(plain(i));
    for (int j = 1; j <= n; ++j) verts.push_back(starred(j));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [x, y] : states) {
        if (x < 1 || x > m || y < 1 || y > n) throw domain_error("state out of range");
        edges.emplace_back(plain(x), starred(y));
    }
    QIModel model;
    model.m = m;
    model.n = n;
    model.states = std::move(states);
    model.graph = DiGraph(std::move(verts), std::move(edges));
    return model;
}

std::vector<QIModel> qi_from_toric(const MSReport& rep) {
    if (!rep.toric) throw domain_error("variety is not toric");
    const auto hooks = hook_split(rep.reg.lprime);
    if (!hooks) throw std::logic_error("toric report without hook decomposition");

    std::vector<QIModel> out;
    std::size_t covered = 0;
    for (const Hook& h : *hooks) {
        const int top = h.top_row(), west = h.corner.col;
        std::vector<std::pair<int, int>> states;
        for (const Cell& c : rep.reg.l.cells()) {
            if (c.row < top || c.row > h.corner.row) continue;
            if (c.col < west || c.col > h.last_col()) continue;
            states.emplace_back(c.row - top + 1, c.col - west + 1);
        }
        covered += states.size();
        out.push_back(make_qi(h.height, h.width, std::move(states)));
    }
    // Every free cell lives in exactly one hook's bounding box; anything
    // else would leave a state unaccounted for.
    if (covered != rep.reg.l.size()) throw std::logic_error("hook boxes do not cover the free region");
    return out;
}

std::vector<QIModel> qi_from_toric(const Permutation& w) { return qi_from_toric(analyze(w)); }

bool rational_mle(const QIModel& model) { return doubly_chordal_bipartite(model.graph); }

QIModel double_square() {
    return make_qi(3, 3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}

}  // namespace mskl
