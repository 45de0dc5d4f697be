#include "mskl/kl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mskl/bruhat.hpp"
#include "mskl/error.hpp"

namespace mskl {

SymMatrix chart_matrix(const Permutation& v) {
    const int n = v.n();
    const Permutation vi = v.inverse();
    SymMatrix m(n, n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            if (r == v(c)) {
                m.at(r, c) = Entry::make_one();
            } else if (r < v(c) || c > vi(r)) {
                m.at(r, c) = Entry::make_zero();
            } else {
                m.at(r, c) = Entry::make_var(Var{'z', r, c});
            }
        }
    }
    return m;
}

std::vector<Cell> forced_zeros(const Permutation& v, const Permutation& w) {
    std::vector<Cell> out;
    const Diagram dv = opposite_rothe(v);
    for (const Cell& c : dv.cells()) {
        const Permutation moved = v.swap_values(v(c.col), c.row);
        if (!bruhat_leq(moved, w)) out.push_back(c);
    }
    return out;
}

namespace {

DiGraph graph_from_cells(const Permutation& v, const std::vector<Cell>& cells) {
    const int n = v.n();
    std::vector<VertexId> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) verts.push_back(plain(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(cells.size());
    for (const Cell& c : cells) edges.emplace_back(plain(v(c.col)), plain(c.row));
    return DiGraph(std::move(verts), std::move(edges));
}

}  // namespace

DiGraph weight_graph(const Permutation& v, const Permutation& w) {
    const std::vector<Cell> zeros = forced_zeros(v, w);
    std::vector<Cell> cells;
    const Diagram dv = opposite_rothe(v);
    for (const Cell& c : dv.cells()) {
        if (!std::binary_search(zeros.begin(), zeros.end(), c)) cells.push_back(c);
    }
    return graph_from_cells(v, cells);
}

DiGraph weight_graph_full(const Permutation& v) {
    return graph_from_cells(v, opposite_rothe(v).cells());
}

KLReport kl_analyze(const Permutation& v, const Permutation& w, bool with_generators) {
    if (v.n() != w.n()) throw domain_error("kl_analyze: sizes differ");
    if (!bruhat_leq(v, w)) throw domain_error("kl_analyze: pair is not ordered");

    KLReport rep;
    rep.v = v;
    rep.w = w;
    const Diagram dv = opposite_rothe(v);
    const Diagram dw = opposite_rothe(w);
    rep.dim = static_cast<int>(dv.size()) - static_cast<int>(dw.size());
    rep.zeros = forced_zeros(v, w);
    rep.g = weight_graph(v, w);
    rep.dim_sigma = cone_dimension(rep.g);
    rep.complexity = rep.dim - rep.dim_sigma;

    if (with_generators) {
        const SymMatrix m = chart_matrix(v);
        for (const RankCondition& cond : fulton_conditions(w)) {
            std::vector<Polynomial> part = expand_minors(m, cond);
            rep.generators.insert(rep.generators.end(), part.begin(), part.end());
        }
        std::sort(rep.generators.begin(), rep.generators.end());
        rep.generators.erase(std::unique(rep.generators.begin(), rep.generators.end()),
                             rep.generators.end());
    }
    return rep;
}

std::vector<Cell> corner_cells(const Permutation& v) {
    return sw_corners(opposite_rothe(v));
}

std::vector<int> lone_antidiagonal_points(const Permutation& v) {
    const int n = v.n();
    const Diagram d = opposite_rothe(v);
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (v(i) != n + 1 - i) continue;
        bool lone = true;
        for (const Cell& c : d.cells()) {
            if (c.col == i || c.row == n + 1 - i) {
                lone = false;
                break;
            }
        }
        if (lone) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<Cell, Cell>> diagonal_pairs(const Permutation& v) {
    const Diagram dv = opposite_rothe(v);
    const std::vector<Cell>& cells = dv.cells();
    std::vector<std::pair<Cell, Cell>> accepted;
    std::set<Cell> used_first, used_second;

    // Bucket the southeast-pointing pairs by taxicab distance.
    std::map<int, std::vector<std::pair<Cell, Cell>>> by_distance;
    for (const Cell& a : cells) {
        for (const Cell& b : cells) {
            if (a.row < b.row && a.col < b.col) {
                by_distance[(b.row - a.row) + (b.col - a.col)].emplace_back(a, b);
            }
        }
    }
    for (const auto& [d, bucket] : by_distance) {
        std::vector<std::pair<Cell, Cell>> round;
        for (const auto& p : bucket) {
            if (!used_first.count(p.first) && !used_second.count(p.second)) round.push_back(p);
        }
        // Same-distance pairs never block each other, so commit per round.
        for (const auto& p : round) {
            accepted.push_back(p);
            used_first.insert(p.first);
            used_second.insert(p.second);
        }
    }
    return accepted;
}

std::vector<Polynomial> toric_binomials(const Permutation& v) {
    const Diagram d = opposite_rothe(v);
    const Permutation vi = v.inverse();
    std::vector<Polynomial> out;
    for (const Cell& c : d.cells()) {
        int best_i = 0, best_d = 0;
        for (const Cell& mid : d.cells()) {
            if (mid.col != c.col || mid.row == c.row) continue;
            const int i = mid.row;
            if (!d.contains(c.row, vi(i))) continue;
            const int dist = (c.row - i) + (vi(i) - c.col);
            if (best_i == 0 || dist < best_d || (dist == best_d && i < best_i)) {
                best_i = i;
                best_d = dist;
            }
        }
        if (best_i == 0) continue;
        const Polynomial z_kj = Polynomial::variable(Var{'z', c.row, c.col});
        const Polynomial z_ij = Polynomial::variable(Var{'z', best_i, c.col});
        const Polynomial z_kc = Polynomial::variable(Var{'z', c.row, vi(best_i)});
        out.push_back(z_kj - z_ij * z_kc);
    }
    return out;
}

bool moved_vertex(const DiGraph& g, int x) {
    for (const auto& comp : g.components()) {
        for (const VertexId& u : comp) {
            if (!u.star && u.id == x) return comp.size() > 1;
        }
    }
    return false;
}

std::vector<std::vector<int>> matched_cycles(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw domain_error("matched_cycles: sizes differ");
    const Permutation pi = w.inverse() * v;
    const int n = v.n();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int a = 1; a <= n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        std::vector<int> orbit;
        int x = a;
        do {
            orbit.push_back(x);
            seen[static_cast<std::size_t>(x)] = true;
            x = pi(x);
        } while (x != a);
        std::sort(orbit.begin(), orbit.end());
        cycles.push_back(std::move(orbit));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

std::map<int, int> component_index(const DiGraph& g) {
    std::map<int, int> idx;
    int k = 0;
    for (const auto& comp : g.components()) {
        for (const VertexId& u : comp) {
            if (!u.star) idx[u.id] = k;
        }
        ++k;
    }
    return idx;
}

}  // namespace

bool glue_stays_toric(const DiGraph& lower, const DiGraph& upper) {
    const std::map<int, int> lo = component_index(lower);
    const std::map<int, int> hi = component_index(upper);
    if (lo.size() != hi.size()) throw domain_error("glue_stays_toric: vertex sets differ");

    // One node per component on each side, one link per shared vertex; the
    // union of the two graphs is a forest exactly when these links are.
    const int nl = lower.component_count();
    std::vector<int> parent(static_cast<std::size_t>(nl + upper.component_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [vertex, cl] : lo) {
        const auto it = hi.find(vertex);
        if (it == hi.end()) throw domain_error("glue_stays_toric: vertex sets differ");
        const int a = find(cl), b = find(nl + it->second);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

bool extend_stays_toric(const Permutation& v, const Permutation& w_base,
                        const Permutation& w_top) {
    if (!is_cover(w_base, w_top)) throw domain_error("extend_stays_toric: not a cover");
    const Chain chain = some_chain(v, w_base);
    const DiGraph g = chain_graph(chain);
    if (g.cyclomatic() != 0) throw domain_error("extend_stays_toric: base pair is not toric");

    // Values exchanged by the cover; the chain graph lives on values.
    int a = 0, b = 0;
    for (int i = 1; i <= v.n(); ++i) {
        if (w_base(i) != w_top(i)) {
            if (a == 0) {
                a = w_base(i);
            } else {
                b = w_base(i);
            }
        }
    }
    const std::map<int, int> idx = component_index(g);
    return idx.at(a) != idx.at(b);
}

std::optional<RectangleShape> rectangle_shape(const Permutation& w) {
    const Diagram d = opposite_rothe(w);
    if (d.size() == 0) return std::nullopt;
    int minr = w.n(), maxr = 1, minc = w.n(), maxc = 1;
    for (const Cell& c : d.cells()) {
        minr = std::min(minr, c.row);
        maxr = std::max(maxr, c.row);
        minc = std::min(minc, c.col);
        maxc = std::max(maxc, c.col);
    }
    const int rows = maxr - minr + 1, cols = maxc - minc + 1;
    if (static_cast<int>(d.size()) != rows * cols) return std::nullopt;
    RectangleShape shape;
    shape.ess = Cell{minr, maxc};
    shape.m = w.rank(minr, maxc);
    shape.rows = rows;
    shape.cols = cols;
    return shape;
}

int rectangle_complexity(const Permutation& v, const Permutation& w) {
    const auto shape = rectangle_shape(w);
    if (!shape) throw domain_error("rectangle_complexity: diagram is not one rectangle");
    if (!bruhat_leq(v, w)) throw domain_error("rectangle_complexity: pair is not ordered");
    const int r = v.rank(shape->ess.row, shape->ess.col);
    if (r < shape->m) {
        return static_cast<int>(diagonal_pairs(v).size()) - shape->rows * shape->cols;
    }
    return weight_graph(v, w).cyclomatic();
}

Permutation longest_times_swap(int n, int l, int k) {
    if (l < 1 || l >= k || k > n) throw domain_error("longest_times_swap: bad positions");
    return Permutation::longest(n).swap_positions(l, k);
}

int longest_times_swap_complexity(const Permutation& v, int l, int k) {
    const int n = v.n();
    const Permutation w = longest_times_swap(n, l, k);
    if (!bruhat_leq(v, w)) throw domain_error("longest_times_swap_complexity: pair is not ordered");
    const int a1 = n - k + 2, b1 = l;
    const int a2 = n - l + 1, b2 = k - 1;
    const int m = l - 1;
    const int r1 = v.rank(a1, b1), r2 = v.rank(a2, b2);
    if (r1 < m && r2 < m) {
        return static_cast<int>(diagonal_pairs(v).size()) - (2 * (k - l) - 1);
    }
    const int nu = weight_graph(v, w).cyclomatic();
    if (r1 == m && r2 == m) return nu;
    return nu + l - k + 1;
}

}  // namespace mskl
