#include "mskl/diagram.hpp"

#include <algorithm>
#include <cassert>

#include "mskl/error.hpp"

namespace mskl {

Diagram::Diagram(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 0) throw domain_error("diagram: negative grid size");
    for (const Cell& c : cells_) {
        if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) {
            throw domain_error("diagram: cell (" + std::to_string(c.row) + "," +
                               std::to_string(c.col) + ") outside " + std::to_string(n) +
                               "x" + std::to_string(n) + " grid");
        }
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Diagram::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Diagram Diagram::set_minus(const Diagram& other) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) {
        if (!other.contains(c)) out.push_back(c);
    }
    return Diagram(n_, std::move(out));
}

std::vector<std::vector<Cell>> Diagram::components() const {
    std::vector<std::vector<Cell>> comps;
    std::vector<char> used(cells_.size(), 0);
    for (std::size_t start = 0; start < cells_.size(); ++start) {
        if (used[start]) continue;
        std::vector<Cell> comp;
        std::vector<std::size_t> stack{start};
        used[start] = 1;
        while (!stack.empty()) {
            const std::size_t at = stack.back();
            stack.pop_back();
            const Cell c = cells_[at];
            comp.push_back(c);
            const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col},
                                  {c.row, c.col - 1}, {c.row, c.col + 1}};
            for (const Cell& nb : nbrs) {
                auto it = std::lower_bound(cells_.begin(), cells_.end(), nb);
                if (it != cells_.end() && *it == nb) {
                    const auto idx = static_cast<std::size_t>(it - cells_.begin());
                    if (!used[idx]) {
                        used[idx] = 1;
                        stack.push_back(idx);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

Diagram opposite_rothe(const Permutation& w) {
    const int n = w.n();
    const Permutation winv = w.inverse();
    std::vector<Cell> cells;
    for (int j = 1; j <= n; ++j) {
        for (int i = w(j) + 1; i <= n; ++i) {
            if (winv(i) > j) cells.push_back(Cell{i, j});
        }
    }
    return Diagram(n, std::move(cells));
}

std::vector<Cell> ne_corners(const Diagram& d) {
    std::vector<Cell> out;
    for (const Cell& c : d.cells()) {
        if (!d.contains(c.row - 1, c.col) && !d.contains(c.row, c.col + 1)) out.push_back(c);
    }
    return out;
}

std::vector<Cell> sw_corners(const Diagram& d) {
    // Lowest cell of its entire column and leftmost cell of its entire row
    // (not merely corner-adjacent): distinct corners never share a row or
    // column, which is what the component-counting results rely on.
    std::vector<Cell> out;
    for (const Cell& c : d.cells()) {
        bool corner = true;
        for (const Cell& o : d.cells()) {
            if ((o.col == c.col && o.row > c.row) || (o.row == c.row && o.col < c.col)) {
                corner = false;
                break;
            }
        }
        if (corner) out.push_back(c);
    }
    return out;
}

std::vector<Cell> essential_cells(const Diagram& opposite_rothe_diagram) {
    return ne_corners(opposite_rothe_diagram);
}

Regions regions(const Permutation& w) {
    Regions reg(w);
    const int n = w.n();
    reg.dcirc = opposite_rothe(w);
    reg.essential = essential_cells(reg.dcirc);

    // sw: union of the rectangles [a..n] x [1..b] over essential cells (a, b).
    // Column c is covered from row top[c] down, where top[c] is the smallest
    // essential row among essential cells weakly east of c.
    std::vector<int> top(static_cast<std::size_t>(n) + 2, n + 1);
    for (const Cell& e : reg.essential) {
        for (int c = 1; c <= e.col; ++c) {
            top[static_cast<std::size_t>(c)] = std::min(top[static_cast<std::size_t>(c)], e.row);
        }
    }
    std::vector<Cell> sw_cells;
    for (int c = 1; c <= n; ++c) {
        for (int r = top[static_cast<std::size_t>(c)]; r <= n; ++r) sw_cells.push_back(Cell{r, c});
    }
    reg.sw = Diagram(n, std::move(sw_cells));

    // dom: the component of (n, 1) in dcirc.
    std::vector<Cell> dom_cells;
    if (reg.dcirc.contains(n, 1)) {
        for (const auto& comp : reg.dcirc.components()) {
            if (std::binary_search(comp.begin(), comp.end(), Cell{n, 1})) {
                dom_cells = comp;
                break;
            }
        }
    }
    reg.dom = Diagram(n, std::move(dom_cells));

    reg.l = reg.sw.set_minus(reg.dom);
    reg.lprime = reg.sw.set_minus(reg.dcirc);
    return reg;
}

std::optional<std::vector<Hook>> hook_split(const Diagram& d) {
    std::vector<Hook> hooks;
    for (const auto& comp : d.components()) {
        // The corner is the unique cell with the largest row; among cells in
        // that row it is the leftmost one.
        Cell corner = comp.front();
        for (const Cell& c : comp) {
            if (c.row > corner.row || (c.row == corner.row && c.col < corner.col)) corner = c;
        }
        int top = corner.row;
        int right = corner.col;
        for (const Cell& c : comp) {
            if (c.col == corner.col && c.row <= corner.row) {
                top = std::min(top, c.row);
            } else if (c.row == corner.row && c.col >= corner.col) {
                right = std::max(right, c.col);
            } else {
                return std::nullopt;  // cell off the leg and off the arm
            }
        }
        Hook h;
        h.corner = corner;
        h.height = corner.row - top + 1;
        h.width = right - corner.col + 1;
        h.cells = comp;
        // Contiguity: a hook with this corner, height, and width has exactly
        // height + width - 1 cells.
        if (static_cast<int>(comp.size()) != h.height + h.width - 1) return std::nullopt;
        hooks.push_back(std::move(h));
    }
    std::sort(hooks.begin(), hooks.end(),
              [](const Hook& a, const Hook& b) { return a.corner.col < b.corner.col; });
    // No two hooks may share a row or a column.  Hooks span contiguous row
    // and column intervals, so it suffices to compare neighbours after
    // sorting by the interval starts.
    for (std::size_t i = 0; i + 1 < hooks.size(); ++i) {
        if (hooks[i].last_col() >= hooks[i + 1].corner.col) return std::nullopt;
    }
    std::vector<std::pair<int, int>> row_spans;
    row_spans.reserve(hooks.size());
    for (const Hook& h : hooks) row_spans.emplace_back(h.top_row(), h.corner.row);
    std::sort(row_spans.begin(), row_spans.end());
    for (std::size_t i = 0; i + 1 < row_spans.size(); ++i) {
        if (row_spans[i].second >= row_spans[i + 1].first) return std::nullopt;
    }
    return hooks;
}

namespace {

// Groups the columns [first..last] into steps by runs of equal top row.
// Tops must be weakly increasing over the range.
std::optional<std::vector<Step>> build_steps(int first, int last, const std::vector<int>& top) {
    std::vector<Step> steps;
    for (int c = first; c <= last; ++c) {
        const int t = top[static_cast<std::size_t>(c)];
        if (!steps.empty() && t < steps.back().top_row) return std::nullopt;
        if (!steps.empty() && t == steps.back().top_row) {
            ++steps.back().width;
        } else {
            Step s;
            s.first_col = c;
            s.width = 1;
            s.top_row = t;
            steps.push_back(s);
        }
    }
    return steps;
}

void fill_labels(StaircaseStructure& st, const Block& block, ColumnKind kind, int block_index) {
    for (std::size_t si = 0; si < block.steps.size(); ++si) {
        const Step& s = block.steps[si];
        for (int k = 1; k <= s.width; ++k) {
            ColumnLabel& lab = st.column[static_cast<std::size_t>(s.first_col + k - 1)];
            lab.kind = kind;
            lab.block = block_index;
            lab.step = static_cast<int>(si);
            lab.pos = k;
            lab.last_col_of_step = (k == s.width);
            lab.last_step = (si + 1 == block.steps.size());
        }
    }
}

}  // namespace

std::optional<StaircaseStructure> hook_decomposition(const Regions& reg, HeightRule rule) {
    auto hooks = hook_split(reg.lprime);
    if (!hooks) return std::nullopt;

    const int n = reg.n();
    StaircaseStructure st;
    st.hooks = std::move(*hooks);
    st.column.assign(static_cast<std::size_t>(n) + 1, ColumnLabel{});

    // Top of each sw column; sw columns are exactly 1..max_sw_col and each is
    // a contiguous run from its top down to row n.
    std::vector<int> top(static_cast<std::size_t>(n) + 1, n + 1);
    for (const Cell& c : reg.sw.cells()) {
        top[static_cast<std::size_t>(c.col)] = std::min(top[static_cast<std::size_t>(c.col)], c.row);
        st.max_sw_col = std::max(st.max_sw_col, c.col);
    }
    for (int c = 1; c + 1 <= st.max_sw_col; ++c) {
        assert(top[static_cast<std::size_t>(c)] <= top[static_cast<std::size_t>(c) + 1]);
    }

    const int nhooks = static_cast<int>(st.hooks.size());
    st.alpha.resize(static_cast<std::size_t>(nhooks));
    st.beta.resize(static_cast<std::size_t>(nhooks) + 1);

    for (int j = 0; j < nhooks; ++j) {
        const Hook& h = st.hooks[static_cast<std::size_t>(j)];
        // The leg must reach the top of its sw column: anything above it in
        // the column would have to be another free cell, contradicting the
        // component split.
        if (top[static_cast<std::size_t>(h.corner.col)] != h.top_row()) return std::nullopt;
        st.column[static_cast<std::size_t>(h.corner.col)].kind = ColumnKind::hook;
        st.column[static_cast<std::size_t>(h.corner.col)].block = j;

        // Arm columns: cells stacked above the arm must be non-dominant
        // diagram cells; they form the alpha block.  Once a column's top
        // reaches the arm row there is nothing above the arm any more (tops
        // only grow eastwards), so the alpha columns are a prefix of the arm.
        int alpha_last = h.corner.col;
        for (int c = h.corner.col + 1; c <= h.last_col(); ++c) {
            const int t = top[static_cast<std::size_t>(c)];
            if (t > h.corner.row) return std::nullopt;  // arm cell missing from sw
            for (int r = t; r < h.corner.row; ++r) {
                if (!reg.dcirc.contains(r, c) || reg.dom.contains(r, c)) return std::nullopt;
            }
            if (t < h.corner.row && alpha_last == c - 1) alpha_last = c;
        }
        if (alpha_last > h.corner.col) {
            auto steps = build_steps(h.corner.col + 1, alpha_last, top);
            if (!steps) return std::nullopt;
            st.alpha[static_cast<std::size_t>(j)].steps = std::move(*steps);
        }

        // Below the hook everything must be dominant.
        for (int c = h.corner.col; c <= h.last_col(); ++c) {
            for (int r = h.corner.row + 1; r <= n; ++r) {
                if (!reg.dom.contains(r, c)) return std::nullopt;
            }
        }
    }

    // Gap columns between/around hooks: must consist of dominant cells only.
    for (int j = 0; j <= nhooks; ++j) {
        const int first = (j == 0) ? 1 : st.hooks[static_cast<std::size_t>(j) - 1].last_col() + 1;
        const int last =
            (j == nhooks) ? st.max_sw_col : st.hooks[static_cast<std::size_t>(j)].corner.col - 1;
        if (first > last) continue;
        for (int c = first; c <= last; ++c) {
            for (int r = top[static_cast<std::size_t>(c)]; r <= n; ++r) {
                if (!reg.dom.contains(r, c)) return std::nullopt;
            }
        }
        auto steps = build_steps(first, last, top);
        if (!steps) return std::nullopt;
        st.beta[static_cast<std::size_t>(j)].steps = std::move(*steps);
    }

    // Heights.  Later steps: top-row difference against the previous step.
    // First step of a beta block: top row minus the row just below the corner
    // of the hook to its west (row 0 when there is no hook to the west).
    // First step of an alpha block: boundary rules against the gap block to
    // the west of the hook.
    for (int j = 0; j <= nhooks; ++j) {
        Block& b = st.beta[static_cast<std::size_t>(j)];
        for (std::size_t si = 0; si < b.steps.size(); ++si) {
            if (si == 0) {
                const int west_corner_row =
                    (j == 0) ? 0 : st.hooks[static_cast<std::size_t>(j) - 1].corner.row;
                b.steps[si].height = b.steps[si].top_row - (west_corner_row + 1);
                if (b.steps[si].height < 0) return std::nullopt;
            } else {
                b.steps[si].height = b.steps[si].top_row - b.steps[si - 1].top_row;
            }
        }
    }
    for (int j = 0; j < nhooks; ++j) {
        Block& a = st.alpha[static_cast<std::size_t>(j)];
        const Hook& h = st.hooks[static_cast<std::size_t>(j)];
        for (std::size_t si = 0; si < a.steps.size(); ++si) {
            if (si == 0) {
                const int t = a.steps[0].top_row;
                if (st.beta[static_cast<std::size_t>(j)].empty()) {
                    a.steps[0].height = (j == 0) ? t - 1 : 0;
                } else {
                    // Count diagram cells in the column just west of the hook
                    // column, on the side of the block's top row selected by
                    // the rule.
                    const int probe_col = h.corner.col - 1;
                    int count = 0;
                    for (const Cell& c : reg.dcirc.cells()) {
                        if (c.col != probe_col) continue;
                        if (rule == HeightRule::below ? c.row > t : c.row < t) ++count;
                    }
                    a.steps[0].height = count;
                }
            } else {
                a.steps[si].height = a.steps[si].top_row - a.steps[si - 1].top_row;
            }
        }
    }

    for (int j = 0; j < nhooks; ++j) {
        fill_labels(st, st.alpha[static_cast<std::size_t>(j)], ColumnKind::alpha, j);
    }
    for (int j = 0; j <= nhooks; ++j) {
        fill_labels(st, st.beta[static_cast<std::size_t>(j)], ColumnKind::beta, j);
    }
    return st;
}

}  // namespace mskl
