#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mskl/permutation.hpp"

namespace mskl {

// A grid position; row 1 is the top row, column 1 the leftmost column.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells inside an n x n grid, kept sorted row-major.
class Diagram {
public:
    Diagram() = default;
    Diagram(int n, std::vector<Cell> cells);

    int n() const { return n_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(const Cell& c) const;
    bool contains(int row, int col) const { return contains(Cell{row, col}); }

    // Cells of *this that are not in `other` (grid size kept).
    Diagram set_minus(const Diagram& other) const;

    // Partition into 4-adjacency connected components, each sorted row-major;
    // the list is ordered by each component's smallest cell.
    std::vector<std::vector<Cell>> components() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    int n_ = 0;
    std::vector<Cell> cells_;
};

// Cells (i, j) strictly below the 1 in column j and strictly left of the 1 in
// row i:  w(j) < i  and  w^{-1}(i) > j.
Diagram opposite_rothe(const Permutation& w);

// Cells of d with no cell directly above and none directly to the right
// (northeast corners of the components).
std::vector<Cell> ne_corners(const Diagram& d);

// Cells of d that are the lowest in their whole column and the leftmost in
// their whole row.  Two such corners never share a row or a column.
std::vector<Cell> sw_corners(const Diagram& d);

// The essential cells of a permutation's opposite Rothe diagram: the
// northeast corners.  Rank conditions at these cells suffice to cut out the
// matrix Schubert variety.
std::vector<Cell> essential_cells(const Diagram& opposite_rothe_diagram);

// The region decomposition attached to a permutation.
//
//   dcirc   the opposite Rothe diagram D
//   sw      union over essential cells (a, b) of the full rectangles
//           [a..n] x [1..b]
//   dom     the 4-adjacency component of (n, 1) inside dcirc (empty when
//           (n,1) is not in dcirc); the "dominant" piece
//   l       sw minus dom
//   lprime  sw minus dcirc (the free non-dominant coordinates)
//
// dcirc is always contained in sw, so lprime is also l minus dcirc.
struct Regions {
    Permutation w;
    Diagram dcirc;
    Diagram sw;
    Diagram dom;
    Diagram l;
    Diagram lprime;
    std::vector<Cell> essential;

    explicit Regions(Permutation perm) : w(std::move(perm)) {}
    int n() const { return w.n(); }
};

Regions regions(const Permutation& w);

// A hook: its corner cell plus the cells above the corner in the same column
// (the leg) and to the right of the corner in the same row (the arm).
struct Hook {
    Cell corner;
    int height = 1;  // number of rows spanned, corner included
    int width = 1;   // number of columns spanned, corner included
    std::vector<Cell> cells;

    int top_row() const { return corner.row - height + 1; }
    int last_col() const { return corner.col + width - 1; }
};

// Splits a cell set into hooks: succeeds iff every 4-adjacency component is
// hook-shaped and no two components share a row or a column.  Hooks are
// returned west to east.  This is the toricity test when applied to lprime.
std::optional<std::vector<Hook>> hook_split(const Diagram& d);

// --- Staircase layout -------------------------------------------------------
//
// When lprime splits into hooks, the columns of sw organise into a staircase
// layout: each hook contributes its corner column and an "alpha" block (the
// arm columns together with the diagram cells stacked above the arm), and the
// leftover columns, which contain only dominant cells, form "beta" blocks
// sitting before, between, and after the hooks.  Each block is a descending
// staircase; a step is a maximal run of adjacent columns whose content starts
// at the same top row.

struct Step {
    int first_col = 0;
    int width = 0;
    int top_row = 0;
    // For the first step of a block the height is given by boundary rules
    // (see below); for later steps it is this step's top row minus the
    // previous step's top row.
    int height = 0;
};

struct Block {
    std::vector<Step> steps;  // west to east
    bool empty() const { return steps.empty(); }
    int first_col() const { return steps.front().first_col; }
    int last_col() const { return steps.back().first_col + steps.back().width - 1; }
};

// Two readings of the boundary rule for the height of the first step of an
// alpha block whose hook has a gap block directly to its west.  Both count
// diagram cells in the column just west of the hook column; `below` counts
// those strictly below the step's top row, `above` those strictly above.
// They disagree in general; the reflection sweep pins down the right one.
enum class HeightRule { below, above };

enum class ColumnKind { none, hook, alpha, beta };

struct ColumnLabel {
    ColumnKind kind = ColumnKind::none;
    int block = -1;  // hook index for hook/alpha columns, beta block index otherwise
    int step = -1;   // 0-based step index within the block
    int pos = 0;     // 1-based position within the step
    bool last_col_of_step = false;
    bool last_step = false;
};

struct StaircaseStructure {
    std::vector<Hook> hooks;          // west to east
    std::vector<Block> alpha;         // alpha[j] belongs to hooks[j]; may be empty
    std::vector<Block> beta;          // size hooks+1; beta[j] west of hooks[j], last one east
    std::vector<ColumnLabel> column;  // indexed 1..n (entry 0 unused)
    int max_sw_col = 0;               // rightmost column of sw, 0 if sw empty

    const ColumnLabel& label(int col) const { return column[static_cast<std::size_t>(col)]; }
};

// Builds the staircase layout for a permutation whose lprime region splits
// into hooks.  Returns nullopt if lprime is not a disjoint union of hooks or
// if the surrounding diagram violates the layout the labels depend on (leg
// not reaching the top of its sw column, non-dominant cells in a gap column,
// column tops not weakly increasing eastwards, ...).  Arm columns with no
// diagram cells above the arm are left unlabeled.
std::optional<StaircaseStructure> hook_decomposition(const Regions& reg, HeightRule rule);

}  // namespace mskl
