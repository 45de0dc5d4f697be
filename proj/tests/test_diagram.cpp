#include <algorithm>
#include <vector>

#include "doctest.h"
#include "mskl/diagram.hpp"
#include "mskl/permutation.hpp"

using namespace mskl;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("opposite Rothe diagram of the running example") {
    const Diagram d = opposite_rothe(P("45231"));
    CHECK(d.cells() == std::vector<Cell>{{3, 3}, {5, 1}});
}

TEST_CASE("diagram size complements the Coxeter length") {
    // |D(w)| = n(n-1)/2 - l(w): the diagram shrinks as the word gets longer.
    for (const char* s : {"1234", "4321", "2143", "45231", "423516", "58672341"}) {
        const Permutation w = P(s);
        const int n = w.n();
        CHECK(static_cast<int>(opposite_rothe(w).size()) ==
              n * (n - 1) / 2 - w.inversions());
    }
    CHECK(opposite_rothe(Permutation::longest(6)).empty());
    CHECK(opposite_rothe(Permutation::identity(6)).size() == 15);
}

TEST_CASE("essential cells are the north-east corners") {
    CHECK(essential_cells(opposite_rothe(P("45231"))) == std::vector<Cell>{{3, 3}, {5, 1}});
    // The identity diagram is the full strict lower triangle: one corner.
    CHECK(essential_cells(opposite_rothe(Permutation::identity(4))) ==
          std::vector<Cell>{{2, 1}, {3, 2}, {4, 3}});
}

TEST_CASE("regions of 45231") {
    const Regions reg = regions(P("45231"));
    CHECK(reg.dcirc.size() == 2);
    CHECK(reg.essential == std::vector<Cell>{{3, 3}, {5, 1}});
    // SW = union of rectangles [a..n] x [1..b] over essential (a, b).
    CHECK(reg.sw.size() == 9);
    CHECK(reg.dom.size() == 1);  // (3,3) is not 4-adjacent to (5,1)
    CHECK(reg.l.size() == 8);
    CHECK(reg.lprime.size() == 7);
}

TEST_CASE("dominant piece is the 4-adjacency component of the corner") {
    const Regions reg = regions(P("423516"));
    CHECK(reg.dcirc.size() == 9);
    CHECK(reg.sw.size() == 12);
    CHECK(reg.dom.size() == 8);  // rows 5-6 of the diagram hang together
    CHECK(reg.lprime.size() == 3);
    // dom is always a subset of the diagram and of sw.
    for (const Cell& c : reg.dom.cells()) {
        CHECK(reg.dcirc.contains(c));
        CHECK(reg.sw.contains(c));
    }
}

TEST_CASE("hook split succeeds exactly on disjoint hook shapes") {
    // A single hook.
    const Diagram one(5, {{3, 1}, {4, 1}, {4, 2}, {4, 3}});
    auto hooks = hook_split(one);
    REQUIRE(hooks.has_value());
    REQUIRE(hooks->size() == 1);
    CHECK((*hooks)[0].corner == Cell{4, 1});
    CHECK((*hooks)[0].height == 2);
    CHECK((*hooks)[0].width == 3);

    // Two components sharing a column are rejected.
    CHECK_FALSE(hook_split(Diagram(5, {{1, 1}, {3, 1}})).has_value());

    // A 2x2 square is not a hook.
    CHECK_FALSE(hook_split(Diagram(5, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})).has_value());

    // Empty set splits into zero hooks.
    auto none = hook_split(Diagram(5, {}));
    REQUIRE(none.has_value());
    CHECK(none->empty());
}

TEST_CASE("hook geometry accessors") {
    const Diagram d(6, {{2, 3}, {3, 3}, {4, 3}, {4, 4}});
    auto hooks = hook_split(d);
    REQUIRE(hooks.has_value());
    const Hook& h = (*hooks)[0];
    CHECK(h.corner == Cell{4, 3});
    CHECK(h.top_row() == 2);
    CHECK(h.last_col() == 4);
    CHECK(h.cells.size() == 4);
}

TEST_CASE("staircase layout of 423516") {
    const Regions reg = regions(P("423516"));
    auto st = hook_decomposition(reg, HeightRule::above);
    REQUIRE(st.has_value());
    REQUIRE(st->hooks.size() == 1);
    CHECK(st->hooks[0].corner == Cell{4, 1});
    CHECK(st->hooks[0].height == 2);
    CHECK(st->hooks[0].width == 2);
    CHECK(st->max_sw_col == 5);

    CHECK(st->label(1).kind == ColumnKind::hook);
    CHECK(st->label(2).kind == ColumnKind::alpha);
    CHECK(st->label(2).block == 0);
    // Columns 3..5 form the east beta block, in two steps (3 | 4 5).
    for (int c = 3; c <= 5; ++c) CHECK(st->label(c).kind == ColumnKind::beta);
    CHECK(st->label(3).step == 0);
    CHECK(st->label(4).step == 1);
    CHECK(st->label(5).step == 1);
    CHECK(st->label(5).pos == 2);
    CHECK(st->label(5).last_col_of_step);
    CHECK(st->label(5).last_step);
}

TEST_CASE("layout is absent when lprime is not a hook union") {
    const Regions reg = regions(P("45231"));
    CHECK_FALSE(hook_decomposition(reg, HeightRule::above).has_value());
}
