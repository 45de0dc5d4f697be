#include <set>
#include <string>
#include <utility>

#include "doctest.h"
#include "mskl/error.hpp"
#include "mskl/matrix_schubert.hpp"
#include "mskl/permutation.hpp"

using namespace mskl;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::set<std::pair<std::string, std::string>> edge_set(const DiGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : g.edges()) out.insert({a.str(), b.str()});
    return out;
}
}  // namespace

TEST_CASE("full report for 45231") {
    const MSReport rep = analyze(P("45231"));
    CHECK(rep.dim_x == 23);
    CHECK(rep.free_dim == 16);
    CHECK(rep.dim_y == 7);
    CHECK(rep.dim_sigma == 5);
    CHECK(rep.complexity == 2);
    CHECK_FALSE(rep.toric);
    CHECK_FALSE(rep.toric_hooks);
    CHECK_FALSE(rep.toric_pattern);  // contains 3412
    CHECK_FALSE(rep.staircase.has_value());
}

TEST_CASE("identity and longest element are extreme cases") {
    const MSReport id = analyze(Permutation::identity(5));
    CHECK(id.toric);
    CHECK(id.dim_y == 0);
    CHECK(id.complexity == 0);
    const MSReport w0 = analyze(Permutation::longest(5));
    CHECK(w0.toric);       // empty diagram, whole space
    CHECK(w0.dim_x == 25);
    CHECK(w0.dim_y == 0);
}

TEST_CASE("toric permutation 423516 and its staircase") {
    const MSReport rep = analyze(P("423516"));
    CHECK(rep.dim_x == 27);
    CHECK(rep.dim_y == 3);
    CHECK(rep.dim_sigma == 3);
    CHECK(rep.complexity == 0);
    CHECK(rep.toric);
    CHECK(rep.toric_pattern);
    REQUIRE(rep.staircase.has_value());
    REQUIRE(rep.staircase->hooks.size() == 1);
    CHECK(rep.staircase->hooks[0].corner == Cell{4, 1});
}

TEST_CASE("hook toricity equals pattern avoidance on all of S5") {
    int toric_count = 0;
    for (std::uint64_t i = 0; i < 120; ++i) {
        const Permutation w = Permutation::from_lex_index(5, i);
        const MSReport rep = analyze(w);
        CAPTURE(w.str());
        CHECK(rep.toric_hooks == rep.toric_pattern);
        CHECK(rep.toric == (rep.complexity == 0));
        if (rep.toric) ++toric_count;
        // No plain variety of complexity one exists at this size.
        CHECK(rep.complexity != 1);
    }
    CHECK(toric_count > 0);
}

TEST_CASE("weight-cone graph of the running example") {
    const MSReport rep = analyze(P("45231"));
    // l has 8 cells; each contributes one edge row -> col*.  The dominant
    // cell (5,1) is excluded, so no edge touches 1* from row 5.
    CHECK(rep.g.edge_count() == 8);
    CHECK(edge_set(rep.g).count({"3", "3*"}) == 1);
    CHECK(edge_set(rep.g).count({"5", "2*"}) == 1);
    CHECK(edge_set(rep.g).count({"5", "1*"}) == 0);
}

TEST_CASE("symmetric variant of 3412 has complexity one") {
    const MSReport rep = analyze(P("3412"));
    CHECK(rep.complexity == 2);
    CHECK(rep.sym.complexity == 1);
    CHECK(rep.sym.dim_sigma == rep.dim_sigma);
}

TEST_CASE("symmetric and plain cone dimensions agree on S4") {
    for (std::uint64_t i = 0; i < 24; ++i) {
        const MSReport rep = analyze(Permutation::from_lex_index(4, i));
        CAPTURE(rep.w.str());
        CHECK(rep.sym.dim_sigma == rep.dim_sigma);
    }
}

TEST_CASE("the doubling embedding realises prescribed symmetric complexities") {
    CHECK(sym_embedding(P("2143")).str() == "65874321");
    const struct {
        const char* v;
        int complexity;
    } cases[] = {{"2143", 0}, {"3412", 2}, {"4312", 3}};
    for (const auto& c : cases) {
        const Permutation big = sym_embedding(P(c.v));
        CHECK(big.n() == 8);
        CHECK(analyze(big).sym.complexity == c.complexity);
    }
}

TEST_CASE("cell graphs") {
    const Diagram d(3, {{2, 1}, {3, 1}, {3, 2}});
    const DiGraph g = cell_graph(d);
    CHECK(g.vertex_count() == 4);  // rows 2,3 and cols 1*,2*
    CHECK(g.edge_count() == 3);
    const DiGraph lower = cell_graph_lower(Diagram(3, {{1, 2}, {2, 1}}));
    CHECK(lower.edge_count() == 1);  // only (2,1) lies weakly below the diagonal
}

TEST_CASE("reflection classification on the staircase of 423516") {
    const MSReport base = analyze(P("423516"));

    SUBCASE("hook column narrows its hook") {
        const ReflectionVerdict v = reflection_classify(base, 1);
        CHECK(v.labeled);
        CHECK(v.label.kind == ColumnKind::hook);
        CHECK(v.predicted_toric);
        CHECK(v.corollary_case == 8);
        REQUIRE(v.predicted_delta.has_value());
        CHECK(*v.predicted_delta == ConeDelta::hook_narrower);
    }

    SUBCASE("gap column keeps the cone") {
        const ReflectionVerdict v = reflection_classify(base, 3);
        CHECK(v.labeled);
        CHECK(v.label.kind == ColumnKind::beta);
        CHECK(v.predicted_toric);
        REQUIRE(v.predicted_delta.has_value());
        CHECK(*v.predicted_delta == ConeDelta::no_change);
    }

    SUBCASE("every prediction matches the direct recomputation") {
        for (const ReflectionVerdict& v : scan_reflections(base)) {
            CAPTURE(v.m);
            CHECK(v.predicted_toric == analyze(base.w.right_simple(v.m)).toric);
        }
    }
}

TEST_CASE("reflection scan requires a toric base") {
    const MSReport rep = analyze(P("45231"));
    CHECK_THROWS_AS(reflection_classify(rep, 1), domain_error);
}

TEST_CASE("scan covers every column swap once") {
    const auto verdicts = scan_reflections(analyze(P("423516")));
    REQUIRE(verdicts.size() == 5);
    for (int m = 1; m <= 5; ++m) CHECK(verdicts[static_cast<std::size_t>(m - 1)].m == m);
}
