#include <vector>

#include "doctest.h"
#include "mskl/error.hpp"
#include "mskl/symbolic.hpp"

using namespace mskl;

namespace {
Polynomial zvar(int r, int c) { return Polynomial::variable(Var{'z', r, c}); }
}  // namespace

TEST_CASE("polynomial arithmetic keeps honest signs") {
    const Polynomial a = zvar(2, 1);
    const Polynomial b = zvar(3, 1);
    CHECK((a - b).str() == "z21 - z31");
    CHECK((b - a).str() == "-z21 + z31");
    CHECK((a - a).is_zero());
    CHECK((a + b) - b == a);
    // Negation is not absorbed: p and -p are different polynomials.
    const Polynomial zero = Polynomial::constant(0);
    CHECK(zero - a != a);
    CHECK((zero - a) + a == zero);
}

TEST_CASE("like terms merge and zero terms vanish") {
    const Polynomial p = zvar(1, 1) + zvar(1, 1) + zvar(2, 2);
    CHECK(p.terms().size() == 2);
    CHECK(p.terms()[0].coeff == 2);
    const Polynomial q = p - zvar(1, 1) - zvar(1, 1) - zvar(2, 2);
    CHECK(q.is_zero());
}

TEST_CASE("products expand and sort by degree then variables") {
    const Polynomial p = (zvar(1, 1) + zvar(2, 2)) * (zvar(1, 1) - zvar(2, 2));
    // Difference of squares: z11^2 - z22^2.
    REQUIRE(p.terms().size() == 2);
    CHECK(p.str() == "z11*z11 - z22*z22");
    CHECK((zvar(1, 1) * Polynomial::constant(0)).is_zero());
}

TEST_CASE("sign normalization flips only a negative leading coefficient") {
    const Polynomial p = zvar(1, 1) - zvar(2, 2) * zvar(3, 3);
    CHECK(p.sign_normalized() == p);  // leading +z11 already positive
    const Polynomial m = Polynomial::constant(0) - p;
    CHECK(m.str() == "-z11 + z22*z33");
    CHECK(m.sign_normalized() == p);
    CHECK(Polynomial().sign_normalized().is_zero());
}

TEST_CASE("rename merges colliding variables") {
    const Polynomial p = zvar(1, 2) + zvar(2, 1);
    const Polynomial q = p.rename([](const Var& v) {
        // Sort the indices: both variables become z12.
        return Var{v.sym, std::min(v.row, v.col), std::max(v.row, v.col)};
    });
    REQUIRE(q.terms().size() == 1);
    CHECK(q.terms()[0].coeff == 2);
}

TEST_CASE("determinants by cofactors and by permutation sums agree") {
    SUBCASE("generic 3x3") {
        const SymMatrix m = generic_matrix(3);
        const Polynomial d = det_cofactor(m);
        CHECK(d == det_leibniz(m));
        CHECK(d.terms().size() == 6);
    }
    SUBCASE("structural zeros and ones") {
        // [ 1   z12 0   ]
        // [ z21 1   z23 ]
        // [ 0   z32 1   ]
        SymMatrix m(3, 3);
        m.at(1, 1) = Entry::make_one();
        m.at(1, 2) = Entry::make_var(Var{'z', 1, 2});
        m.at(2, 1) = Entry::make_var(Var{'z', 2, 1});
        m.at(2, 2) = Entry::make_one();
        m.at(2, 3) = Entry::make_var(Var{'z', 2, 3});
        m.at(3, 2) = Entry::make_var(Var{'z', 3, 2});
        m.at(3, 3) = Entry::make_one();
        const Polynomial d = det_cofactor(m);
        CHECK(d == det_leibniz(m));
        // 1 - z12 z21 - z23 z32 + z12 z21 ... expand by hand:
        // det = 1 - z23*z32 - z12*z21 + 0 + 0 (two triple products vanish on the 0s)
        CHECK(d.str() == "1 - z12*z21 - z23*z32");
    }
    SUBCASE("singular matrix gives the zero polynomial") {
        SymMatrix m(2, 2);
        m.at(1, 1) = Entry::make_var(Var{'z', 1, 1});
        m.at(1, 2) = Entry::make_var(Var{'z', 1, 2});
        m.at(2, 1) = Entry::make_var(Var{'z', 1, 1});
        m.at(2, 2) = Entry::make_var(Var{'z', 1, 2});
        CHECK(det_cofactor(m).is_zero());
        CHECK(det_leibniz(m).is_zero());
    }
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_AS(det_cofactor(SymMatrix(2, 3)), domain_error);
}

TEST_CASE("submatrix selects rows and columns in order") {
    const SymMatrix m = generic_matrix(3);
    const SymMatrix s = m.submatrix({1, 3}, {2, 3});
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 2);
    CHECK(det_cofactor(s).str() == "z12*z33 - z13*z32");
}

TEST_CASE("minor expansion emits sign-normalized deduplicated generators") {
    // Rank <= 0 on a 2x2 block: the four entries themselves.
    const SymMatrix m = generic_matrix(3);
    const RankCondition cond{2, 2, 0, 3};  // rows 2..3, cols 1..2, rank <= 0
    const auto gens = expand_minors(m, cond);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0].str() == "z21");
    for (const Polynomial& g : gens) {
        REQUIRE_FALSE(g.terms().empty());
        CHECK(g.terms().front().coeff > 0);
    }
    // Oversized minors are refused rather than silently truncated.
    const RankCondition big{1, 3, 2, 3};
    CHECK_THROWS_AS(expand_minors(m, big, 2), domain_error);
}
