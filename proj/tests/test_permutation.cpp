#include <vector>

#include "doctest.h"
#include "mskl/error.hpp"
#include "mskl/permutation.hpp"

using mskl::Permutation;

TEST_CASE("parse accepts digit words, comma lists, and brackets") {
    CHECK(Permutation::parse("45231").str() == "45231");
    CHECK(Permutation::parse("4,5,2,3,1") == Permutation::parse("45231"));
    CHECK(Permutation::parse("[4,5,2,3,1]") == Permutation::parse("45231"));
    CHECK(Permutation::parse(" 4 5 2 3 1 ") == Permutation::parse("45231"));
    // Comma form is the only way past single digits.
    const Permutation big = Permutation::parse("10,9,8,7,6,5,4,3,2,1");
    CHECK(big.n() == 10);
    CHECK(big == Permutation::longest(10));
}

TEST_CASE("parse rejects malformed input with the fault position") {
    CHECK_THROWS_WITH_AS(Permutation::parse("45x31"),
                         "permutation: bad character 'x' at position 3", mskl::domain_error);
    CHECK_THROWS_WITH_AS(Permutation::parse("4,being,1"),
                         "permutation: bad token 'being' at entry 2", mskl::domain_error);
    CHECK_THROWS_AS(Permutation::parse(""), mskl::domain_error);
    CHECK_THROWS_AS(Permutation::parse("4521"), mskl::domain_error);   // missing 3
    CHECK_THROWS_AS(Permutation::parse("45221"), mskl::domain_error);  // repeated 2
}

TEST_CASE("identity and longest element") {
    const Permutation id = Permutation::identity(4);
    CHECK(id.str() == "1234");
    CHECK(id.is_identity());
    CHECK(id.inversions() == 0);
    const Permutation w0 = Permutation::longest(4);
    CHECK(w0.str() == "4321");
    CHECK(w0.inversions() == 6);
}

TEST_CASE("inverse and composition") {
    const Permutation w = Permutation::parse("45231");
    const Permutation wi = w.inverse();
    CHECK((w * wi).is_identity());
    CHECK((wi * w).is_identity());
    // (w * v)(i) = w(v(i))
    const Permutation v = Permutation::parse("21345");
    CHECK((w * v).str() == "54231");
}

TEST_CASE("right multiplication by a simple reflection swaps adjacent columns") {
    const Permutation w = Permutation::parse("423516");
    CHECK(w.right_simple(3).str() == "425316");
    CHECK(w.right_simple(1).str() == "243516");
    CHECK_THROWS_AS(w.right_simple(0), mskl::domain_error);
    CHECK_THROWS_AS(w.right_simple(6), mskl::domain_error);
}

TEST_CASE("value and position swaps agree with direct computation") {
    const Permutation w = Permutation::parse("45231");
    CHECK(w.swap_positions(1, 3).str() == "25431");
    CHECK(w.swap_values(4, 5).str() == "54231");
}

TEST_CASE("rank table counts ones weakly south-west") {
    // r(a, b) = #{ i <= b : w(i) >= a } for the 1s at (w(i), i).
    const Permutation w = Permutation::parse("45231");
    const auto r = w.rank_table();
    CHECK(r[1][5] == 5);  // whole matrix
    CHECK(r[4][2] == 2);  // columns 1..2 hold values 4, 5
    CHECK(r[5][2] == 1);
    CHECK(r[3][3] == 2);  // values >= 3 among {4,5,2}
}

TEST_CASE("pattern containment") {
    CHECK(Permutation::parse("45231").contains_pattern({3, 4, 1, 2}));
    CHECK_FALSE(Permutation::parse("423516").contains_pattern({3, 4, 1, 2}));
    CHECK_FALSE(Permutation::parse("423516").contains_pattern({4, 3, 1, 2}));
    CHECK(Permutation::parse("4312").contains_pattern({4, 3, 1, 2}));
    CHECK_FALSE(Permutation::parse("1234").contains_pattern({2, 1}));
}

TEST_CASE("lexicographic index round-trips") {
    CHECK(Permutation::identity(5).lex_index() == 0);
    CHECK(Permutation::longest(5).lex_index() == 119);
    for (std::uint64_t idx : {0ULL, 1ULL, 17ULL, 63ULL, 119ULL}) {
        CHECK(Permutation::from_lex_index(5, idx).lex_index() == idx);
    }
}
