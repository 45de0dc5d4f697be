#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "mskl/bruhat.hpp"
#include "mskl/error.hpp"
#include "mskl/permutation.hpp"

using namespace mskl;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("rank comparison and the subword oracle agree") {
    const struct {
        const char *v, *w;
        bool leq;
    } cases[] = {
        {"1234", "4321", true},   {"2143", "2413", true},  {"3412", "4312", true},
        {"2143", "1342", false},  // equal length, distinct
        {"45231", "45231", true}, {"21345", "12345", false},
    };
    for (const auto& c : cases) {
        CAPTURE(c.v);
        CAPTURE(c.w);
        CHECK(bruhat_leq(P(c.v), P(c.w)) == c.leq);
        CHECK(subword_leq(P(c.v), P(c.w)) == c.leq);
    }
    // The two routes agree pair-for-pair on all of S4.
    for (std::uint64_t a = 0; a < 24; ++a) {
        for (std::uint64_t b = 0; b < 24; ++b) {
            const Permutation v = Permutation::from_lex_index(4, a);
            const Permutation w = Permutation::from_lex_index(4, b);
            CHECK(bruhat_leq(v, w) == subword_leq(v, w));
        }
    }
}

TEST_CASE("covers add exactly one inversion") {
    const Permutation v = P("132");
    const auto ups = covers_above(v);
    std::set<std::string> words;
    for (const Permutation& u : ups) {
        CHECK(u.inversions() == v.inversions() + 1);
        CHECK(is_cover(v, u));
        words.insert(u.str());
    }
    CHECK(words == std::set<std::string>{"231", "312"});
    CHECK_FALSE(is_cover(P("1234"), P("1234")));
    CHECK_FALSE(is_cover(P("1234"), P("2143")));  // two inversions up
}

TEST_CASE("covers below invert covers above") {
    const Permutation w = P("2413");
    for (const Permutation& u : covers_below(w)) {
        CHECK(is_cover(u, w));
        const auto ups = covers_above(u);
        CHECK(std::find(ups.begin(), ups.end(), w) != ups.end());
    }
}

TEST_CASE("interval of the full group and chain counts") {
    const auto all = interval(Permutation::identity(4), Permutation::longest(4));
    CHECK(all.size() == 24);
    // The weak half: an empty interval signals v not below w.
    CHECK(interval(P("21"), P("12")).empty());
    // Maximal chain count of the full S4 order.
    CHECK(count_maximal_chains(Permutation::identity(4), Permutation::longest(4)) == 168);
    CHECK(count_maximal_chains(P("1234"), P("1243")) == 1);
}

TEST_CASE("chains are labeled by the values each step exchanges") {
    const Chain c = make_chain({P("1234"), P("1243"), P("1423")});
    REQUIRE(c.labels.size() == 2);
    CHECK(c.labels[0] == std::pair<int, int>{3, 4});  // 1234 -> 1243 swaps values 3,4
    CHECK(c.labels[1] == std::pair<int, int>{2, 4});  // 1243 -> 1423 swaps values 2,4
    CHECK_THROWS_AS(make_chain({P("1234"), P("2143")}), domain_error);

    // The chain graph lives on the full value set, including untouched values.
    const DiGraph g = chain_graph(c);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.component_count() == 2);  // {2,3,4} and {1}
}

TEST_CASE("every maximal chain of a small interval is visited") {
    const Permutation v = Permutation::identity(3);
    const Permutation w = Permutation::longest(3);
    std::uint64_t seen = 0;
    const std::uint64_t total = for_each_maximal_chain(v, w, [&](const Chain& c) {
        ++seen;
        CHECK(c.elems.front() == v);
        CHECK(c.elems.back() == w);
        CHECK(c.elems.size() == 4);  // lengths 0, 1, 2, 3
        return true;
    });
    CHECK(seen == 2);
    CHECK(total == 2);
    CHECK(total == count_maximal_chains(v, w));

    // Early stop after the first chain.
    std::uint64_t stopped = for_each_maximal_chain(v, w, [](const Chain&) { return false; });
    CHECK(stopped == 1);
}

TEST_CASE("some_chain is a valid deterministic chain") {
    const Chain a = some_chain(P("1234"), P("4321"));
    const Chain b = some_chain(P("1234"), P("4321"));
    CHECK(a.elems.size() == 7);
    for (std::size_t i = 0; i + 1 < a.elems.size(); ++i) CHECK(is_cover(a.elems[i], a.elems[i + 1]));
    CHECK(a.elems == b.elems);
    CHECK(a.labels == b.labels);
}

TEST_CASE("atoms and the atom graph use value labels") {
    // 231 is the unique atom of [132, 231]: swap the values 1 and 2.
    const auto at = atoms(P("132"), P("231"));
    REQUIRE(at.size() == 1);
    CHECK(at[0] == P("231"));
    const DiGraph g = atom_graph(P("132"), P("231"));
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == std::pair<VertexId, VertexId>{plain(1), plain(2)});

    const auto at2 = atoms(Permutation::identity(3), Permutation::longest(3));
    CHECK(at2.size() == 2);  // 132 and 213
}

TEST_CASE("reduced words multiply back to the permutation") {
    for (const char* s : {"1234", "4321", "2413", "45231", "423516"}) {
        const Permutation w = P(s);
        const auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == w.inversions());
        Permutation acc = Permutation::identity(w.n());
        for (int i : word) acc = acc.right_simple(i);
        CHECK(acc == w);
    }
}

TEST_CASE("support lists the letters every reduced word must use") {
    CHECK(support(P("2143")) == std::vector<int>{1, 3});
    CHECK(support(P("1234")).empty());
    CHECK(support(P("4321")) == std::vector<int>{1, 2, 3});
}
