#include "fixtures.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace sturm;

TEST_SUITE("meander") {

TEST_CASE("permutation text formats") {
    CHECK(parse_permutation("1 4 3 2 5").one_line() == std::vector<int>{1, 4, 3, 2, 5});
    CHECK(parse_permutation("[1,4,3,2,5]").one_line() == std::vector<int>{1, 4, 3, 2, 5});
    CHECK(parse_permutation("{1, 4, 3, 2, 5}").one_line() == std::vector<int>{1, 4, 3, 2, 5});
    CHECK(parse_permutation("  1\t2  3 ").one_line() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(parse_permutation("1 2 2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 x 3"), ParseError);
    CHECK_THROWS_AS(parse_permutation("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_permutation(""), ParseError);
    CHECK_THROWS_AS(parse_permutation("[1 2 3"), ParseError);
}

TEST_CASE("boundary orders") {
    Permutation p({1, 4, 3, 2, 5});
    CHECK(p.h1() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(p.h0() == p.inverse().one_line());
    CHECK(permutation_from_orders(p.h0(), p.h1()) == p);
    CHECK(permutation_from_orders(fixtures::octa_h0, fixtures::octa_h1) == fixtures::octahedron());
    CHECK(p.str() == "[1,4,3,2,5]");
}

TEST_CASE("trivial sturm permutations") {
    auto v = is_sturm(parse_permutation("1 2 3"));
    CHECK(v.odd);
    CHECK(v.dissipative);
    CHECK(v.meander);
    CHECK(v.morse);
    CHECK(v.sturm());
    CHECK(is_sturm(Permutation({1})).sturm());
}

TEST_CASE("rejections name the failed condition") {
    CHECK_FALSE(is_sturm(Permutation({1, 2})).odd);
    CHECK_FALSE(is_sturm(Permutation({2, 1, 3})).dissipative);
    CHECK_FALSE(is_sturm(Permutation({1, 3, 2})).dissipative);
    CHECK_THROWS_AS(morse_numbers(Permutation({3, 2, 1})), NotDissipative);
    CHECK_THROWS_AS(require_sturm(Permutation({1, 3, 2})), NotSturm);
    Permutation crossing({1, 4, 2, 3, 5});
    CHECK_FALSE(is_sturm(crossing).meander);
    CHECK_FALSE(oracle::is_meander(crossing.one_line()));
}

TEST_CASE("meander arcs") {
    Permutation p({1, 4, 3, 2, 5});
    auto m = build_meander(p);
    CHECK(m.upper_arcs == std::vector<Arc>{{1, 4}, {2, 3}});
    CHECK(m.lower_arcs == std::vector<Arc>{{3, 4}, {2, 5}});
    CHECK(m.curve_order == std::vector<int>{1, 4, 3, 2, 5});
}

TEST_CASE("crossing arcs are reported") {
    try {
        build_meander(Permutation({1, 4, 2, 3, 5}));
        FAIL("expected NotAMeander");
    } catch (const NotAMeander& e) {
        CHECK(e.kind() == ErrorKind::NotAMeander);
        CHECK(e.upper());
        CHECK(e.first() == Arc{1, 3});
        CHECK(e.second() == Arc{2, 4});
    }
}

TEST_CASE("octahedron morse numbers") {
    auto m = morse_numbers(fixtures::octahedron());
    for (int a = 1; a <= 27; ++a)
        CHECK(m[a - 1] == fixtures::octa_morse(fixtures::figure_label(a)));
    CHECK(morse_numbers_h0(fixtures::octahedron()) == m);
}

TEST_CASE("enumeration counts match the brute-force filter") {
    for (int n : {1, 3, 5, 7}) {
        auto fast = enumerate_sturm(n);
        auto slow = oracle::all_sturm(n);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k)
            CHECK(fast[k].one_line() == slow[k]);
    }
    CHECK(enumerate_sturm(9).size() == 32);
    CHECK(enumerate_sturm(11).size() == 175);
    CHECK(enumerate_sturm(4).empty());
}

TEST_CASE("enumeration is independent of the worker count") {
    auto one = enumerate_sturm(11, kDefaultMaxN, 1);
    auto many = enumerate_sturm(11, kDefaultMaxN, 4);
    CHECK(one == many);
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(enumerate_sturm(13), BoundExceeded);
    CHECK(enumerate_sturm(13, 13).size() > 175);
}

TEST_CASE("trivial equivalences") {
    auto t = trivial_equivalences(fixtures::octahedron());
    CHECK(t.inverse == fixtures::octahedron().inverse());
    const int n = 27;
    for (int j = 1; j <= n; ++j)
        CHECK(t.kappa_conjugate(j) == n + 1 - fixtures::octa_sigma[n - j]);
    CHECK(trivial_equivalences(t.inverse).kappa_conjugate == t.both);
}

} // TEST_SUITE
