#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "lcadual/errors.hpp"
#include "lcadual/group.hpp"

#include "test_support.hpp"

using namespace lcadual;

TEST_CASE("free group words reduce and multiply") {
    auto f2 = Group::free_group(2);
    GroupElement a = f2->generator(0);
    GroupElement b = f2->generator(1);
    GroupElement e = f2->identity();

    CHECK(f2->to_string(e) == "1");
    CHECK(f2->to_string(a) == "a");
    CHECK(f2->to_string(f2->multiply(a, f2->invert(a))) == "1");

    GroupElement ab = f2->multiply(a, b);
    GroupElement binv_a = f2->multiply(f2->invert(b), a);
    CHECK(f2->to_string(f2->multiply(ab, binv_a)) == "a^2");

    GroupElement w = f2->multiply(f2->generator_power(0, 2), f2->generator_power(1, -1));
    CHECK(f2->to_string(w) == "a^2*b^-1");
    CHECK(f2->to_string(f2->invert(w)) == "b*a^-2");
    CHECK(f2->multiply(w, f2->invert(w)) == e);
}

TEST_CASE("canonical order is length-major then letter-lexicographic") {
    auto f2 = Group::free_group(2);
    GroupElement e = f2->identity();
    GroupElement a = f2->generator(0);
    GroupElement ainv = f2->invert(a);
    GroupElement b = f2->generator(1);
    GroupElement a2 = f2->generator_power(0, 2);

    CHECK(compare_elements(e, a) < 0);
    CHECK(compare_elements(a, ainv) < 0);
    CHECK(compare_elements(ainv, b) < 0);
    CHECK(compare_elements(b, a2) < 0);
    CHECK(compare_elements(a, a) == 0);
    CHECK(compare_elements(a2, a) > 0);

    // ball(1) in canonical order
    std::vector<GroupElement> ball1 = f2->ball(1);
    std::vector<std::string> names;
    for (const auto& g : ball1) names.push_back(f2->to_string(g));
    CHECK(names == std::vector<std::string>{"1", "a", "a^-1", "b", "b^-1"});
}

TEST_CASE("free group ball sizes follow 2k(2k-1)^{r-1} growth") {
    auto f2 = Group::free_group(2);
    CHECK(f2->ball(0).size() == 1);
    CHECK(f2->ball(1).size() == 5);
    CHECK(f2->ball(2).size() == 17);
    CHECK(f2->ball(3).size() == 53);
    CHECK(f2->ball(4).size() == 161);

    auto f3 = Group::free_group(3);
    CHECK(f3->ball(1).size() == 7);
    CHECK(f3->ball(2).size() == 37);
}

TEST_CASE("free abelian balls are L1 balls") {
    auto z2 = Group::free_abelian(2);
    CHECK(z2->ball(0).size() == 1);
    CHECK(z2->ball(1).size() == 5);
    CHECK(z2->ball(2).size() == 13);
    CHECK(z2->ball(3).size() == 25);

    auto z1 = Group::free_abelian(1);
    CHECK(z1->ball(4).size() == 9);
    CHECK(z1->to_string(z1->generator_power(0, -3)) == "t^-3");

    auto z3 = Group::free_abelian(3);
    CHECK(z3->to_string(z3->multiply(z3->generator(0), z3->generator(2))) == "t1*t3");
    // commutativity
    CHECK(z3->multiply(z3->generator(0), z3->generator(1)) ==
          z3->multiply(z3->generator(1), z3->generator(0)));
}

TEST_CASE("cyclic groups saturate") {
    auto c6 = Group::cyclic(6);
    CHECK(c6->is_finite());
    CHECK(c6->order() == 6);
    CHECK(c6->ball(0).size() == 1);
    CHECK(c6->ball(1).size() == 3);
    CHECK(c6->ball(2).size() == 5);
    CHECK(c6->ball(3).size() == 6);
    CHECK(c6->ball(10).size() == 6);

    GroupElement t = c6->generator(0);
    GroupElement x = t;
    for (int i = 0; i < 5; ++i) x = c6->multiply(x, t);
    CHECK(x == c6->identity());
    CHECK(c6->to_string(c6->invert(t)) == "t^5");

    auto c1 = Group::cyclic(1);
    CHECK(c1->order() == 1);
    CHECK(c1->ball(3).size() == 1);
}

TEST_CASE("element indices round-trip on finite groups") {
    auto c6 = Group::cyclic(6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(c6->element_index(c6->element_from_index(i)) == i);
    }
    std::vector<GroupElement> all = c6->enumerate();
    CHECK(all.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(c6->element_index(all[i]) == i);
    }
}

TEST_CASE("table group S3 multiplies per its table") {
    auto s3 = lcadual::testing::s3_group();
    CHECK(s3->is_finite());
    CHECK(s3->order() == 6);
    CHECK(s3->describe() == "table(6)");

    GroupElement swap01 = s3->element_from_index(1);
    GroupElement cycle = s3->element_from_index(4);
    CHECK(s3->to_string(swap01) == "g1");
    // non-abelian
    CHECK(s3->multiply(swap01, cycle) != s3->multiply(cycle, swap01));
    CHECK(s3->multiply(swap01, swap01) == s3->identity());
    CHECK(s3->multiply(cycle, s3->multiply(cycle, cycle)) == s3->identity());
    CHECK(s3->invert(cycle) == s3->element_from_index(5));

    // letters {g1, g4, g5}; everything is reached at radius 2
    CHECK(s3->ball(1).size() == 4);
    CHECK(s3->ball(2).size() == 6);
}

TEST_CASE("table validation rejects malformed tables") {
    using Table = std::vector<std::vector<std::uint32_t>>;

    // identity row not at index 0
    CHECK_THROWS_AS(Group::from_table(Table{{1, 0}, {0, 1}}), UsageError);
    // entry out of range
    CHECK_THROWS_AS(Group::from_table(Table{{0, 1}, {1, 2}}), UsageError);
    // not a Latin square
    CHECK_THROWS_AS(Group::from_table(Table{{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), UsageError);
    // Latin square with identity but not associative (no inverses either)
    CHECK_THROWS_AS(Group::from_table(Table{{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}}),
                    UsageError);
    // generators that do not generate
    Table z4 = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    CHECK_THROWS_AS(Group::from_table(z4, std::vector<std::uint32_t>{2}), UsageError);
    CHECK_NOTHROW(Group::from_table(z4, std::vector<std::uint32_t>{1}));
    CHECK_NOTHROW(Group::from_table(z4));

    // trivial group
    auto trivial = Group::from_table(Table{{0}});
    CHECK(trivial->order() == 1);
    CHECK(trivial->ball(2).size() == 1);
}

TEST_CASE("ball respects the element cap") {
    auto f2 = Group::free_group(2);
    CHECK_THROWS_AS(f2->ball(3, 10), ResourceLimitError);
    CHECK_NOTHROW(f2->ball(3, 53));
}

TEST_CASE("balls are duplicate-free, symmetric, nested prefixes") {
    auto groups = std::vector<GroupPtr>{Group::free_group(2), Group::free_abelian(2),
                                        Group::cyclic(6), lcadual::testing::s3_group()};
    for (const auto& g : groups) {
        std::vector<GroupElement> ball1 = g->ball(1);
        std::vector<GroupElement> ball2 = g->ball(2);
        REQUIRE(!ball2.empty());
        CHECK(ball2[0] == g->identity());

        std::set<GroupElement, ElementLess> unique(ball2.begin(), ball2.end());
        CHECK(unique.size() == ball2.size());
        for (const auto& x : ball2) {
            CHECK(unique.count(g->invert(x)) == 1);
        }

        // smaller balls are prefixes: levels in distance order, each level
        // canonically sorted
        REQUIRE(ball1.size() <= ball2.size());
        CHECK(std::equal(ball1.begin(), ball1.end(), ball2.begin()));
        CHECK(std::is_sorted(ball1.begin() + 1, ball1.end(), ElementLess{}));
    }
}

TEST_CASE("same_group distinguishes structure, not pointers") {
    auto f2a = Group::free_group(2);
    auto f2b = Group::free_group(2);
    CHECK(f2a->same_group(*f2b));
    CHECK(!f2a->same_group(*Group::free_group(3)));
    CHECK(!f2a->same_group(*Group::free_abelian(2)));
    CHECK(lcadual::testing::s3_group()->same_group(*lcadual::testing::s3_group()));
    CHECK(!Group::cyclic(6)->same_group(*lcadual::testing::s3_group()));
}
