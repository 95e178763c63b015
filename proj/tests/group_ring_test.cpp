#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lcadual/errors.hpp"
#include "lcadual/group_ring.hpp"

#include "test_support.hpp"

using namespace lcadual;
using lcadual::testing::random_group_ring_element;
using lcadual::testing::s3_group;

namespace {

GroupRingElement word_elem(const Field& f, const GroupElement& x) {
    return GroupRingElement::monomial(Scalar::one(f), x);
}

}  // namespace

TEST_CASE("convolution reduces words in the free group") {
    Field q = Field::rationals();
    auto f2 = Group::free_group(2);
    GroupElement a = f2->generator(0);
    GroupElement b = f2->generator(1);

    GroupRingElement ab = word_elem(q, f2->multiply(a, b));
    GroupRingElement binv_a = word_elem(q, f2->multiply(f2->invert(b), a));
    GroupRingElement product = gr_mul(ab, binv_a);
    CHECK(product.support_size() == 1);
    CHECK(product.coefficient(f2->generator_power(0, 2)).is_one());
    CHECK(product.str() == "a^2");
}

TEST_CASE("convolution accumulates over factorizations") {
    // (1 + t)^2 = 1 + 2t + t^2, and collapses mod 2
    auto z = Group::free_abelian(1);
    GroupElement t = z->generator(0);
    {
        Field q = Field::rationals();
        GroupRingElement one_plus_t = GroupRingElement::one(q, z);
        one_plus_t.add_term(Scalar::one(q), t);
        GroupRingElement square = gr_mul(one_plus_t, one_plus_t);
        CHECK(square.str() == "1 + 2*t + t^2");
    }
    {
        Field f2 = Field::prime(2);
        GroupRingElement one_plus_t = GroupRingElement::one(f2, z);
        one_plus_t.add_term(Scalar::one(f2), t);
        CHECK(gr_mul(one_plus_t, one_plus_t).str() == "1 + t^2");
    }
    // in Z/2 the square of 1 + t vanishes entirely over F2
    {
        Field f2 = Field::prime(2);
        auto c2 = Group::cyclic(2);
        GroupRingElement one_plus_t = GroupRingElement::one(f2, c2);
        one_plus_t.add_term(Scalar::one(f2), c2->generator(0));
        CHECK(gr_mul(one_plus_t, one_plus_t).is_zero());
    }
}

TEST_CASE("ring laws hold on random elements") {
    for (const auto& group :
         {Group::free_group(2), Group::free_abelian(2), GroupPtr(s3_group())}) {
        for (Field f : {Field::prime(5), Field::rationals()}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                GroupRingElement x = random_group_ring_element(f, group, 1, 10 * seed + 1);
                GroupRingElement y = random_group_ring_element(f, group, 1, 10 * seed + 2);
                GroupRingElement z = random_group_ring_element(f, group, 1, 10 * seed + 3);
                CHECK(gr_add(x, y) == gr_add(y, x));
                CHECK(gr_mul(gr_mul(x, y), z) == gr_mul(x, gr_mul(y, z)));
                CHECK(gr_mul(x, gr_add(y, z)) == gr_add(gr_mul(x, y), gr_mul(x, z)));
                CHECK(gr_sub(x, x).is_zero());
                GroupRingElement one = GroupRingElement::one(f, group);
                CHECK(gr_mul(one, x) == x);
                CHECK(gr_mul(x, one) == x);
            }
        }
    }
}

TEST_CASE("involution is an anti-automorphism of order two") {
    for (const auto& group : {Group::free_group(2), GroupPtr(s3_group())}) {
        Field f5 = Field::prime(5);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GroupRingElement x = random_group_ring_element(f5, group, 1, 500 + seed);
            GroupRingElement y = random_group_ring_element(f5, group, 1, 900 + seed);
            CHECK(gr_involution(gr_involution(x)) == x);
            CHECK(gr_involution(gr_mul(x, y)) ==
                  gr_mul(gr_involution(y), gr_involution(x)));
            CHECK(gr_involution(gr_add(x, y)) ==
                  gr_add(gr_involution(x), gr_involution(y)));
        }
    }
}

TEST_CASE("rendering follows the entry grammar in canonical order") {
    Field q = Field::rationals();
    auto f2 = Group::free_group(2);
    GroupElement a = f2->generator(0);

    GroupRingElement zero(q, f2);
    CHECK(zero.str() == "0");
    CHECK(zero.is_zero());

    GroupRingElement x = GroupRingElement::one(q, f2);
    x.add_term(Scalar::from_integer(q, -1), a);
    x.add_term(Scalar::from_string(q, "1/2"), f2->multiply(a, f2->generator(1)));
    CHECK(x.str() == "1 - a + 1/2*a*b");

    GroupRingElement neg = -x;
    CHECK(neg.str() == "-1 + a - 1/2*a*b");
    CHECK(gr_add(x, neg).is_zero());

    // identity-led and coefficient-led terms
    GroupRingElement y(q, f2);
    y.add_term(Scalar::from_integer(q, -1), f2->identity());
    y.add_term(Scalar::one(q), a);
    CHECK(y.str() == "-1 + a");
}

TEST_CASE("zero coefficients are pruned eagerly") {
    Field f3 = Field::prime(3);
    auto z = Group::free_abelian(1);
    GroupRingElement x(f3, z);
    x.add_term(Scalar::from_integer(f3, 2), z->generator(0));
    x.add_term(Scalar::from_integer(f3, 1), z->generator(0));
    CHECK(x.is_zero());
    CHECK(x.support_size() == 0);
    CHECK(x.coefficient(z->generator(0)).is_zero());
}

TEST_CASE("lca matrices multiply blockwise over the group ring") {
    Field q = Field::rationals();
    auto f2 = Group::free_group(2);
    auto [theta, adj] = std::pair<LcaMatrix, LcaMatrix>{
        LcaMatrix::identity(q, f2, 2), LcaMatrix::identity(q, f2, 2)};
    CHECK(theta == adj);
    CHECK(theta * adj == theta);

    // support of the identity is {1}
    REQUIRE(theta.support().size() == 1);
    CHECK(theta.support()[0] == f2->identity());
    CHECK(LcaMatrix::zero(q, f2, 2).support().empty());
}

TEST_CASE("adjoint transposes entries and inverts words") {
    Field f5 = Field::prime(5);
    auto f2 = Group::free_group(2);
    GroupElement a = f2->generator(0);
    GroupElement b = f2->generator(1);

    // [[a, b], [0, 1]] from the document grammar examples
    std::vector<std::vector<GroupRingElement>> entries = {
        {word_elem(f5, a), word_elem(f5, b)},
        {GroupRingElement(f5, f2), GroupRingElement::one(f5, f2)}};
    LcaMatrix theta(std::move(entries));
    LcaMatrix adj = theta.adjoint();
    CHECK(adj.at(0, 0).str() == "a^-1");
    CHECK(adj.at(0, 1).str() == "0");
    CHECK(adj.at(1, 0).str() == "b^-1");
    CHECK(adj.at(1, 1).str() == "1");
}

TEST_CASE("matrix anti-involution laws hold on random automata") {
    auto c6 = Group::cyclic(6);
    Field f5 = Field::prime(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        LcaMatrix theta = random_lca(c6, f5, 2, 2, 7000 + seed);
        LcaMatrix phi = random_lca(c6, f5, 2, 2, 8000 + seed);
        CHECK(theta.adjoint().adjoint() == theta);
        CHECK((theta * phi).adjoint() == phi.adjoint() * theta.adjoint());
        CHECK((theta + phi).adjoint() == theta.adjoint() + phi.adjoint());
    }
}

TEST_CASE("mixed fields and groups are rejected") {
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    auto free2 = Group::free_group(2);
    auto z = Group::free_abelian(1);
    GroupRingElement x(q, free2);
    GroupRingElement y(f2, free2);
    GroupRingElement w(q, z);
    CHECK_THROWS_AS(gr_add(x, y), UsageError);
    CHECK_THROWS_AS(gr_mul(x, w), UsageError);
    CHECK_THROWS_AS(x.add_term(Scalar::one(q), z->generator(0)), UsageError);
}
