#include "lcadual/constructions.hpp"

#include <random>

namespace lcadual {

namespace {

GroupRingElement entry_zero(const Field& field, const GroupPtr& group) {
    return GroupRingElement(field, group);
}

GroupRingElement x_minus_one(const Field& field, const GroupPtr& group, const GroupElement& x) {
    GroupRingElement e(field, group);
    e.add_term(Scalar::one(field), x);
    e.add_term(-Scalar::one(field), group->identity());
    return e;
}

}  // namespace

std::pair<LcaMatrix, LcaMatrix> free_group_corollary(const Field& field) {
    const auto group = Group::free_group(2);
    std::vector<std::vector<GroupRingElement>> grid(
        2, std::vector<GroupRingElement>(2, entry_zero(field, group)));
    grid[0][0] = x_minus_one(field, group, group->generator(0));
    grid[0][1] = x_minus_one(field, group, group->generator(1));
    LcaMatrix theta(std::move(grid));
    LcaMatrix dual = theta.adjoint();
    return {std::move(theta), std::move(dual)};
}

LcaMatrix shift(const GroupElement& g, std::size_t n, const Field& field) {
    if (!g.group()) throw UsageError("uninitialized group element");
    const auto& group = g.group();
    std::vector<std::vector<GroupRingElement>> grid(
        n, std::vector<GroupRingElement>(n, entry_zero(field, group)));
    for (std::size_t i = 0; i < n; ++i) grid[i][i].add_term(Scalar::one(field), g);
    return LcaMatrix(std::move(grid));
}

LcaMatrix laplacian(std::size_t d, const Field& field) {
    if (d < 1) throw UsageError("laplacian dimension must be >= 1");
    const auto group = Group::free_abelian(d);
    GroupRingElement e(field, group);
    for (std::size_t i = 0; i < d; ++i) {
        e.add_term(Scalar::one(field), group->generator(i));
        e.add_term(Scalar::one(field), group->generator_power(i, -1));
    }
    e.add_term(Scalar::from_integer(field, -2 * static_cast<std::int64_t>(d)),
               group->identity());
    return LcaMatrix({{e}});
}

LcaMatrix random_lca(const GroupPtr& group, const Field& field, std::size_t n,
                     unsigned radius, std::uint64_t seed) {
    if (!group) throw UsageError("random automaton requires a group");
    if (n < 1) throw UsageError("automaton dimension must be >= 1");
    const auto ball = group->ball(radius);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<GroupRingElement>> grid(
        n, std::vector<GroupRingElement>(n, entry_zero(field, group)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& s : ball) {
                const std::uint64_t u = rng();
                if ((u & 1) == 0) continue;
                Scalar c = Scalar::zero(field);
                if (field.is_prime_field()) {
                    const std::uint64_t p = field.modulus();
                    c = Scalar::from_integer(
                        field, static_cast<std::int64_t>(1 + (u >> 1) % (p - 1)));
                } else {
                    auto magnitude = static_cast<std::int64_t>(1 + (u >> 1) % 3);
                    if ((u >> 32) & 1) magnitude = -magnitude;
                    c = Scalar::from_integer(field, magnitude);
                }
                grid[i][j].add_term(c, s);
            }
        }
    }
    return LcaMatrix(std::move(grid));
}

std::vector<std::string> gallery_names() {
    return {"free-corollary", "shift", "laplacian", "cyclic-parity"};
}

NamedConstruction gallery_entry(const std::string& name, const Field& field) {
    if (name == "free-corollary") {
        auto [theta, dual] = free_group_corollary(field);
        (void)dual;
        return NamedConstruction{
            name,
            "rank-2 automaton on the free group: pre-injective but not "
            "surjective, with the dual picture on its adjoint",
            std::move(theta),
            {
                {false, Property::Surjective, VerdictStatus::Refuted, 0},
                {false, Property::PreInjective, VerdictStatus::Inconclusive, 3},
                {true, Property::PreInjective, VerdictStatus::Refuted, 0},
                {true, Property::Surjective, VerdictStatus::Inconclusive, 2},
            }};
    }
    if (name == "shift") {
        const auto group = Group::free_abelian(1);
        return NamedConstruction{
            name,
            "shift by the generator of Z: invertible, so certified "
            "post-surjective and injective",
            shift(group->generator(0), 1, field),
            {
                {false, Property::PostSurjective, VerdictStatus::Certified, 1},
                {false, Property::Injective, VerdictStatus::Certified, 1},
                {true, Property::PostSurjective, VerdictStatus::Certified, 1},
                {false, Property::PreInjective, VerdictStatus::Inconclusive, 2},
                {false, Property::Surjective, VerdictStatus::Inconclusive, 2},
            }};
    }
    if (name == "laplacian") {
        return NamedConstruction{
            name,
            "discrete Laplacian t + t^-1 - 2 on Z: self-adjoint, no "
            "finitely supported kernel, full-rank windows",
            laplacian(1, field),
            {
                {false, Property::PreInjective, VerdictStatus::Inconclusive, 3},
                {false, Property::Surjective, VerdictStatus::Inconclusive, 3},
                {false, Property::PostSurjective, VerdictStatus::Inconclusive, 2},
                {false, Property::Injective, VerdictStatus::Inconclusive, 2},
            }};
    }
    if (name == "cyclic-parity") {
        const auto group = Group::cyclic(2);
        GroupRingElement e = GroupRingElement::one(field, group);
        e.add_term(Scalar::one(field), group->generator(0));
        return NamedConstruction{
            name,
            "1 + t on the two-element group: every property fails, with "
            "witnesses from the saturated 2x2 matrix",
            LcaMatrix({{e}}),
            {
                {false, Property::PreInjective, VerdictStatus::Refuted, 1},
                {false, Property::Surjective, VerdictStatus::Refuted, 1},
                {false, Property::PostSurjective, VerdictStatus::Refuted, 1},
                {false, Property::Injective, VerdictStatus::Refuted, 1},
            }};
    }
    std::string names;
    for (const auto& n : gallery_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown demo \"" + name + "\"; available: " + names);
}

}  // namespace lcadual
