#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcadual/analyzer.hpp"
#include "lcadual/group_ring.hpp"

namespace lcadual {

/// The corollary instance on the free group of rank 2:
/// Theta = [[a - 1, b - 1], [0, 0]] and its adjoint
/// [[a^-1 - 1, 0], [b^-1 - 1, 0]]. The first row realizes an injective
/// module map via the free basis {a - 1, b - 1} of the augmentation ideal;
/// the zero row makes Theta non-surjective while keeping it pre-injective,
/// and dually for the adjoint.
std::pair<LcaMatrix, LcaMatrix> free_group_corollary(const Field& field);

/// g times the identity: the invertible shift automaton.
LcaMatrix shift(const GroupElement& g, std::size_t n, const Field& field);

/// n = 1 over Z^d: sum_i (t_i + t_i^-1) - 2d. Self-adjoint.
LcaMatrix laplacian(std::size_t d, const Field& field);

/// Deterministic pseudo-random automaton with entry supports inside
/// ball(radius). Reproducible from the seed: the generator is std::mt19937_64
/// seeded with `seed`, consumed as raw 64-bit outputs, one draw per
/// (row, column, ball element) in row-major entry order and canonical ball
/// order. A draw u keeps the term iff u & 1, with coefficient
/// 1 + ((u >> 1) mod (p - 1)) in F_p, and sign (u >> 32) & 1 applied to
/// 1 + ((u >> 1) mod 3) over Q.
LcaMatrix random_lca(const GroupPtr& group, const Field& field, std::size_t n,
                     unsigned radius, std::uint64_t seed);

/// One analyzer outcome a named construction is expected to produce.
struct ExpectedVerdict {
    bool on_adjoint = false;
    Property property = Property::PreInjective;
    VerdictStatus status = VerdictStatus::Inconclusive;
    unsigned radius = 0;
};

/// A gallery automaton with the verdicts the analyzer should reach on it
/// (and on its adjoint) at the stated radii.
struct NamedConstruction {
    std::string name;
    std::string summary;
    LcaMatrix automaton;
    std::vector<ExpectedVerdict> expectations;
};

std::vector<std::string> gallery_names();
NamedConstruction gallery_entry(const std::string& name, const Field& field);

}  // namespace lcadual
