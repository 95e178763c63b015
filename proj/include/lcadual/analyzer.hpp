#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcadual/engine.hpp"

namespace lcadual {

enum class Property { PreInjective, Surjective, PostSurjective, Injective };

std::string property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

enum class VerdictStatus { Certified, Refuted, Inconclusive };

/// A nonzero finitely supported configuration with evolve(theta, k) = 0.
struct KernelElement {
    FiniteConfiguration element;
};

/// A pattern on a finite window outside the windowed image of theta; no
/// configuration evolves to anything matching it on the window.
struct GardenOfEden {
    WindowPattern pattern;
};

/// Preimages z_i with evolve(theta, z_i) = delta_e basis vector i, one per
/// coordinate; by linearity and equivariance this certifies surjectivity
/// onto all finitely supported configurations.
struct PreimageTable {
    std::vector<FiniteConfiguration> preimages;
};

/// Two distinct configurations with finitely supported difference and equal
/// images (mutually erasable patterns).
struct MepPair {
    FiniteConfiguration x;
    FiniteConfiguration y;
};

using Witness = std::variant<KernelElement, GardenOfEden, PreimageTable, MepPair>;

/// Outcome of one property check. Refuted always carries a witness;
/// Certified carries a preimage table when one exists, otherwise the method
/// tag states the proof route ("finite-exhaustive", "duality-transfer").
/// Inconclusive means the property held on every window examined up to the
/// stated radius.
struct Verdict {
    Property property;
    VerdictStatus status;
    unsigned radius = 0;
    std::optional<Witness> witness;
    std::string method;
    std::size_t window_rows = 0;
    std::size_t window_cols = 0;
};

/// Default analysis radius: 3 for free groups, 5 for free-abelian groups,
/// ball saturation for finite groups.
unsigned default_radius(const Group& group);

/// Smallest radius whose ball is the whole (finite) group.
unsigned saturation_radius(const Group& group);

/// Kernel search over configurations supported in ball(r). A nonzero kernel
/// vector refutes pre-injectivity with a KernelElement witness; a trivial
/// kernel certifies it for a saturated finite ball and is otherwise
/// inconclusive at radius r.
Verdict check_pre_injectivity(const LcaMatrix& theta, unsigned radius,
                              std::size_t ball_cap = kDefaultBallCap);

/// Row-rank test of the window operator onto ball(r). Rank deficiency
/// refutes surjectivity with a GardenOfEden witness; full row rank
/// certifies it for finite groups at saturation and is otherwise
/// inconclusive at radius r.
Verdict check_surjectivity(const LcaMatrix& theta, unsigned radius,
                           std::size_t ball_cap = kDefaultBallCap);

/// Solves evolve(theta, z_i) = delta_e basis vector i with support in
/// ball(r) for each coordinate i. All solvable: Certified with a
/// PreimageTable. Any unsolvable: Refuted for finite groups at saturation
/// (the target is a garden of Eden), otherwise inconclusive at radius r.
Verdict check_post_surjectivity(const LcaMatrix& theta, unsigned radius,
                                std::size_t ball_cap = kDefaultBallCap);

/// Finite groups: exact full-matrix kernel test. Infinite groups: duality
/// transfer, certified when the adjoint is post-surjective at radius r and
/// inconclusive otherwise (never refuted).
Verdict check_injectivity(const LcaMatrix& theta, unsigned radius,
                          std::size_t ball_cap = kDefaultBallCap);

inline constexpr std::size_t kDefaultFiniteCap = 4096;

/// Exact finite-group verification of the four orthogonality equations
/// relating kernels and images of theta and its adjoint, on the full
/// n*|G|-dimensional space. On a finite group the finitely supported and
/// full configuration spaces coincide, so equations 1/2 and 3/4 reduce to
/// the same subspace equality; each is computed once and reported for both.
struct FiniteDualityReport {
    std::size_t group_order = 0;
    std::size_t dimension = 0;
    bool transpose_identity = false;
    bool eq1 = false;  // perp(ker theta)  == im theta*
    bool eq2 = false;  // same spaces, finitely-supported side
    bool eq3 = false;  // perp(im theta)   == ker theta*
    bool eq4 = false;  // same spaces, finitely-supported side
    std::size_t dim_ker = 0;
    std::size_t dim_im = 0;
    std::size_t dim_ker_adjoint = 0;
    std::size_t dim_im_adjoint = 0;

    bool all_hold() const { return transpose_identity && eq1 && eq2 && eq3 && eq4; }
};

FiniteDualityReport verify_duality_finite(const LcaMatrix& theta,
                                          std::size_t cap = kDefaultFiniteCap);

/// Independent certificate check: re-verifies the witness against theta by
/// direct evaluation (evolve for kernel elements, preimage tables and MEP
/// pairs; a fresh left-annihilator derivation for garden-of-Eden patterns).
/// Returns false instead of throwing on malformed witnesses.
bool replay_witness(const LcaMatrix& theta, const Witness& witness);

/// Converts a kernel-element witness into the mutually-erasable-patterns
/// form (k, 0). Throws UsageError if k is not a valid kernel element.
MepPair mep_pair(const LcaMatrix& theta, const KernelElement& k);

}  // namespace lcadual
