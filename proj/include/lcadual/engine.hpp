#pragma once

#include <vector>

#include "lcadual/configuration.hpp"
#include "lcadual/group_ring.hpp"

namespace lcadual {

/// One evolution step: (Theta c)(g) = sum_{s in S} Theta_s c(s^-1 g).
FiniteConfiguration evolve(const LcaMatrix& theta, const FiniteConfiguration& c);

/// The bilinear pairing <omega|c> = sum_g <omega(g)|c(g)> with the standard
/// dot product on K^n per site.
Scalar pair(const FiniteConfiguration& omega, const FiniteConfiguration& c);
/// Pairing against a window pattern; requires support(omega) inside the
/// window, since the pattern carries no values elsewhere.
Scalar pair(const FiniteConfiguration& omega, const WindowPattern& p);

/// Left translation: (g c)(h) = c(g^-1 h).
FiniteConfiguration translate(const GroupElement& g, const FiniteConfiguration& c);

/// Values of c on the window, zero vectors where unsupported.
WindowPattern restrict_to(const FiniteConfiguration& c, std::vector<GroupElement> window);

/// The symmetrized neighborhood S union S^-1 union {identity}, canonically
/// ordered. Evolution on a window F reads input sites only inside
/// neighborhood * F, and the symmetric closure keeps window chains nested
/// for both an automaton and its adjoint.
std::vector<GroupElement> neighborhood(const LcaMatrix& theta);

/// window union neighborhood(theta) * window, deduplicated, in canonical
/// element order. Growing a ball yields the next-radius ball whenever the
/// support lies in ball(1).
std::vector<GroupElement> grow_window(const LcaMatrix& theta,
                                      const std::vector<GroupElement>& window);

/// The matrix of the evolution map from patterns on `domain` to patterns on
/// `codomain`: block (g, h) is Theta_{g h^-1} (zero when g h^-1 is outside
/// the support). Rows and columns are site-major, n coordinates per site.
DenseMatrix windowed_matrix(const LcaMatrix& theta, const std::vector<GroupElement>& domain,
                            const std::vector<GroupElement>& codomain);

/// A windowed realization of Theta: the matrix of V^domain -> V^codomain
/// with domain = grow_window(theta, codomain). The domain covers every site
/// that can influence the codomain, so the matrix computes evolution exactly
/// on patterns supported in the domain.
struct WindowOperator {
    std::vector<GroupElement> domain;
    std::vector<GroupElement> codomain;
    DenseMatrix matrix;
};

WindowOperator window_operator(const LcaMatrix& theta, std::vector<GroupElement> window);

}  // namespace lcadual
