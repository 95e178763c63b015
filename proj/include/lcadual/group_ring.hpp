#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lcadual/field.hpp"
#include "lcadual/group.hpp"
#include "lcadual/matrix.hpp"

namespace lcadual {

/// An element of the group ring KG: a finitely supported K-valued function
/// on G. Zero coefficients are pruned eagerly, so the stored term map is a
/// canonical representation and equality is term-map equality.
class GroupRingElement {
public:
    using Terms = std::map<GroupElement, Scalar, ElementLess>;

    /// The zero element.
    GroupRingElement(const Field& field, GroupPtr group);

    static GroupRingElement one(const Field& field, const GroupPtr& group);
    static GroupRingElement monomial(const Scalar& c, const GroupElement& g);

    const Field& field() const { return field_; }
    const GroupPtr& group() const { return group_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of g, zero if g is not in the support.
    Scalar coefficient(const GroupElement& g) const;

    /// Adds c*g, pruning the term if the coefficient cancels to zero.
    void add_term(const Scalar& c, const GroupElement& g);

    GroupRingElement operator-() const;
    bool operator==(const GroupRingElement& other) const;
    bool operator!=(const GroupRingElement& other) const { return !(*this == other); }

    /// Entry-grammar rendering, terms in canonical element order
    /// ("1", "-1 + a", "2*a*b^-1 + 1", ...). Zero prints as "0".
    std::string str() const;

private:
    void require_compatible(const GroupRingElement& other) const;

    Field field_;
    GroupPtr group_;
    Terms terms_;

    friend GroupRingElement gr_add(const GroupRingElement&, const GroupRingElement&);
    friend GroupRingElement gr_sub(const GroupRingElement&, const GroupRingElement&);
    friend GroupRingElement gr_mul(const GroupRingElement&, const GroupRingElement&);
    friend GroupRingElement gr_scale(const Scalar&, const GroupRingElement&);
    friend GroupRingElement gr_involution(const GroupRingElement&);
};

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y);
/// Convolution: the coefficient of g in x*y is the sum of x(h)*y(k) over
/// factorizations h*k = g.
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_scale(const Scalar& c, const GroupRingElement& x);
/// The involution of KG: sends each term c*g to c*g^-1.
GroupRingElement gr_involution(const GroupRingElement& x);

inline GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    return gr_add(x, y);
}
inline GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
    return gr_sub(x, y);
}
inline GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    return gr_mul(x, y);
}

/// A linear cellular automaton: an n x n matrix over KG. Immutable after
/// construction; the support S (union of entry supports, canonical order)
/// and the coefficient decomposition Theta = sum_{s in S} Theta_s s are
/// computed eagerly and cached.
class LcaMatrix {
public:
    /// Takes ownership of an n x n grid of entries over one field and group.
    explicit LcaMatrix(std::vector<std::vector<GroupRingElement>> entries);

    static LcaMatrix zero(const Field& field, const GroupPtr& group, std::size_t n);
    static LcaMatrix identity(const Field& field, const GroupPtr& group, std::size_t n);

    const Field& field() const { return field_; }
    const GroupPtr& group() const { return group_; }
    std::size_t dimension() const { return n_; }

    const GroupRingElement& at(std::size_t i, std::size_t j) const;

    /// Support S in canonical element order; minimal (every s has a nonzero
    /// coefficient matrix).
    const std::vector<GroupElement>& support() const { return support_; }

    /// The scalar matrices Theta_s, keyed by s in canonical order.
    const std::map<GroupElement, DenseMatrix, ElementLess>& coefficient_matrices() const {
        return coefficients_;
    }

    /// (Theta*)_{ij} = involution(Theta_{ji}).
    LcaMatrix adjoint() const;

    LcaMatrix operator*(const LcaMatrix& other) const;
    LcaMatrix operator+(const LcaMatrix& other) const;
    bool operator==(const LcaMatrix& other) const;
    bool operator!=(const LcaMatrix& other) const { return !(*this == other); }

private:
    Field field_;
    GroupPtr group_;
    std::size_t n_;
    std::vector<std::vector<GroupRingElement>> entries_;
    std::vector<GroupElement> support_;
    std::map<GroupElement, DenseMatrix, ElementLess> coefficients_;
};

}  // namespace lcadual
