#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lcadual/field.hpp"
#include "lcadual/group.hpp"

namespace lcadual {

/// A finitely supported configuration G -> K^n: a site map storing only
/// nonzero value vectors, keyed by canonical group elements.
class FiniteConfiguration {
public:
    using Sites = std::map<GroupElement, std::vector<Scalar>, ElementLess>;

    FiniteConfiguration(const Field& field, GroupPtr group, std::size_t n);

    /// The one-site configuration with the given value at g.
    static FiniteConfiguration delta(const GroupElement& g, const std::vector<Scalar>& value);
    /// delta_g times the i-th standard basis vector.
    static FiniteConfiguration delta_basis(const Field& field, const GroupElement& g,
                                           std::size_t n, std::size_t i);

    const Field& field() const { return field_; }
    const GroupPtr& group() const { return group_; }
    std::size_t dimension() const { return n_; }

    bool is_zero() const { return sites_.empty(); }
    std::size_t support_size() const { return sites_.size(); }
    const Sites& sites() const { return sites_; }
    std::vector<GroupElement> support() const;

    /// The value at g; the zero vector off the support.
    std::vector<Scalar> value_at(const GroupElement& g) const;

    /// Accumulates v into the value at g, pruning the site if it cancels.
    void add_value(const GroupElement& g, const std::vector<Scalar>& v);

    FiniteConfiguration operator+(const FiniteConfiguration& other) const;
    FiniteConfiguration operator-(const FiniteConfiguration& other) const;
    FiniteConfiguration operator-() const;
    FiniteConfiguration scaled(const Scalar& c) const;

    bool operator==(const FiniteConfiguration& other) const;
    bool operator!=(const FiniteConfiguration& other) const { return !(*this == other); }

    void require_compatible(const FiniteConfiguration& other) const;

private:
    Field field_;
    GroupPtr group_;
    std::size_t n_;
    Sites sites_;
};

/// Values of a configuration on a fixed finite window: one length-n vector
/// per window position, zero vectors included.
class WindowPattern {
public:
    /// The zero pattern on the window.
    WindowPattern(const Field& field, GroupPtr group, std::vector<GroupElement> window,
                  std::size_t n);

    const Field& field() const { return field_; }
    const GroupPtr& group() const { return group_; }
    std::size_t dimension() const { return n_; }
    const std::vector<GroupElement>& window() const { return window_; }

    const std::vector<Scalar>& value(std::size_t position) const { return values_[position]; }
    void set_value(std::size_t position, std::vector<Scalar> v);
    std::optional<std::size_t> find(const GroupElement& g) const;

    /// Site-major flattening: entry position*n + i is coordinate i at window
    /// position `position`.
    std::vector<Scalar> flatten() const;
    static WindowPattern unflatten(const Field& field, const GroupPtr& group,
                                   std::vector<GroupElement> window, std::size_t n,
                                   const std::vector<Scalar>& flat);

    /// The configuration equal to this pattern on the window and zero
    /// elsewhere.
    FiniteConfiguration to_configuration() const;

    bool operator==(const WindowPattern& other) const;
    bool operator!=(const WindowPattern& other) const { return !(*this == other); }

private:
    Field field_;
    GroupPtr group_;
    std::size_t n_;
    std::vector<GroupElement> window_;
    std::vector<std::vector<Scalar>> values_;
};

}  // namespace lcadual
