#include "lcadual/configuration.hpp"

#include <algorithm>
#include <utility>

namespace lcadual {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace

FiniteConfiguration::FiniteConfiguration(const Field& field, GroupPtr group, std::size_t n)
    : field_(field), group_(std::move(group)), n_(n) {
    if (!group_) throw UsageError("configuration requires a group");
    if (n_ == 0) throw UsageError("configuration dimension must be >= 1");
}

FiniteConfiguration FiniteConfiguration::delta(const GroupElement& g,
                                               const std::vector<Scalar>& value) {
    if (value.empty()) throw UsageError("configuration dimension must be >= 1");
    if (!g.group()) throw UsageError("uninitialized group element");
    FiniteConfiguration c(value[0].field(), g.group(), value.size());
    c.add_value(g, value);
    return c;
}

FiniteConfiguration FiniteConfiguration::delta_basis(const Field& field, const GroupElement& g,
                                                     std::size_t n, std::size_t i) {
    if (i >= n) throw UsageError("basis coordinate out of range");
    std::vector<Scalar> v(n, Scalar::zero(field));
    v[i] = Scalar::one(field);
    return delta(g, v);
}

std::vector<GroupElement> FiniteConfiguration::support() const {
    std::vector<GroupElement> out;
    out.reserve(sites_.size());
    for (const auto& [g, v] : sites_) out.push_back(g);
    return out;
}

std::vector<Scalar> FiniteConfiguration::value_at(const GroupElement& g) const {
    const auto it = sites_.find(g);
    if (it != sites_.end()) return it->second;
    return std::vector<Scalar>(n_, Scalar::zero(field_));
}

void FiniteConfiguration::add_value(const GroupElement& g, const std::vector<Scalar>& v) {
    if (v.size() != n_) throw UsageError("value vector has wrong dimension");
    for (const auto& x : v) {
        if (x.field() != field_) throw UsageError("value field mismatch");
    }
    group_->require_member(g);
    if (all_zero(v)) return;
    auto it = sites_.find(g);
    if (it == sites_.end()) {
        sites_.emplace(g, v);
        return;
    }
    for (std::size_t i = 0; i < n_; ++i) it->second[i] += v[i];
    if (all_zero(it->second)) sites_.erase(it);
}

void FiniteConfiguration::require_compatible(const FiniteConfiguration& other) const {
    if (field_ != other.field_) {
        throw UsageError("field mismatch: " + field_.name() + " vs " + other.field_.name());
    }
    if (!group_->same_group(*other.group_)) {
        throw UsageError("group mismatch: " + group_->describe() + " vs " +
                         other.group_->describe());
    }
    if (n_ != other.n_) throw UsageError("configuration dimension mismatch");
}

FiniteConfiguration FiniteConfiguration::operator+(const FiniteConfiguration& other) const {
    require_compatible(other);
    FiniteConfiguration out = *this;
    for (const auto& [g, v] : other.sites_) out.add_value(g, v);
    return out;
}

FiniteConfiguration FiniteConfiguration::operator-(const FiniteConfiguration& other) const {
    return *this + (-other);
}

FiniteConfiguration FiniteConfiguration::operator-() const {
    FiniteConfiguration out(field_, group_, n_);
    for (const auto& [g, v] : sites_) {
        std::vector<Scalar> w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(-x);
        out.sites_.emplace(g, std::move(w));
    }
    return out;
}

FiniteConfiguration FiniteConfiguration::scaled(const Scalar& c) const {
    if (c.field() != field_) throw UsageError("scaling field mismatch");
    FiniteConfiguration out(field_, group_, n_);
    if (c.is_zero()) return out;
    for (const auto& [g, v] : sites_) {
        std::vector<Scalar> w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(c * x);
        out.sites_.emplace(g, std::move(w));
    }
    return out;
}

bool FiniteConfiguration::operator==(const FiniteConfiguration& other) const {
    require_compatible(other);
    if (sites_.size() != other.sites_.size()) return false;
    auto it = sites_.begin();
    auto jt = other.sites_.begin();
    for (; it != sites_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

WindowPattern::WindowPattern(const Field& field, GroupPtr group,
                             std::vector<GroupElement> window, std::size_t n)
    : field_(field),
      group_(std::move(group)),
      n_(n),
      window_(std::move(window)),
      values_(window_.size(), std::vector<Scalar>(n, Scalar::zero(field))) {
    if (!group_) throw UsageError("pattern requires a group");
    if (n_ == 0) throw UsageError("pattern dimension must be >= 1");
    for (std::size_t i = 0; i < window_.size(); ++i) {
        group_->require_member(window_[i]);
        for (std::size_t j = i + 1; j < window_.size(); ++j) {
            if (window_[i] == window_[j]) throw UsageError("window elements must be distinct");
        }
    }
}

void WindowPattern::set_value(std::size_t position, std::vector<Scalar> v) {
    if (position >= window_.size()) throw UsageError("window position out of range");
    if (v.size() != n_) throw UsageError("value vector has wrong dimension");
    for (const auto& x : v) {
        if (x.field() != field_) throw UsageError("value field mismatch");
    }
    values_[position] = std::move(v);
}

std::optional<std::size_t> WindowPattern::find(const GroupElement& g) const {
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (window_[i] == g) return i;
    }
    return std::nullopt;
}

std::vector<Scalar> WindowPattern::flatten() const {
    std::vector<Scalar> flat;
    flat.reserve(window_.size() * n_);
    for (const auto& v : values_) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

WindowPattern WindowPattern::unflatten(const Field& field, const GroupPtr& group,
                                       std::vector<GroupElement> window, std::size_t n,
                                       const std::vector<Scalar>& flat) {
    WindowPattern p(field, group, std::move(window), n);
    if (flat.size() != p.window_.size() * n) {
        throw UsageError("flat vector length does not match window size");
    }
    for (std::size_t i = 0; i < p.window_.size(); ++i) {
        std::vector<Scalar> v(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                              flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        p.set_value(i, std::move(v));
    }
    return p;
}

FiniteConfiguration WindowPattern::to_configuration() const {
    FiniteConfiguration c(field_, group_, n_);
    for (std::size_t i = 0; i < window_.size(); ++i) c.add_value(window_[i], values_[i]);
    return c;
}

bool WindowPattern::operator==(const WindowPattern& other) const {
    if (field_ != other.field_ || !group_->same_group(*other.group_) || n_ != other.n_) {
        return false;
    }
    return window_ == other.window_ && values_ == other.values_;
}

}  // namespace lcadual
