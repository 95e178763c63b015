#include "lcadual/group_ring.hpp"

#include <utility>

namespace lcadual {

GroupRingElement::GroupRingElement(const Field& field, GroupPtr group)
    : field_(field), group_(std::move(group)) {
    if (!group_) throw UsageError("group ring element requires a group");
}

GroupRingElement GroupRingElement::one(const Field& field, const GroupPtr& group) {
    GroupRingElement x(field, group);
    x.add_term(Scalar::one(field), group->identity());
    return x;
}

GroupRingElement GroupRingElement::monomial(const Scalar& c, const GroupElement& g) {
    if (!g.group()) throw UsageError("uninitialized group element");
    GroupRingElement x(c.field(), g.group());
    x.add_term(c, g);
    return x;
}

Scalar GroupRingElement::coefficient(const GroupElement& g) const {
    const auto it = terms_.find(g);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void GroupRingElement::add_term(const Scalar& c, const GroupElement& g) {
    if (c.field() != field_) {
        throw UsageError("coefficient field mismatch: " + c.field().name() + " vs " +
                         field_.name());
    }
    group_->require_member(g);
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void GroupRingElement::require_compatible(const GroupRingElement& other) const {
    if (field_ != other.field_) {
        throw UsageError("field mismatch: " + field_.name() + " vs " + other.field_.name());
    }
    if (!group_->same_group(*other.group_)) {
        throw UsageError("group mismatch: " + group_->describe() + " vs " +
                         other.group_->describe());
    }
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(field_, group_);
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
    require_compatible(other);
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        std::string coeff = c.str();
        bool negative = !coeff.empty() && coeff[0] == '-';
        std::string body = negative ? coeff.substr(1) : coeff;
        if (!g.is_identity()) {
            if (body == "1") {
                body = group_->to_string(g);
            } else {
                body += "*" + group_->to_string(g);
            }
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
    x.require_compatible(y);
    GroupRingElement out = x;
    for (const auto& [g, c] : y.terms_) out.add_term(c, g);
    return out;
}

GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y) {
    x.require_compatible(y);
    GroupRingElement out = x;
    for (const auto& [g, c] : y.terms_) out.add_term(-c, g);
    return out;
}

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
    x.require_compatible(y);
    GroupRingElement out(x.field_, x.group_);
    for (const auto& [h, ch] : x.terms_) {
        for (const auto& [k, ck] : y.terms_) {
            out.add_term(ch * ck, h * k);
        }
    }
    return out;
}

GroupRingElement gr_scale(const Scalar& c, const GroupRingElement& x) {
    if (c.field() != x.field_) throw UsageError("coefficient field mismatch");
    GroupRingElement out(x.field_, x.group_);
    for (const auto& [g, xg] : x.terms_) out.add_term(c * xg, g);
    return out;
}

GroupRingElement gr_involution(const GroupRingElement& x) {
    GroupRingElement out(x.field_, x.group_);
    for (const auto& [g, c] : x.terms_) out.add_term(c, inverse(g));
    return out;
}

namespace {

const GroupRingElement& first_entry(const std::vector<std::vector<GroupRingElement>>& grid) {
    if (grid.empty() || grid[0].empty()) throw UsageError("automaton dimension must be >= 1");
    return grid[0][0];
}

}  // namespace

LcaMatrix::LcaMatrix(std::vector<std::vector<GroupRingElement>> entries)
    : field_(first_entry(entries).field()),
      group_(first_entry(entries).group()),
      n_(entries.size()),
      entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != n_) throw UsageError("automaton matrix is not square");
        for (const auto& e : row) {
            if (e.field() != field_ || !e.group()->same_group(*group_)) {
                throw UsageError("automaton entries must share one field and group");
            }
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (const auto& [g, c] : entries_[i][j].terms()) {
                auto it = coefficients_.find(g);
                if (it == coefficients_.end()) {
                    it = coefficients_.emplace(g, DenseMatrix(field_, n_, n_)).first;
                }
                it->second.at(i, j) = c;
            }
        }
    }
    for (const auto& [s, m] : coefficients_) support_.push_back(s);
}

LcaMatrix LcaMatrix::zero(const Field& field, const GroupPtr& group, std::size_t n) {
    if (n == 0) throw UsageError("automaton dimension must be >= 1");
    std::vector<std::vector<GroupRingElement>> grid(
        n, std::vector<GroupRingElement>(n, GroupRingElement(field, group)));
    return LcaMatrix(std::move(grid));
}

LcaMatrix LcaMatrix::identity(const Field& field, const GroupPtr& group, std::size_t n) {
    std::vector<std::vector<GroupRingElement>> grid(
        n, std::vector<GroupRingElement>(n, GroupRingElement(field, group)));
    for (std::size_t i = 0; i < n; ++i) {
        grid[i][i].add_term(Scalar::one(field), group->identity());
    }
    return LcaMatrix(std::move(grid));
}

const GroupRingElement& LcaMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw UsageError("matrix index out of range");
    return entries_[i][j];
}

LcaMatrix LcaMatrix::adjoint() const {
    std::vector<std::vector<GroupRingElement>> grid;
    grid.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<GroupRingElement> row;
        row.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) row.push_back(gr_involution(entries_[j][i]));
        grid.push_back(std::move(row));
    }
    return LcaMatrix(std::move(grid));
}

LcaMatrix LcaMatrix::operator*(const LcaMatrix& other) const {
    if (field_ != other.field_ || !group_->same_group(*other.group_)) {
        throw UsageError("automaton descriptor mismatch in product");
    }
    if (n_ != other.n_) throw UsageError("automaton dimension mismatch in product");
    std::vector<std::vector<GroupRingElement>> grid(
        n_, std::vector<GroupRingElement>(n_, GroupRingElement(field_, group_)));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t k = 0; k < n_; ++k) {
                grid[i][j] = gr_add(grid[i][j], gr_mul(entries_[i][k], other.entries_[k][j]));
            }
        }
    }
    return LcaMatrix(std::move(grid));
}

LcaMatrix LcaMatrix::operator+(const LcaMatrix& other) const {
    if (field_ != other.field_ || !group_->same_group(*other.group_) || n_ != other.n_) {
        throw UsageError("automaton descriptor mismatch in sum");
    }
    std::vector<std::vector<GroupRingElement>> grid;
    grid.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<GroupRingElement> row;
        row.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            row.push_back(gr_add(entries_[i][j], other.entries_[i][j]));
        }
        grid.push_back(std::move(row));
    }
    return LcaMatrix(std::move(grid));
}

bool LcaMatrix::operator==(const LcaMatrix& other) const {
    if (field_ != other.field_ || !group_->same_group(*other.group_) || n_ != other.n_) {
        return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (entries_[i][j] != other.entries_[i][j]) return false;
        }
    }
    return true;
}

}  // namespace lcadual
