#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcadual/errors.hpp"

namespace lcadual {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// A group element in canonical form: a reduced word for free groups, an
/// integer vector for free-abelian groups, an element index for cyclic and
/// table groups. Equality of elements is equality of stored forms.
class GroupElement {
public:
    /// Syllables (generator, exponent) with nonzero exponents and no two
    /// adjacent syllables on the same generator.
    using Word = std::vector<std::pair<std::uint32_t, std::int64_t>>;
    using Coords = std::vector<std::int64_t>;

    GroupElement() = default;

    const GroupPtr& group() const { return group_; }
    bool is_identity() const;

    /// Word length in the symmetric generating set (free and free-abelian
    /// kinds); not defined for finite kinds.
    std::uint64_t word_length() const;

    bool operator==(const GroupElement& other) const;
    bool operator!=(const GroupElement& other) const { return !(*this == other); }

private:
    friend class Group;
    friend int compare_elements(const GroupElement&, const GroupElement&);

    GroupPtr group_;
    std::variant<Word, Coords, std::uint32_t> form_;
};

/// Deterministic total order on elements of one group: word-metric length
/// first, then lexicographic on the flattened letter sequence with
/// g < g^-1 < (next generator); finite kinds order by element index.
int compare_elements(const GroupElement& a, const GroupElement& b);

struct ElementLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return compare_elements(a, b) < 0;
    }
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Descriptor and arithmetic for the supported group families. Immutable;
/// create through the factory functions and share via GroupPtr.
class Group : public std::enable_shared_from_this<Group> {
public:
    enum class Kind { Free, FreeAbelian, Cyclic, Table };

    /// Free group of rank k >= 1 with generators a, b, c, ...
    static GroupPtr free_group(std::size_t rank);
    /// Z^d with generators t (d = 1) or t1, ..., td.
    static GroupPtr free_abelian(std::size_t dim);
    /// Z/m with generator t; m >= 1.
    static GroupPtr cyclic(std::uint32_t order);
    /// Finite group from an m x m multiplication table (row-major indices,
    /// identity at index 0) and a designated generator list. Validates that
    /// the table is a Latin square with two-sided inverses and that the
    /// generators generate everything. Element i >= 1 is named "g<i>".
    static GroupPtr from_table(std::vector<std::vector<std::uint32_t>> table,
                               std::vector<std::uint32_t> generators);
    /// Table group generated by all elements.
    static GroupPtr from_table(std::vector<std::vector<std::uint32_t>> table);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Cyclic || kind_ == Kind::Table; }
    std::size_t order() const;  // finite kinds only
    std::size_t rank() const { return rank_; }

    std::size_t generator_count() const { return generator_names_.size(); }
    const std::string& generator_name(std::size_t i) const { return generator_names_[i]; }
    std::optional<std::size_t> generator_index(const std::string& name) const;

    GroupElement identity() const;
    GroupElement generator(std::size_t i) const;
    /// g^e for generator i (canonicalized).
    GroupElement generator_power(std::size_t i, std::int64_t exponent) const;
    GroupElement element_from_index(std::uint32_t index) const;  // finite kinds
    std::uint32_t element_index(const GroupElement& e) const;    // finite kinds

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& a) const;

    /// All elements at word distance <= radius from the identity, in the
    /// symmetric generating set, breadth-first by distance and in canonical
    /// order within each distance level. Throws ResourceLimitError past cap.
    std::vector<GroupElement> ball(unsigned radius, std::size_t cap = kDefaultBallCap) const;

    /// All elements in index order; finite kinds only.
    std::vector<GroupElement> enumerate() const;

    /// Word in the entry grammar ("1", "a^2*b^-1", "g3", ...).
    std::string to_string(const GroupElement& e) const;

    /// Structural descriptor equality (same kind, parameters, tables).
    bool same_group(const Group& other) const;
    /// "free(2)", "zd(3)", "cyclic(6)", "table(8)".
    std::string describe() const;

    /// Throws UsageError unless e belongs to this group.
    void require_member(const GroupElement& e) const;

private:
    Group() = default;
    GroupElement make(std::variant<GroupElement::Word, GroupElement::Coords, std::uint32_t> form) const;

    Kind kind_ = Kind::Free;
    std::size_t rank_ = 0;  // free rank / abelian dim / finite order
    std::vector<std::string> generator_names_;
    std::vector<std::uint32_t> generator_indices_;         // table kinds
    std::vector<std::vector<std::uint32_t>> table_;        // table kinds
    std::vector<std::uint32_t> inverse_table_;             // cyclic/table
};

}  // namespace lcadual
