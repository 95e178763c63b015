#include "lcadual/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace lcadual {

namespace {

std::uint64_t word_letter_count(const GroupElement::Word& w) {
    std::uint64_t total = 0;
    for (const auto& [gen, exp] : w) total += static_cast<std::uint64_t>(std::llabs(exp));
    return total;
}

std::uint64_t coords_letter_count(const GroupElement::Coords& v) {
    std::uint64_t total = 0;
    for (auto x : v) total += static_cast<std::uint64_t>(std::llabs(x));
    return total;
}

// Lexicographic comparison of flattened letter sequences, letters ordered
// (gen, +1) < (gen, -1) < (gen + 1, +1) < ...
int compare_words(const GroupElement::Word& u, const GroupElement::Word& v) {
    const std::uint64_t lu = word_letter_count(u);
    const std::uint64_t lv = word_letter_count(v);
    if (lu != lv) return lu < lv ? -1 : 1;
    std::size_t i = 0, j = 0;
    std::uint64_t oi = 0, oj = 0;  // letters consumed from the current syllable
    while (i < u.size() && j < v.size()) {
        const auto [gu, eu] = u[i];
        const auto [gv, ev] = v[j];
        if (gu != gv) return gu < gv ? -1 : 1;
        const bool pu = eu > 0, pv = ev > 0;
        if (pu != pv) return pu ? -1 : 1;
        const auto au = static_cast<std::uint64_t>(std::llabs(eu));
        const auto av = static_cast<std::uint64_t>(std::llabs(ev));
        const std::uint64_t step = std::min(au - oi, av - oj);
        oi += step;
        oj += step;
        if (oi == au) { ++i; oi = 0; }
        if (oj == av) { ++j; oj = 0; }
    }
    return 0;
}

int compare_coords(const GroupElement::Coords& x, const GroupElement::Coords& y) {
    const std::uint64_t lx = coords_letter_count(x);
    const std::uint64_t ly = coords_letter_count(y);
    if (lx != ly) return lx < ly ? -1 : 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i]) continue;
        if (x[i] != 0 && y[i] != 0) {
            const bool px = x[i] > 0, py = y[i] > 0;
            if (px != py) return px ? -1 : 1;
            // Same sign: the larger run keeps emitting letters at index i
            // while the smaller one moves on to a later generator.
            return std::llabs(x[i]) > std::llabs(y[i]) ? -1 : 1;
        }
        return x[i] != 0 ? -1 : 1;
    }
    return 0;
}

// Appends a syllable to a reduced word, merging and cancelling at the seam.
void push_syllable(GroupElement::Word& w, std::uint32_t gen, std::int64_t exp) {
    if (exp == 0) return;
    if (!w.empty() && w.back().first == gen) {
        w.back().second += exp;
        if (w.back().second == 0) w.pop_back();
        return;
    }
    w.emplace_back(gen, exp);
}

std::string alpha_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

bool GroupElement::is_identity() const {
    if (!group_) throw UsageError("uninitialized group element");
    if (const auto* w = std::get_if<Word>(&form_)) return w->empty();
    if (const auto* c = std::get_if<Coords>(&form_)) {
        return std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x == 0; });
    }
    return std::get<std::uint32_t>(form_) == 0;
}

std::uint64_t GroupElement::word_length() const {
    if (const auto* w = std::get_if<Word>(&form_)) return word_letter_count(*w);
    if (const auto* c = std::get_if<Coords>(&form_)) return coords_letter_count(*c);
    throw UnsupportedError("word_length is not defined for finite-kind elements");
}

bool GroupElement::operator==(const GroupElement& other) const {
    if (!group_ || !other.group_) throw UsageError("uninitialized group element");
    if (!group_->same_group(*other.group_)) return false;
    return form_ == other.form_;
}

int compare_elements(const GroupElement& a, const GroupElement& b) {
    if (!a.group_ || !b.group_) throw UsageError("uninitialized group element");
    if (!a.group_->same_group(*b.group_)) {
        throw UsageError("cannot order elements of different groups");
    }
    if (const auto* wa = std::get_if<GroupElement::Word>(&a.form_)) {
        return compare_words(*wa, std::get<GroupElement::Word>(b.form_));
    }
    if (const auto* ca = std::get_if<GroupElement::Coords>(&a.form_)) {
        return compare_coords(*ca, std::get<GroupElement::Coords>(b.form_));
    }
    const auto ia = std::get<std::uint32_t>(a.form_);
    const auto ib = std::get<std::uint32_t>(b.form_);
    return ia == ib ? 0 : (ia < ib ? -1 : 1);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (!a.group()) throw UsageError("uninitialized group element");
    return a.group()->multiply(a, b);
}

GroupElement inverse(const GroupElement& a) {
    if (!a.group()) throw UsageError("uninitialized group element");
    return a.group()->invert(a);
}

GroupPtr Group::free_group(std::size_t rank) {
    if (rank < 1) throw UsageError("free group rank must be >= 1");
    if (rank > 26) throw UsageError("free group rank is limited to 26 named generators");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Free;
    g->rank_ = rank;
    for (std::size_t i = 0; i < rank; ++i) g->generator_names_.push_back(alpha_name(i));
    return g;
}

GroupPtr Group::free_abelian(std::size_t dim) {
    if (dim < 1) throw UsageError("free-abelian dimension must be >= 1");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::FreeAbelian;
    g->rank_ = dim;
    if (dim == 1) {
        g->generator_names_.push_back("t");
    } else {
        for (std::size_t i = 0; i < dim; ++i) g->generator_names_.push_back("t" + std::to_string(i + 1));
    }
    return g;
}

GroupPtr Group::cyclic(std::uint32_t order) {
    if (order < 1) throw UsageError("cyclic order must be >= 1");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Cyclic;
    g->rank_ = order;
    g->generator_names_.push_back("t");
    return g;
}

GroupPtr Group::from_table(std::vector<std::vector<std::uint32_t>> table) {
    std::vector<std::uint32_t> gens;
    for (std::uint32_t i = 1; i < table.size(); ++i) gens.push_back(i);
    if (table.size() == 1) gens.push_back(0);
    return from_table(std::move(table), std::move(gens));
}

GroupPtr Group::from_table(std::vector<std::vector<std::uint32_t>> table,
                           std::vector<std::uint32_t> generators) {
    const std::size_t m = table.size();
    if (m == 0) throw UsageError("multiplication table is empty");
    for (const auto& row : table) {
        if (row.size() != m) throw UsageError("multiplication table is not square");
        for (auto v : row) {
            if (v >= m) throw UsageError("table entry " + std::to_string(v) + " out of range");
        }
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        if (table[0][i] != i) throw UsageError("row 0 is not the identity row: expected identity at index 0");
        if (table[i][0] != i) throw UsageError("column 0 is not the identity column: expected identity at index 0");
    }
    // Latin square: each row and column is a permutation.
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<bool> row_seen(m, false), col_seen(m, false);
        for (std::size_t j = 0; j < m; ++j) {
            if (row_seen[table[i][j]]) throw UsageError("table row " + std::to_string(i) + " repeats an entry");
            if (col_seen[table[j][i]]) throw UsageError("table column " + std::to_string(i) + " repeats an entry");
            row_seen[table[i][j]] = true;
            col_seen[table[j][i]] = true;
        }
    }
    std::vector<std::uint32_t> inverses(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t right = 0;
        while (table[i][right] != 0) ++right;
        if (table[right][i] != 0) {
            throw UsageError("element " + std::to_string(i) + " has no two-sided inverse");
        }
        inverses[i] = right;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (table[table[i][j]][k] != table[i][table[j][k]]) {
                    throw UsageError("multiplication table is not associative at (" +
                                     std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ")");
                }
            }
    if (generators.empty()) throw UsageError("generator list is empty");
    for (auto g : generators) {
        if (g >= m) throw UsageError("generator index " + std::to_string(g) + " out of range");
    }
    // Closure check: the designated generators must reach every element.
    std::vector<bool> reached(m, false);
    reached[0] = true;
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto e : frontier)
            for (auto g : generators) {
                const auto f = table[e][g];
                if (!reached[f]) {
                    reached[f] = true;
                    next.push_back(f);
                }
            }
        frontier = std::move(next);
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) {
        throw UsageError("generator list does not generate the whole table");
    }

    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Table;
    g->rank_ = m;
    g->table_ = std::move(table);
    g->generator_indices_ = std::move(generators);
    g->inverse_table_ = std::move(inverses);
    for (std::uint32_t i = 1; i < m; ++i) g->generator_names_.push_back("g" + std::to_string(i));
    return g;
}

std::size_t Group::order() const {
    if (!is_finite()) throw UnsupportedError("order() called on an infinite group");
    return rank_;
}

std::optional<std::size_t> Group::generator_index(const std::string& name) const {
    if (kind_ == Kind::Table) {
        // Every non-identity element is addressable as g<k>.
        if (name.size() < 2 || name[0] != 'g') return std::nullopt;
        std::size_t idx = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9') return std::nullopt;
            idx = idx * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (idx == 0 || idx >= rank_) return std::nullopt;
        return idx - 1;  // generator_names_ starts at g1
    }
    for (std::size_t i = 0; i < generator_names_.size(); ++i) {
        if (generator_names_[i] == name) return i;
    }
    return std::nullopt;
}

GroupElement Group::make(
    std::variant<GroupElement::Word, GroupElement::Coords, std::uint32_t> form) const {
    GroupElement e;
    e.group_ = shared_from_this();
    e.form_ = std::move(form);
    return e;
}

GroupElement Group::identity() const {
    switch (kind_) {
        case Kind::Free: return make(GroupElement::Word{});
        case Kind::FreeAbelian: return make(GroupElement::Coords(rank_, 0));
        default: return make(std::uint32_t{0});
    }
}

GroupElement Group::generator(std::size_t i) const { return generator_power(i, 1); }

GroupElement Group::generator_power(std::size_t i, std::int64_t exponent) const {
    switch (kind_) {
        case Kind::Free: {
            if (i >= rank_) throw UsageError("generator index out of range");
            GroupElement::Word w;
            push_syllable(w, static_cast<std::uint32_t>(i), exponent);
            return make(std::move(w));
        }
        case Kind::FreeAbelian: {
            if (i >= rank_) throw UsageError("generator index out of range");
            GroupElement::Coords v(rank_, 0);
            v[i] = exponent;
            return make(std::move(v));
        }
        case Kind::Cyclic: {
            if (i != 0) throw UsageError("cyclic groups have a single generator");
            const auto m = static_cast<std::int64_t>(rank_);
            std::int64_t r = exponent % m;
            if (r < 0) r += m;
            return make(static_cast<std::uint32_t>(r));
        }
        case Kind::Table: {
            if (i >= generator_names_.size()) throw UsageError("generator index out of range");
            std::uint32_t base = static_cast<std::uint32_t>(i + 1);
            if (exponent < 0) base = inverse_table_[base];
            std::uint32_t acc = 0;
            for (std::int64_t k = 0; k < std::llabs(exponent); ++k) acc = table_[acc][base];
            return make(acc);
        }
    }
    throw UsageError("unreachable");
}

GroupElement Group::element_from_index(std::uint32_t index) const {
    if (!is_finite()) throw UnsupportedError("element_from_index on an infinite group");
    if (index >= rank_) throw UsageError("element index out of range");
    return make(index);
}

std::uint32_t Group::element_index(const GroupElement& e) const {
    require_member(e);
    if (!is_finite()) throw UnsupportedError("element_index on an infinite group");
    return std::get<std::uint32_t>(e.form_);
}

void Group::require_member(const GroupElement& e) const {
    if (!e.group_) throw UsageError("uninitialized group element");
    if (!same_group(*e.group_)) {
        throw UsageError("group descriptor mismatch: " + describe() + " vs " +
                         e.group_->describe());
    }
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
    require_member(a);
    require_member(b);
    switch (kind_) {
        case Kind::Free: {
            GroupElement::Word w = std::get<GroupElement::Word>(a.form_);
            for (const auto& [gen, exp] : std::get<GroupElement::Word>(b.form_)) {
                push_syllable(w, gen, exp);
            }
            return make(std::move(w));
        }
        case Kind::FreeAbelian: {
            GroupElement::Coords v = std::get<GroupElement::Coords>(a.form_);
            const auto& u = std::get<GroupElement::Coords>(b.form_);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += u[i];
            return make(std::move(v));
        }
        case Kind::Cyclic: {
            const auto ia = std::get<std::uint32_t>(a.form_);
            const auto ib = std::get<std::uint32_t>(b.form_);
            return make(static_cast<std::uint32_t>((ia + ib) % rank_));
        }
        case Kind::Table: {
            const auto ia = std::get<std::uint32_t>(a.form_);
            const auto ib = std::get<std::uint32_t>(b.form_);
            return make(table_[ia][ib]);
        }
    }
    throw UsageError("unreachable");
}

GroupElement Group::invert(const GroupElement& a) const {
    require_member(a);
    switch (kind_) {
        case Kind::Free: {
            const auto& w = std::get<GroupElement::Word>(a.form_);
            GroupElement::Word out;
            out.reserve(w.size());
            for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
            return make(std::move(out));
        }
        case Kind::FreeAbelian: {
            GroupElement::Coords v = std::get<GroupElement::Coords>(a.form_);
            for (auto& x : v) x = -x;
            return make(std::move(v));
        }
        case Kind::Cyclic: {
            const auto i = std::get<std::uint32_t>(a.form_);
            return make(static_cast<std::uint32_t>(i == 0 ? 0 : rank_ - i));
        }
        case Kind::Table:
            return make(inverse_table_[std::get<std::uint32_t>(a.form_)]);
    }
    throw UsageError("unreachable");
}

std::vector<GroupElement> Group::ball(unsigned radius, std::size_t cap) const {
    std::vector<GroupElement> letters;
    const std::size_t gens =
        kind_ == Kind::Table ? generator_indices_.size() : (kind_ == Kind::Cyclic ? 1 : rank_);
    for (std::size_t i = 0; i < gens; ++i) {
        GroupElement g = kind_ == Kind::Table ? make(generator_indices_[i]) : generator(i);
        letters.push_back(g);
        letters.push_back(invert(g));
    }

    std::vector<GroupElement> result{identity()};
    std::set<GroupElement, ElementLess> visited(result.begin(), result.end());
    std::vector<GroupElement> level = result;
    for (unsigned d = 1; d <= radius && !level.empty(); ++d) {
        std::vector<GroupElement> next;
        for (const auto& e : level) {
            for (const auto& s : letters) {
                GroupElement f = multiply(e, s);
                if (visited.insert(f).second) {
                    next.push_back(std::move(f));
                    if (visited.size() > cap) {
                        throw ResourceLimitError("ball of radius " + std::to_string(radius) +
                                                 " exceeds the cap of " + std::to_string(cap) +
                                                 " elements");
                    }
                }
            }
        }
        std::sort(next.begin(), next.end(), ElementLess{});
        result.insert(result.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return result;
}

std::vector<GroupElement> Group::enumerate() const {
    if (!is_finite()) {
        throw UnsupportedError("cannot enumerate the infinite group " + describe());
    }
    std::vector<GroupElement> out;
    out.reserve(rank_);
    for (std::uint32_t i = 0; i < rank_; ++i) out.push_back(make(i));
    return out;
}

std::string Group::to_string(const GroupElement& e) const {
    require_member(e);
    switch (kind_) {
        case Kind::Free: {
            const auto& w = std::get<GroupElement::Word>(e.form_);
            if (w.empty()) return "1";
            std::string out;
            for (const auto& [gen, exp] : w) {
                if (!out.empty()) out += "*";
                out += generator_names_[gen];
                if (exp != 1) out += "^" + std::to_string(exp);
            }
            return out;
        }
        case Kind::FreeAbelian: {
            const auto& v = std::get<GroupElement::Coords>(e.form_);
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                if (!out.empty()) out += "*";
                out += generator_names_[i];
                if (v[i] != 1) out += "^" + std::to_string(v[i]);
            }
            return out.empty() ? "1" : out;
        }
        case Kind::Cyclic: {
            const auto i = std::get<std::uint32_t>(e.form_);
            if (i == 0) return "1";
            if (i == 1) return "t";
            return "t^" + std::to_string(i);
        }
        case Kind::Table: {
            const auto i = std::get<std::uint32_t>(e.form_);
            return i == 0 ? "1" : "g" + std::to_string(i);
        }
    }
    throw UsageError("unreachable");
}

bool Group::same_group(const Group& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || rank_ != other.rank_) return false;
    if (kind_ == Kind::Table) {
        return table_ == other.table_ && generator_indices_ == other.generator_indices_;
    }
    return true;
}

std::string Group::describe() const {
    switch (kind_) {
        case Kind::Free: return "free(" + std::to_string(rank_) + ")";
        case Kind::FreeAbelian: return "zd(" + std::to_string(rank_) + ")";
        case Kind::Cyclic: return "cyclic(" + std::to_string(rank_) + ")";
        case Kind::Table: return "table(" + std::to_string(rank_) + ")";
    }
    return "?";
}

}  // namespace lcadual
