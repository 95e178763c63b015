#include "lcadual/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace lcadual {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Character scanner over one line (or a slice of one), tracking the
/// document line number and a column offset for error positions.
class Scanner {
public:
    Scanner(std::string text, unsigned line, unsigned column_offset = 1)
        : text_(std::move(text)), line_(line), offset_(column_offset) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, offset_ + static_cast<unsigned>(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c || c == '\0') return false;
        ++pos_;
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::string ident() {
        if (!is_ident_start(peek())) fail("expected an identifier");
        std::string out;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) out += text_[pos_++];
        return out;
    }

    std::string digits() {
        if (!is_digit(peek())) fail("expected a number");
        std::string out;
        while (pos_ < text_.size() && is_digit(text_[pos_])) out += text_[pos_++];
        return out;
    }

    std::uint64_t number() {
        const std::string d = digits();
        try {
            return std::stoull(d);
        } catch (const std::out_of_range&) {
            fail("number out of range: " + d);
        }
    }

    std::string quoted() {
        expect('"', "to open a quoted string");
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') out += text_[pos_++];
        if (pos_ >= text_.size()) fail("unterminated quoted string");
        ++pos_;
        return out;
    }

    void expect_end() {
        if (!eof()) fail("unexpected trailing text");
    }

    unsigned line() const { return line_; }

private:
    std::string text_;
    unsigned line_;
    unsigned offset_;
    std::size_t pos_ = 0;
};

Scalar scan_scalar(Scanner& sc, const Field& field) {
    std::string literal;
    if (sc.consume('-')) literal += '-';
    literal += sc.digits();
    if (sc.consume('/')) {
        literal += '/';
        literal += sc.digits();
    }
    try {
        return Scalar::from_string(field, literal);
    } catch (const UsageError& e) {
        sc.fail(e.what());
    }
}

GroupElement scan_atom(Scanner& sc, const GroupPtr& group) {
    if (sc.peek() == '1') {
        sc.consume('1');
        return group->identity();
    }
    if (!is_ident_start(sc.peek())) sc.fail("expected a generator name or 1");
    const std::string name = sc.ident();
    const auto index = group->generator_index(name);
    if (!index) sc.fail("unknown generator \"" + name + "\" in " + group->describe());
    std::int64_t exponent = 1;
    if (sc.consume('^')) {
        const bool negative = sc.consume('-');
        const std::uint64_t magnitude = sc.number();
        if (magnitude > 64) sc.fail("exponent magnitude exceeds the limit of 64");
        exponent = negative ? -static_cast<std::int64_t>(magnitude)
                            : static_cast<std::int64_t>(magnitude);
    }
    return group->generator_power(*index, exponent);
}

GroupElement scan_word(Scanner& sc, const GroupPtr& group) {
    GroupElement g = scan_atom(sc, group);
    while (sc.consume('*')) g = g * scan_atom(sc, group);
    return g;
}

/// One term: coefficient, coefficient*word, or bare word.
std::pair<Scalar, GroupElement> scan_term(Scanner& sc, const Field& field,
                                          const GroupPtr& group) {
    /// "1" opens a word ("1", "1*a"), anything else starting with a digit is
    /// a coefficient.
    const bool numeric = is_digit(sc.peek()) && sc.peek() != '1';
    bool coefficient_like = numeric;
    if (sc.peek() == '1') {
        /// Distinguish the identity word "1" from literals like "12" or
        /// "1/2" by scanning ahead on a copy.
        Scanner probe = sc;
        probe.consume('1');
        const char next = probe.peek();
        coefficient_like = is_digit(next) || next == '/';
    }
    if (coefficient_like) {
        const Scalar c = scan_scalar(sc, field);
        if (sc.consume('*')) return {c, scan_word(sc, group)};
        return {c, group->identity()};
    }
    return {Scalar::one(field), scan_word(sc, group)};
}

GroupRingElement scan_entry(Scanner& sc, const Field& field, const GroupPtr& group) {
    GroupRingElement acc(field, group);
    bool negate = sc.consume('-');
    for (;;) {
        auto [coeff, g] = scan_term(sc, field, group);
        acc.add_term(negate ? -coeff : coeff, g);
        if (sc.consume('+')) {
            negate = false;
        } else if (sc.consume('-')) {
            negate = true;
        } else {
            break;
        }
    }
    return acc;
}

/// Strips a '#' comment, ignoring '#' inside double quotes.
std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

const std::vector<std::string>& keywords() {
    static const std::vector<std::string> kw = {"field", "group",  "dim",        "matrix",
                                               "config", "radius", "properties", "seed"};
    return kw;
}

std::optional<std::string> leading_keyword(const std::string& line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::string word;
    while (i < line.size() && is_ident_char(line[i])) word += line[i++];
    if (std::find(keywords().begin(), keywords().end(), word) != keywords().end()) return word;
    return std::nullopt;
}

struct Line {
    std::string text;
    unsigned number;
};

GroupPtr scan_group(Scanner& sc, std::string* spec_out) {
    const std::string kind = sc.ident();
    sc.expect('(', "after the group kind");
    GroupPtr group;
    std::string spec;
    if (kind == "free" || kind == "zd" || kind == "cyclic") {
        const std::uint64_t parameter = sc.number();
        try {
            if (kind == "free") {
                group = Group::free_group(parameter);
            } else if (kind == "zd") {
                group = Group::free_abelian(parameter);
            } else {
                if (parameter > 0xffffffffull) sc.fail("cyclic order out of range");
                group = Group::cyclic(static_cast<std::uint32_t>(parameter));
            }
        } catch (const UsageError& e) {
            sc.fail(e.what());
        }
        spec = kind + "(" + std::to_string(parameter) + ")";
    } else if (kind == "table") {
        const std::string path = sc.quoted();
        try {
            group = load_table_group(path);
        } catch (const UsageError& e) {
            sc.fail(e.what());
        }
        spec = "table(\"" + path + "\")";
    } else {
        sc.fail("unknown group kind \"" + kind + "\" (expected free, zd, cyclic or table)");
    }
    sc.expect(')', "after the group parameter");
    if (spec_out) *spec_out = spec;
    return group;
}

Field scan_field(Scanner& sc) {
    const std::string name = sc.ident();
    if (name == "Q") return Field::rationals();
    if (name.size() >= 2 && name[0] == 'F') {
        Scanner digits(name.substr(1), sc.line());
        const std::uint64_t p = digits.number();
        digits.expect_end();
        try {
            return Field::prime(p);
        } catch (const UsageError& e) {
            sc.fail(e.what());
        }
    }
    sc.fail("unknown field \"" + name + "\" (expected F<p> or Q)");
}

}  // namespace

const FiniteConfiguration& AutomatonDocument::configuration(const std::string& name) const {
    for (const auto& c : configurations) {
        if (c.name == name) return c.configuration;
    }
    std::string available;
    for (const auto& c : configurations) {
        available += (available.empty() ? "" : ", ") + c.name;
    }
    throw UsageError("document has no configuration named \"" + name + "\"" +
                     (available.empty() ? " (none are defined)"
                                        : " (available: " + available + ")"));
}

bool AutomatonDocument::has_configuration(const std::string& name) const {
    return std::any_of(configurations.begin(), configurations.end(),
                       [&](const DocumentConfig& c) { return c.name == name; });
}

AutomatonDocument parse_document(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        unsigned number = 0;
        while (std::getline(in, raw)) {
            ++number;
            const std::string stripped = strip_comment(raw);
            if (!blank(stripped)) lines.push_back(Line{stripped, number});
        }
    }

    std::optional<Field> field;
    GroupPtr group;
    std::string group_spec;
    std::optional<std::size_t> dimension;
    std::optional<LcaMatrix> matrix;
    std::vector<DocumentConfig> configurations;
    std::optional<unsigned> radius;
    std::vector<Property> properties;
    std::optional<std::uint64_t> seed;

    std::size_t i = 0;
    while (i < lines.size()) {
        Scanner sc(lines[i].text, lines[i].number);
        const std::string keyword = sc.ident();
        if (keyword == "field") {
            if (field) sc.fail("duplicate field line");
            field = scan_field(sc);
            sc.expect_end();
            ++i;
        } else if (keyword == "group") {
            if (group) sc.fail("duplicate group line");
            group = scan_group(sc, &group_spec);
            sc.expect_end();
            ++i;
        } else if (keyword == "dim") {
            if (dimension) sc.fail("duplicate dim line");
            const std::uint64_t n = sc.number();
            if (n == 0 || n > 64) sc.fail("dimension must be between 1 and 64");
            dimension = n;
            sc.expect_end();
            ++i;
        } else if (keyword == "matrix") {
            if (matrix) sc.fail("duplicate matrix block");
            if (!field || !group || !dimension) {
                sc.fail("field, group and dim must be declared before matrix");
            }
            sc.expect_end();
            ++i;
            const std::size_t n = *dimension;
            std::vector<std::vector<GroupRingElement>> grid;
            for (std::size_t row = 0; row < n; ++row, ++i) {
                if (i >= lines.size() || leading_keyword(lines[i].text)) {
                    throw ParseError("matrix needs " + std::to_string(n) + " rows, found " +
                                         std::to_string(row),
                                     lines[i - 1].number, 1);
                }
                std::vector<GroupRingElement> entries;
                const std::string& line_text = lines[i].text;
                std::size_t start = 0;
                unsigned column = 1;
                for (;;) {
                    const std::size_t bar = line_text.find('|', start);
                    const std::string cell = line_text.substr(
                        start, bar == std::string::npos ? std::string::npos : bar - start);
                    Scanner cell_sc(cell, lines[i].number, column);
                    entries.push_back(scan_entry(cell_sc, *field, group));
                    cell_sc.expect_end();
                    if (bar == std::string::npos) break;
                    start = bar + 1;
                    column = static_cast<unsigned>(bar) + 2;
                }
                if (entries.size() != n) {
                    throw ParseError("matrix row has " + std::to_string(entries.size()) +
                                         " entries, expected " + std::to_string(n),
                                     lines[i].number, 1);
                }
                grid.push_back(std::move(entries));
            }
            matrix = LcaMatrix(std::move(grid));
        } else if (keyword == "config") {
            if (!field || !group || !dimension) {
                sc.fail("field, group and dim must be declared before config");
            }
            const std::string name = sc.ident();
            sc.expect_end();
            for (const auto& c : configurations) {
                if (c.name == name) sc.fail("duplicate config \"" + name + "\"");
            }
            ++i;
            FiniteConfiguration configuration(*field, group, *dimension);
            while (i < lines.size() && !leading_keyword(lines[i].text)) {
                Scanner site(lines[i].text, lines[i].number);
                const GroupElement g = scan_word(site, group);
                site.expect(':', "after the site word");
                site.expect('(', "to open the value vector");
                std::vector<Scalar> value;
                if (!site.consume(')')) {
                    for (;;) {
                        value.push_back(scan_scalar(site, *field));
                        if (site.consume(')')) break;
                        site.expect(',', "between vector components");
                    }
                }
                site.expect_end();
                if (value.size() != *dimension) {
                    site.fail("value vector has " + std::to_string(value.size()) +
                              " components, expected " + std::to_string(*dimension));
                }
                configuration.add_value(g, value);
                ++i;
            }
            configurations.push_back(DocumentConfig{name, std::move(configuration)});
        } else if (keyword == "radius") {
            if (radius) sc.fail("duplicate radius line");
            const std::uint64_t r = sc.number();
            if (r > 1000) sc.fail("radius out of range");
            radius = static_cast<unsigned>(r);
            sc.expect_end();
            ++i;
        } else if (keyword == "properties") {
            if (!properties.empty()) sc.fail("duplicate properties line");
            for (;;) {
                std::string name = sc.ident();
                while (sc.consume('-')) name += "-" + sc.ident();
                const auto p = property_from_name(name);
                if (!p) sc.fail("unknown property \"" + name + "\"");
                properties.push_back(*p);
                if (!sc.consume(',')) break;
            }
            sc.expect_end();
            ++i;
        } else if (keyword == "seed") {
            if (seed) sc.fail("duplicate seed line");
            seed = sc.number();
            sc.expect_end();
            ++i;
        } else {
            sc.fail("unknown directive \"" + keyword + "\"");
        }
    }

    if (!field) throw ParseError("document is missing a field line", 1, 1);
    if (!group) throw ParseError("document is missing a group line", 1, 1);
    if (!dimension) throw ParseError("document is missing a dim line", 1, 1);
    if (!matrix) throw ParseError("document is missing a matrix block", 1, 1);

    return AutomatonDocument{*field,
                             group,
                             group_spec,
                             *dimension,
                             std::move(*matrix),
                             std::move(configurations),
                             radius,
                             std::move(properties),
                             seed};
}

std::string print_document(const AutomatonDocument& doc) {
    std::ostringstream out;
    out << "field " << doc.field.name() << "\n";
    out << "group " << (doc.group_spec.empty() ? doc.group->describe() : doc.group_spec)
        << "\n";
    out << "dim " << doc.dimension << "\n";
    out << "matrix\n";
    for (std::size_t i = 0; i < doc.dimension; ++i) {
        out << "  ";
        for (std::size_t j = 0; j < doc.dimension; ++j) {
            if (j > 0) out << " | ";
            out << doc.matrix.at(i, j).str();
        }
        out << "\n";
    }
    for (const auto& c : doc.configurations) {
        out << "config " << c.name << "\n";
        for (const auto& [g, v] : c.configuration.sites()) {
            out << "  " << doc.group->to_string(g) << ": (";
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k > 0) out << ", ";
                out << v[k].str();
            }
            out << ")\n";
        }
    }
    if (doc.radius) out << "radius " << *doc.radius << "\n";
    if (!doc.properties.empty()) {
        out << "properties ";
        for (std::size_t k = 0; k < doc.properties.size(); ++k) {
            if (k > 0) out << ", ";
            out << property_name(doc.properties[k]);
        }
        out << "\n";
    }
    if (doc.seed) out << "seed " << *doc.seed << "\n";
    return out.str();
}

GroupElement parse_word(const GroupPtr& group, const std::string& text) {
    Scanner sc(text, 1);
    const GroupElement g = scan_word(sc, group);
    sc.expect_end();
    return g;
}

GroupRingElement parse_entry(const Field& field, const GroupPtr& group,
                             const std::string& text) {
    Scanner sc(text, 1);
    GroupRingElement e = scan_entry(sc, field, group);
    sc.expect_end();
    return e;
}

GroupPtr load_table_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open table file \"" + path + "\"");
    std::vector<std::uint32_t> numbers;
    std::optional<std::vector<std::uint32_t>> generators;
    std::string raw;
    unsigned line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        const std::string line = strip_comment(raw);
        if (blank(line)) continue;
        Scanner sc(line, line_number);
        if (is_ident_start(sc.peek())) {
            const std::string directive = sc.ident();
            if (directive != "generators") {
                sc.fail("unknown directive \"" + directive + "\" in table file");
            }
            if (generators) sc.fail("duplicate generators line in table file");
            sc.expect(':', "after generators");
            std::vector<std::uint32_t> gens;
            while (!sc.eof()) {
                const std::uint64_t g = sc.number();
                if (g > 0xffffffffull) sc.fail("generator index out of range");
                gens.push_back(static_cast<std::uint32_t>(g));
            }
            generators = std::move(gens);
            continue;
        }
        while (!sc.eof()) {
            const std::uint64_t v = sc.number();
            if (v > 0xffffffffull) sc.fail("table entry out of range");
            numbers.push_back(static_cast<std::uint32_t>(v));
        }
    }
    std::size_t m = 0;
    while (m * m < numbers.size()) ++m;
    if (m == 0 || m * m != numbers.size()) {
        throw UsageError("table file \"" + path + "\" must contain m*m entries, found " +
                         std::to_string(numbers.size()));
    }
    std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) table[r][c] = numbers[r * m + c];
    }
    return generators ? Group::from_table(std::move(table), std::move(*generators))
                      : Group::from_table(std::move(table));
}

}  // namespace lcadual
