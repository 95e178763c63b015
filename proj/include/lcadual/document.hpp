#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcadual/analyzer.hpp"
#include "lcadual/configuration.hpp"
#include "lcadual/group_ring.hpp"

namespace lcadual {

struct DocumentConfig {
    std::string name;
    FiniteConfiguration configuration;
};

/// A parsed automaton description: field, group, dimension, the matrix, and
/// optional named configurations and analysis options. Parsing and printing
/// round-trip: parse(print(doc)) reproduces doc.
struct AutomatonDocument {
    Field field;
    GroupPtr group;
    /// Literal group text ("free(2)", "table(\"s3.tbl\")"), kept so printing
    /// a document with a table group preserves the file path.
    std::string group_spec;
    std::size_t dimension;
    LcaMatrix matrix;
    std::vector<DocumentConfig> configurations;
    std::optional<unsigned> radius;
    std::vector<Property> properties;
    std::optional<std::uint64_t> seed;

    const FiniteConfiguration& configuration(const std::string& name) const;
    bool has_configuration(const std::string& name) const;
};

/// Line-oriented document text. '#' starts a comment. Lines:
///   field F<p> | Q
///   group free(k) | zd(d) | cyclic(m) | table("<path>")
///   dim n
///   matrix            followed by n lines of n entries separated by |
///   config <name>     followed by lines "<word>: (v1, ..., vn)"
///   radius r
///   properties p1, p2, ...
///   seed s
/// field, group and dim must precede matrix; matrix is required.
AutomatonDocument parse_document(const std::string& text);

std::string print_document(const AutomatonDocument& doc);

/// A word in the entry grammar: "1" or a product of generator atoms with
/// optional exponents, e.g. "a^2*b^-1".
GroupElement parse_word(const GroupPtr& group, const std::string& text);

/// An entry expression: a sum of terms, each an optional coefficient times
/// a word, e.g. "2*a*b^-1 + 1" or "1/2*t - 1" over Q.
GroupRingElement parse_entry(const Field& field, const GroupPtr& group,
                             const std::string& text);

/// Loads a finite group from a plain-text multiplication table: m*m
/// whitespace-separated 0-based indices in row-major order (identity must
/// be index 0), with an optional "generators: i j ..." line.
GroupPtr load_table_group(const std::string& path);

}  // namespace lcadual
