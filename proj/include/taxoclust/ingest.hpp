// Reading knowledge graphs from TSV and turning triples into subject/tag
// annotations.
//
// Triple TSV: `subject<TAB>relation<TAB>object` per line. Pairs TSV:
// `subject<TAB>tag`, where the tag label becomes both relation and object.
// Input is UTF-8 with LF line endings; blank lines and lines starting with
// `#` are ignored. There is no quoting or escaping.

#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "taxoclust/kg_model.hpp"

namespace taxoclust {

enum class InputFormat { kTriples, kPairs };

// Throws UsageError for names other than "triples" and "pairs".
InputFormat parse_input_format(std::string_view name);

// Throws EncodingError on invalid UTF-8 and ParseError (with the 1-based
// line number) on malformed lines.
std::set<Triple> parse_triples(std::string_view text);
SubjectTagGraph parse_pairs(std::string_view text);

std::string serialize_triples(const std::set<Triple>& triples);

struct FlattenResult {
  SubjectTagGraph graph;
  std::size_t skipped_subjects = 0;  // subjects left with no annotation
};

// Keeps triples whose relation equals `relation_filter` (all triples when
// unset) as (subject, <relation, object>) annotations. Throws
// EmptyResultError when nothing survives.
FlattenResult flatten(const std::set<Triple>& triples,
                      const std::optional<std::string>& relation_filter = std::nullopt);

// Adds the tag <label, label> to every subject. Throws ConflictError when the
// vocabulary already contains it.
SubjectTagGraph inject_root(const SubjectTagGraph& graph, std::string_view root_label);

// Whole-file helpers used by the CLI.
std::string read_file(const std::string& path);
SubjectTagGraph load_graph(const std::string& path, InputFormat format,
                           const std::optional<std::string>& relation_filter,
                           std::size_t* skipped_subjects = nullptr);

}  // namespace taxoclust
