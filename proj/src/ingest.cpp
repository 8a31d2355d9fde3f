#include "taxoclust/ingest.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace taxoclust {
namespace {

// Returns the byte offset of the first invalid sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t len;
    char32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates, out of range.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return i;
    i += len;
  }
  return std::string_view::npos;
}

// Calls `fn(line_number, fields)` for every data line of a TSV document with
// exactly `columns` non-empty fields.
template <typename Fn>
void for_each_record(std::string_view text, std::size_t columns, Fn&& fn) {
  if (auto bad = find_invalid_utf8(text); bad != std::string_view::npos)
    throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(bad));

  std::vector<std::string_view> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    fields.clear();
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != columns)
      throw ParseError(line_no, "expected " + std::to_string(columns) + " tab-separated columns, got " +
                                    std::to_string(fields.size()));
    for (std::string_view f : fields)
      if (f.empty()) throw ParseError(line_no, "empty field");
    fn(line_no, std::as_const(fields));
  }
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "triples") return InputFormat::kTriples;
  if (name == "pairs") return InputFormat::kPairs;
  throw UsageError("unknown input format '" + std::string(name) + "' (expected triples or pairs)");
}

std::set<Triple> parse_triples(std::string_view text) {
  std::set<Triple> out;
  for_each_record(text, 3, [&](std::size_t, const std::vector<std::string_view>& f) {
    out.insert(Triple{std::string(f[0]), std::string(f[1]), std::string(f[2])});
  });
  return out;
}

SubjectTagGraph parse_pairs(std::string_view text) {
  SubjectTagGraph::Annotations annotations;
  for_each_record(text, 2, [&](std::size_t, const std::vector<std::string_view>& f) {
    annotations[std::string(f[0])].insert(label_tag(f[1]));
  });
  if (annotations.empty()) throw EmptyResultError("no subject/tag pairs in input");
  return SubjectTagGraph(annotations);
}

std::string serialize_triples(const std::set<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) {
    for (const std::string* f : {&t.subject, &t.relation, &t.object})
      if (f->empty() || f->find_first_of("\t\n\r") != std::string::npos)
        throw UsageError("triple field is empty or not TSV-safe");
    out += t.subject;
    out += '\t';
    out += t.relation;
    out += '\t';
    out += t.object;
    out += '\n';
  }
  return out;
}

FlattenResult flatten(const std::set<Triple>& triples,
                      const std::optional<std::string>& relation_filter) {
  if (triples.empty()) throw UsageError("cannot flatten an empty triple set");
  SubjectTagGraph::Annotations annotations;
  std::set<std::string_view> all_subjects;
  for (const Triple& t : triples) {
    all_subjects.insert(t.subject);
    if (relation_filter && t.relation != *relation_filter) continue;
    annotations[t.subject].insert(Tag{t.relation, t.object});
  }
  if (annotations.empty())
    throw EmptyResultError("relation filter '" + relation_filter.value_or("") + "' matches no triples");
  FlattenResult result;
  result.skipped_subjects = all_subjects.size() - annotations.size();
  result.graph = SubjectTagGraph(annotations);
  return result;
}

SubjectTagGraph inject_root(const SubjectTagGraph& graph, std::string_view root_label) {
  const Tag root = label_tag(root_label);
  if (graph.find_tag(root))
    throw ConflictError("root tag '" + std::string(root_label) + "' already in the vocabulary");
  auto annotations = graph.to_annotations();
  for (auto& [subject, tags] : annotations) tags.insert(root);
  return SubjectTagGraph(annotations);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("error reading '" + path + "'");
  return std::move(buffer).str();
}

SubjectTagGraph load_graph(const std::string& path, InputFormat format,
                           const std::optional<std::string>& relation_filter,
                           std::size_t* skipped_subjects) {
  const std::string text = read_file(path);
  if (format == InputFormat::kPairs) {
    if (relation_filter) throw UsageError("a relation filter needs triples input");
    if (skipped_subjects) *skipped_subjects = 0;
    return parse_pairs(text);
  }
  auto triples = parse_triples(text);
  if (triples.empty()) throw EmptyResultError("no triples in '" + path + "'");
  auto result = flatten(triples, relation_filter);
  if (skipped_subjects) *skipped_subjects = result.skipped_subjects;
  return std::move(result.graph);
}

}  // namespace taxoclust
