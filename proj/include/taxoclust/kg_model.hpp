// Core domain types: triples, tags, the flattened subject/tag graph, and the
// tag and cluster hierarchies built on top of it.
//
// Tags and subjects are interned into dense integer ids. Ids are assigned in
// the canonical (lexicographic) order of the underlying values, so iterating
// ids in ascending order is iterating in canonical order. Every tie-break in
// the library relies on this.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taxoclust {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class EmptyResultError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

using TagId = std::int32_t;
using SubjectId = std::int32_t;
inline constexpr TagId kNoTag = -1;

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// A relation/object pair. Ordered lexicographically on (relation, object).
struct Tag {
  std::string relation;
  std::string object;

  friend auto operator<=>(const Tag&, const Tag&) = default;
};

// Tag built from a single label, as used by the pairs input format and the
// synthetic root: the label is both relation and object.
Tag label_tag(std::string_view label);

// Inverse of label_tag for such tags; `relation=object` otherwise.
std::string tag_label(const Tag& tag);

// Bipartite subject/tag annotation structure. Immutable once built.
class SubjectTagGraph {
 public:
  using Annotations = std::map<std::string, std::set<Tag>>;

  SubjectTagGraph() = default;
  // Throws UsageError when a subject carries no tags.
  explicit SubjectTagGraph(const Annotations& annotations);

  std::size_t subject_count() const { return subjects_.size(); }
  std::size_t tag_count() const { return tags_.size(); }
  bool empty() const { return subjects_.empty(); }

  const std::vector<std::string>& subjects() const { return subjects_; }
  const std::vector<Tag>& tags() const { return tags_; }
  const std::string& subject(SubjectId s) const { return subjects_.at(s); }
  const Tag& tag(TagId t) const { return tags_.at(t); }

  // Sorted tag ids annotating subject `s`.
  std::span<const TagId> annotations(SubjectId s) const;

  std::optional<TagId> find_tag(const Tag& tag) const;
  std::optional<SubjectId> find_subject(std::string_view subject) const;

  Annotations to_annotations() const;

  friend bool operator==(const SubjectTagGraph&, const SubjectTagGraph&) = default;

 private:
  std::vector<std::string> subjects_;
  std::vector<Tag> tags_;
  std::vector<std::size_t> offsets_;  // CSR row pointers into tag_ids_
  std::vector<TagId> tag_ids_;
};

// Rooted tree over a subset of a tag vocabulary. Children lists are kept in
// canonical tag order; levels are maintained on attach.
class TagHierarchy {
 public:
  TagHierarchy() = default;
  TagHierarchy(std::size_t vocabulary_size, TagId root);

  // Adds `child` below an already placed `parent`.
  void attach(TagId child, TagId parent);

  TagId root() const { return root_; }
  std::size_t vocabulary_size() const { return parent_.size(); }
  std::size_t size() const { return order_.size(); }
  bool contains(TagId t) const;

  // kNoTag for the root. Throws LookupError for tags not in the tree.
  TagId parent(TagId t) const;
  std::span<const TagId> children(TagId t) const;
  int level(TagId t) const;

  // Tags from the root down to `t`, both inclusive.
  std::vector<TagId> root_path(TagId t) const;

  // Tags in the order they were attached (root first).
  std::span<const TagId> insertion_order() const { return order_; }

  // Depth-first preorder, children visited in canonical order.
  std::vector<TagId> preorder() const;

  // Direct parent -> child edges in preorder of the child.
  std::vector<std::pair<TagId, TagId>> edges() const;

  // Structural equality: same root, same parent of every node.
  friend bool operator==(const TagHierarchy& lhs, const TagHierarchy& rhs) {
    return lhs.root_ == rhs.root_ && lhs.parent_ == rhs.parent_ &&
           lhs.level_ == rhs.level_;
  }

 private:
  void check(TagId t) const;

  TagId root_ = kNoTag;
  std::vector<TagId> parent_;
  std::vector<int> level_;  // -1 when absent
  std::vector<std::vector<TagId>> children_;
  std::vector<TagId> order_;
};

// Tag hierarchy plus the direct (non-inherited) members of each cluster.
// Clusters are identified by the tag they were initialized from.
class ClusterHierarchy {
 public:
  ClusterHierarchy() = default;
  // `members` is indexed by TagId and sized to the vocabulary; member lists
  // must be sorted and belong to nodes of `tree`.
  ClusterHierarchy(TagHierarchy tree, std::vector<std::vector<SubjectId>> members);

  const TagHierarchy& tree() const { return tree_; }
  std::span<const SubjectId> members(TagId cluster) const;
  bool is_empty(TagId cluster) const { return members(cluster).empty(); }
  std::size_t cluster_count() const { return tree_.size(); }
  std::size_t member_count() const;

  // Cluster holding each subject, kNoTag when unassigned.
  std::vector<TagId> cluster_of(std::size_t subject_count) const;

  friend bool operator==(const ClusterHierarchy&, const ClusterHierarchy&) = default;

 private:
  TagHierarchy tree_;
  std::vector<std::vector<SubjectId>> members_;
};

// True when every subject in [0, subject_count) is a direct member of exactly
// one cluster and no other ids appear.
bool is_partition(const ClusterHierarchy& clusters, std::size_t subject_count);

// Hand-checkable five-subject graph used throughout the tests:
//   s1,s2: {root, A, A1}   s3: {root, A, A2}   s4,s5: {root, B}
SubjectTagGraph fixture_g0();

}  // namespace taxoclust
