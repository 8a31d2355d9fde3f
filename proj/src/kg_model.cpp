#include "taxoclust/kg_model.hpp"

#include <algorithm>

namespace taxoclust {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

Tag label_tag(std::string_view label) {
  return Tag{std::string(label), std::string(label)};
}

std::string tag_label(const Tag& tag) {
  if (tag.relation == tag.object) return tag.object;
  return tag.relation + "=" + tag.object;
}

// ---------------------------------------------------------------------------
// SubjectTagGraph

SubjectTagGraph::SubjectTagGraph(const Annotations& annotations) {
  std::set<Tag> vocabulary;
  for (const auto& [subject, tags] : annotations) {
    if (tags.empty()) throw UsageError("subject '" + subject + "' has no tags");
    vocabulary.insert(tags.begin(), tags.end());
  }
  tags_.assign(vocabulary.begin(), vocabulary.end());

  subjects_.reserve(annotations.size());
  offsets_.reserve(annotations.size() + 1);
  offsets_.push_back(0);
  for (const auto& [subject, tags] : annotations) {
    subjects_.push_back(subject);
    // std::set iterates in canonical order, so ids come out sorted.
    for (const Tag& t : tags) tag_ids_.push_back(*find_tag(t));
    offsets_.push_back(tag_ids_.size());
  }
}

std::span<const TagId> SubjectTagGraph::annotations(SubjectId s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= subjects_.size())
    throw LookupError("subject id out of range");
  return std::span<const TagId>(tag_ids_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
}

std::optional<TagId> SubjectTagGraph::find_tag(const Tag& tag) const {
  auto it = std::lower_bound(tags_.begin(), tags_.end(), tag);
  if (it == tags_.end() || *it != tag) return std::nullopt;
  return static_cast<TagId>(it - tags_.begin());
}

std::optional<SubjectId> SubjectTagGraph::find_subject(std::string_view subject) const {
  auto it = std::lower_bound(subjects_.begin(), subjects_.end(), subject);
  if (it == subjects_.end() || *it != subject) return std::nullopt;
  return static_cast<SubjectId>(it - subjects_.begin());
}

SubjectTagGraph::Annotations SubjectTagGraph::to_annotations() const {
  Annotations out;
  for (std::size_t s = 0; s < subjects_.size(); ++s) {
    auto& tags = out[subjects_[s]];
    for (TagId t : annotations(static_cast<SubjectId>(s))) tags.insert(tags_[t]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TagHierarchy

TagHierarchy::TagHierarchy(std::size_t vocabulary_size, TagId root)
    : root_(root),
      parent_(vocabulary_size, kNoTag),
      level_(vocabulary_size, -1),
      children_(vocabulary_size) {
  if (root < 0 || static_cast<std::size_t>(root) >= vocabulary_size)
    throw UsageError("root tag outside the vocabulary");
  level_[root] = 0;
  order_.push_back(root);
}

bool TagHierarchy::contains(TagId t) const {
  return t >= 0 && static_cast<std::size_t>(t) < level_.size() && level_[t] >= 0;
}

void TagHierarchy::check(TagId t) const {
  if (!contains(t)) throw LookupError("tag " + std::to_string(t) + " is not in the hierarchy");
}

void TagHierarchy::attach(TagId child, TagId parent) {
  check(parent);
  if (child < 0 || static_cast<std::size_t>(child) >= level_.size())
    throw UsageError("child tag outside the vocabulary");
  if (contains(child)) throw UsageError("tag " + std::to_string(child) + " is already placed");
  parent_[child] = parent;
  level_[child] = level_[parent] + 1;
  auto& siblings = children_[parent];
  siblings.insert(std::upper_bound(siblings.begin(), siblings.end(), child), child);
  order_.push_back(child);
}

TagId TagHierarchy::parent(TagId t) const {
  check(t);
  return parent_[t];
}

std::span<const TagId> TagHierarchy::children(TagId t) const {
  check(t);
  return children_[t];
}

int TagHierarchy::level(TagId t) const {
  check(t);
  return level_[t];
}

std::vector<TagId> TagHierarchy::root_path(TagId t) const {
  check(t);
  std::vector<TagId> path(static_cast<std::size_t>(level_[t]) + 1);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    *it = t;
    t = parent_[t];
  }
  return path;
}

std::vector<TagId> TagHierarchy::preorder() const {
  std::vector<TagId> out;
  if (root_ == kNoTag) return out;
  out.reserve(order_.size());
  std::vector<TagId> stack{root_};
  while (!stack.empty()) {
    TagId t = stack.back();
    stack.pop_back();
    out.push_back(t);
    const auto& kids = children_[t];
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return out;
}

std::vector<std::pair<TagId, TagId>> TagHierarchy::edges() const {
  std::vector<std::pair<TagId, TagId>> out;
  for (TagId t : preorder())
    if (t != root_) out.emplace_back(parent_[t], t);
  return out;
}

// ---------------------------------------------------------------------------
// ClusterHierarchy

ClusterHierarchy::ClusterHierarchy(TagHierarchy tree, std::vector<std::vector<SubjectId>> members)
    : tree_(std::move(tree)), members_(std::move(members)) {
  if (members_.size() != tree_.vocabulary_size())
    throw UsageError("member table does not match the vocabulary size");
  for (std::size_t t = 0; t < members_.size(); ++t) {
    if (members_[t].empty()) continue;
    if (!tree_.contains(static_cast<TagId>(t)))
      throw UsageError("members assigned to a tag outside the hierarchy");
    if (!std::is_sorted(members_[t].begin(), members_[t].end()))
      throw UsageError("member lists must be sorted");
  }
}

std::span<const SubjectId> ClusterHierarchy::members(TagId cluster) const {
  if (!tree_.contains(cluster)) throw LookupError("unknown cluster");
  return members_[cluster];
}

std::size_t ClusterHierarchy::member_count() const {
  std::size_t n = 0;
  for (const auto& m : members_) n += m.size();
  return n;
}

std::vector<TagId> ClusterHierarchy::cluster_of(std::size_t subject_count) const {
  std::vector<TagId> out(subject_count, kNoTag);
  for (std::size_t t = 0; t < members_.size(); ++t)
    for (SubjectId s : members_[t])
      if (s >= 0 && static_cast<std::size_t>(s) < subject_count) out[s] = static_cast<TagId>(t);
  return out;
}

bool is_partition(const ClusterHierarchy& clusters, std::size_t subject_count) {
  std::vector<int> seen(subject_count, 0);
  for (TagId t : clusters.tree().preorder()) {
    for (SubjectId s : clusters.members(t)) {
      if (s < 0 || static_cast<std::size_t>(s) >= subject_count) return false;
      if (++seen[s] > 1) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; });
}

SubjectTagGraph fixture_g0() {
  const Tag root = label_tag("root"), a = label_tag("A"), b = label_tag("B"),
            a1 = label_tag("A1"), a2 = label_tag("A2");
  return SubjectTagGraph({
      {"s1", {root, a, a1}},
      {"s2", {root, a, a1}},
      {"s3", {root, a, a2}},
      {"s4", {root, b}},
      {"s5", {root, b}},
  });
}

}  // namespace taxoclust
