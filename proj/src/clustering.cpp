#include "taxoclust/clustering.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <thread>

namespace taxoclust {
namespace {

struct Score {
  std::int64_t shared = 0;
  std::int64_t combined = 1;
  int level = -1;
  TagId cluster = kNoTag;
};

// Higher belonging, then deeper, then lower tag id. Belonging is compared as
// exact fractions.
bool better(const Score& a, const Score& b) {
  const std::int64_t lhs = a.shared * b.combined, rhs = b.shared * a.combined;
  if (lhs != rhs) return lhs > rhs;
  if (a.level != b.level) return a.level > b.level;
  return a.cluster < b.cluster;
}

class Scorer {
 public:
  Scorer(const SubjectTagGraph& graph, const TagHierarchy& tree)
      : graph_(graph), order_(tree.preorder()), marked_(graph.tag_count(), 0),
        shared_(graph.tag_count(), 0) {
    parents_.reserve(order_.size());
    levels_.reserve(order_.size());
    for (TagId c : order_) {
      parents_.push_back(tree.parent(c));
      levels_.push_back(tree.level(c));
    }
  }

  Assignment operator()(SubjectId s) {
    const auto tags = graph_.annotations(s);
    for (TagId t : tags) marked_[t] = 1;
    Score best;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const TagId c = order_[i], p = parents_[i];
      const int level = levels_[i];
      shared_[c] = (p == kNoTag ? 0 : shared_[p]) + marked_[c];
      const std::int64_t combined = static_cast<std::int64_t>(tags.size()) + level + 1 - shared_[c];
      Score candidate{shared_[c], combined, level, c};
      if (best.cluster == kNoTag || better(candidate, best)) best = candidate;
    }
    for (TagId t : tags) marked_[t] = 0;
    return Assignment{s, best.cluster,
                      static_cast<double>(best.shared) / static_cast<double>(best.combined)};
  }

 private:
  const SubjectTagGraph& graph_;
  std::vector<TagId> order_;  // preorder, so parents are scored first
  std::vector<TagId> parents_;
  std::vector<int> levels_;
  std::vector<int> marked_;
  std::vector<std::int64_t> shared_;
};

}  // namespace

double belonging(std::span<const TagId> annotations, std::span<const TagId> cluster_path) {
  std::vector<TagId> common;
  std::set_intersection(annotations.begin(), annotations.end(), cluster_path.begin(),
                        cluster_path.end(), std::back_inserter(common));
  if (common.empty()) return 0.0;
  const auto combined = annotations.size() + cluster_path.size() - common.size();
  return static_cast<double>(common.size()) / static_cast<double>(combined);
}

double belonging(const std::set<Tag>& annotations, const std::set<Tag>& cluster_path) {
  std::vector<Tag> common;
  std::set_intersection(annotations.begin(), annotations.end(), cluster_path.begin(),
                        cluster_path.end(), std::back_inserter(common));
  if (common.empty()) return 0.0;
  const auto combined = annotations.size() + cluster_path.size() - common.size();
  return static_cast<double>(common.size()) / static_cast<double>(combined);
}

std::vector<Assignment> assign_subjects(const SubjectTagGraph& graph, const TagHierarchy& tree,
                                        unsigned workers) {
  if (tree.vocabulary_size() != graph.tag_count())
    throw UsageError("hierarchy and graph use different vocabularies");
  for (std::size_t t = 0; t < graph.tag_count(); ++t)
    if (!tree.contains(static_cast<TagId>(t)))
      throw UsageError("tag '" + tag_label(graph.tag(static_cast<TagId>(t))) + "' is not in the hierarchy");

  const std::size_t n = graph.subject_count();
  std::vector<Assignment> out(n);
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  auto run = [&](std::size_t begin, std::size_t end) {
    Scorer score(graph, tree);
    for (std::size_t s = begin; s < end; ++s) out[s] = score(static_cast<SubjectId>(s));
  };
  if (workers == 1) {
    run(0, n);
  } else {
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      pool.emplace_back(run, begin, std::min(n, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

ClusterHierarchy to_clusters(const TagHierarchy& tree, std::span<const Assignment> assignments) {
  std::vector<std::vector<SubjectId>> members(tree.vocabulary_size());
  for (const Assignment& a : assignments) members.at(a.cluster).push_back(a.subject);
  for (auto& m : members) std::sort(m.begin(), m.end());
  return ClusterHierarchy(tree, std::move(members));
}

ClusterHierarchy assign(const SubjectTagGraph& graph, const TagHierarchy& tree, unsigned workers) {
  return to_clusters(tree, assign_subjects(graph, tree, workers));
}

}  // namespace taxoclust
