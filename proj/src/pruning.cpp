#include "taxoclust/pruning.hpp"

namespace taxoclust {

ClusterHierarchy prune(const ClusterHierarchy& clusters) {
  const TagHierarchy& tree = clusters.tree();
  const TagId root = tree.root();
  const std::size_t v = tree.vocabulary_size();

  auto survives = [&](TagId t) { return t == root || !clusters.is_empty(t); };

  // Nearest surviving proper ancestor, resolved on the original tree.
  std::vector<TagId> anchor(v, kNoTag);
  const std::vector<TagId> order = tree.preorder();
  TagHierarchy pruned(v, root);
  std::vector<std::vector<SubjectId>> members(v);
  const auto root_members = clusters.members(root);
  members[root].assign(root_members.begin(), root_members.end());

  for (TagId t : order) {
    if (t == root) continue;
    const TagId p = tree.parent(t);
    anchor[t] = survives(p) ? p : anchor[p];
    if (!survives(t)) continue;
    pruned.attach(t, anchor[t]);
    const auto m = clusters.members(t);
    members[t].assign(m.begin(), m.end());
  }
  return ClusterHierarchy(std::move(pruned), std::move(members));
}

}  // namespace taxoclust
