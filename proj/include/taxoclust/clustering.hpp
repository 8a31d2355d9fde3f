// Assigning subjects to clusters of a tag hierarchy.
//
// A subject's belonging to cluster c is the Jaccard coefficient between its
// tags and root_path(c). Each subject joins the cluster of highest belonging;
// every node, internal ones and the root included, is a candidate. Equal
// belonging goes to the deeper cluster, then to the lower tag id.

#pragma once

#include <set>
#include <span>
#include <vector>

#include "taxoclust/kg_model.hpp"

namespace taxoclust {

struct Assignment {
  SubjectId subject = 0;
  TagId cluster = kNoTag;
  double belonging = 0.0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Both ranges sorted and duplicate free. Zero when the intersection is empty.
double belonging(std::span<const TagId> annotations, std::span<const TagId> cluster_path);
double belonging(const std::set<Tag>& annotations, const std::set<Tag>& cluster_path);

// One assignment per subject, in subject order. Identical for any worker
// count. Throws UsageError unless the tree covers the graph's vocabulary.
std::vector<Assignment> assign_subjects(const SubjectTagGraph& graph, const TagHierarchy& tree,
                                        unsigned workers = 1);

ClusterHierarchy to_clusters(const TagHierarchy& tree, std::span<const Assignment> assignments);

ClusterHierarchy assign(const SubjectTagGraph& graph, const TagHierarchy& tree, unsigned workers = 1);

}  // namespace taxoclust
