// Quality metrics for an induced cluster hierarchy.
//
//  Hie-F1  induced parent->child edges against a gold edge set.
//  Sub-F1  micro F1 over (subject, cluster) pairs where every cluster holds
//          the subjects of its descendants; a pair is correct when the
//          subject carries the cluster's tag.
//  Tag-F1  per tag, the best F1 between its subject set and any cluster's
//          inherited subject set, averaged over the vocabulary.
//
// Sub-F1 and Tag-F1 expect the pruned hierarchy.

#pragma once

#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "taxoclust/kg_model.hpp"

namespace taxoclust {

struct GoldHierarchy {
  std::set<std::pair<Tag, Tag>> edges;  // (parent, child)
};

// Throws UsageError on self loops, children with two parents, or cycles.
void validate(const GoldHierarchy& gold);

// `parent<TAB>child` lines. Labels are matched against tag_label() of the
// vocabulary; unknown labels become label tags and simply never match.
GoldHierarchy parse_gold(std::string_view text, std::span<const Tag> vocabulary);

enum class SubF1Denominator { kVocabulary, kClusters };

SubF1Denominator parse_denominator(std::string_view name);

struct F1Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean, 0 when both inputs are 0.
F1Score make_f1(double precision, double recall);

struct MetricReport {
  double alpha = 0.0;
  std::optional<double> hie_f1;
  double sub_f1 = 0.0;
  double tag_f1 = 0.0;
  std::size_t cluster_count = 0;
  std::size_t pruned_count = 0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

// Direct members of each cluster plus those of all its descendants, indexed
// by tag id (empty for tags outside the tree). Lists are sorted.
std::vector<std::vector<SubjectId>> inherit(const ClusterHierarchy& clusters);

F1Score hie_scores(const TagHierarchy& induced, std::span<const Tag> vocabulary,
                   const GoldHierarchy& gold);
double hie_f1(const TagHierarchy& induced, std::span<const Tag> vocabulary, const GoldHierarchy& gold);

F1Score sub_scores(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
                   SubF1Denominator denominator = SubF1Denominator::kVocabulary);
double sub_f1(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
              SubF1Denominator denominator = SubF1Denominator::kVocabulary);

// Best-cluster F1 of every tag, indexed by tag id.
std::vector<double> tag_scores(const ClusterHierarchy& clusters, const SubjectTagGraph& graph);
double tag_f1(const ClusterHierarchy& clusters, const SubjectTagGraph& graph);

}  // namespace taxoclust
