#include "taxoclust/evaluation.hpp"

#include <algorithm>
#include <map>

#include <Eigen/Core>

namespace taxoclust {
namespace {

struct Membership {
  std::vector<TagId> cluster_of;            // per subject
  std::vector<std::vector<TagId>> path_of;  // root path per cluster
};

Membership membership(const ClusterHierarchy& clusters, const SubjectTagGraph& graph) {
  if (clusters.tree().vocabulary_size() != graph.tag_count())
    throw UsageError("hierarchy and graph use different vocabularies");
  Membership m;
  m.cluster_of = clusters.cluster_of(graph.subject_count());
  if (std::find(m.cluster_of.begin(), m.cluster_of.end(), kNoTag) != m.cluster_of.end())
    throw UsageError("some subjects are not assigned to a cluster");
  m.path_of.resize(graph.tag_count());
  for (TagId c : clusters.tree().preorder()) m.path_of[c] = clusters.tree().root_path(c);
  return m;
}

}  // namespace

void validate(const GoldHierarchy& gold) {
  std::map<Tag, Tag> parent_of;
  for (const auto& [parent, child] : gold.edges) {
    if (parent == child) throw UsageError("gold hierarchy has a self loop on '" + tag_label(child) + "'");
    if (!parent_of.emplace(child, parent).second)
      throw UsageError("gold tag '" + tag_label(child) + "' has more than one parent");
  }
  // With one parent per node, a cycle shows up as a walk longer than the node count.
  for (const auto& [child, unused] : parent_of) {
    const Tag* t = &child;
    for (std::size_t steps = 0;; ++steps) {
      auto it = parent_of.find(*t);
      if (it == parent_of.end()) break;
      if (steps > parent_of.size()) throw UsageError("gold hierarchy contains a cycle");
      t = &it->second;
    }
  }
}

GoldHierarchy parse_gold(std::string_view text, std::span<const Tag> vocabulary) {
  std::map<std::string, Tag, std::less<>> by_label;
  for (const Tag& t : vocabulary) by_label.emplace(tag_label(t), t);
  auto resolve = [&](std::string_view label) {
    auto it = by_label.find(label);
    return it != by_label.end() ? it->second : label_tag(label);
  };

  GoldHierarchy gold;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
      throw ParseError(line_no, "expected parent<TAB>child");
    const auto parent = line.substr(0, tab), child = line.substr(tab + 1);
    if (parent.empty() || child.empty()) throw ParseError(line_no, "empty field");
    gold.edges.emplace(resolve(parent), resolve(child));
  }
  validate(gold);
  return gold;
}

SubF1Denominator parse_denominator(std::string_view name) {
  if (name == "vocabulary") return SubF1Denominator::kVocabulary;
  if (name == "clusters") return SubF1Denominator::kClusters;
  throw UsageError("unknown Sub-F1 denominator '" + std::string(name) + "' (expected vocabulary or clusters)");
}

F1Score make_f1(double precision, double recall) {
  const double sum = precision + recall;
  return F1Score{precision, recall, sum > 0.0 ? 2.0 * precision * recall / sum : 0.0};
}

std::vector<std::vector<SubjectId>> inherit(const ClusterHierarchy& clusters) {
  const TagHierarchy& tree = clusters.tree();
  std::vector<std::vector<SubjectId>> out(tree.vocabulary_size());
  const auto order = tree.preorder();
  // Reverse preorder visits children before parents.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const TagId c = *it;
    auto& mine = out[c];
    const auto direct = clusters.members(c);
    mine.insert(mine.end(), direct.begin(), direct.end());
    std::sort(mine.begin(), mine.end());
    if (c != tree.root()) {
      auto& up = out[tree.parent(c)];
      up.insert(up.end(), mine.begin(), mine.end());
    }
  }
  return out;
}

F1Score hie_scores(const TagHierarchy& induced, std::span<const Tag> vocabulary,
                   const GoldHierarchy& gold) {
  if (gold.edges.empty()) throw UsageError("gold hierarchy is empty");
  if (induced.vocabulary_size() != vocabulary.size())
    throw UsageError("hierarchy and vocabulary sizes differ");
  const auto edges = induced.edges();
  std::size_t matched = 0;
  for (const auto& [p, c] : edges)
    matched += gold.edges.count({vocabulary[p], vocabulary[c]});
  const double precision = edges.empty() ? 0.0 : double(matched) / double(edges.size());
  const double recall = double(matched) / double(gold.edges.size());
  return make_f1(precision, recall);
}

double hie_f1(const TagHierarchy& induced, std::span<const Tag> vocabulary, const GoldHierarchy& gold) {
  return hie_scores(induced, vocabulary, gold).f1;
}

F1Score sub_scores(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
                   SubF1Denominator denominator) {
  const Membership m = membership(clusters, graph);
  std::vector<char> is_cluster(graph.tag_count(), 0);
  for (TagId c : clusters.tree().preorder()) is_cluster[c] = 1;

  std::size_t predicted = 0, correct = 0, relevant = 0;
  for (std::size_t s = 0; s < graph.subject_count(); ++s) {
    const auto tags = graph.annotations(static_cast<SubjectId>(s));
    const auto& path = m.path_of[m.cluster_of[s]];
    predicted += path.size();
    // Both sequences hold distinct ids; path is not sorted.
    for (TagId c : path) correct += std::binary_search(tags.begin(), tags.end(), c);
    if (denominator == SubF1Denominator::kVocabulary) {
      relevant += tags.size();
    } else {
      for (TagId t : tags) relevant += is_cluster[t];
    }
  }
  const double precision = predicted ? double(correct) / double(predicted) : 0.0;
  const double recall = relevant ? double(correct) / double(relevant) : 0.0;
  return make_f1(precision, recall);
}

double sub_f1(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
              SubF1Denominator denominator) {
  return sub_scores(clusters, graph, denominator).f1;
}

std::vector<double> tag_scores(const ClusterHierarchy& clusters, const SubjectTagGraph& graph) {
  const Membership m = membership(clusters, graph);
  const auto v = static_cast<Eigen::Index>(graph.tag_count());

  // overlap(t, c) = |subjects of t inherited by c|
  Eigen::MatrixXi overlap = Eigen::MatrixXi::Zero(v, v);
  Eigen::VectorXi tag_size = Eigen::VectorXi::Zero(v);
  Eigen::VectorXi inherited_size = Eigen::VectorXi::Zero(v);
  for (std::size_t s = 0; s < graph.subject_count(); ++s) {
    const auto& path = m.path_of[m.cluster_of[s]];
    for (TagId c : path) inherited_size(c) += 1;
    for (TagId t : graph.annotations(static_cast<SubjectId>(s))) {
      tag_size(t) += 1;
      for (TagId c : path) overlap(t, c) += 1;
    }
  }

  const auto nodes = clusters.tree().preorder();
  std::vector<double> scores(graph.tag_count(), 0.0);
  for (Eigen::Index t = 0; t < v; ++t) {
    double best = 0.0;
    for (TagId c : nodes) {
      // F1 of precision o/|I_c| and recall o/|T_t| is 2o / (|T_t| + |I_c|).
      const int o = overlap(t, c);
      if (o == 0) continue;
      best = std::max(best, 2.0 * o / double(tag_size(t) + inherited_size(c)));
    }
    scores[t] = best;
  }
  return scores;
}

double tag_f1(const ClusterHierarchy& clusters, const SubjectTagGraph& graph) {
  const auto scores = tag_scores(clusters, graph);
  if (scores.empty()) return 0.0;
  double sum = 0.0;
  for (double x : scores) sum += x;
  return sum / double(scores.size());
}

}  // namespace taxoclust
