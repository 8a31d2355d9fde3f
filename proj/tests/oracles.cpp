#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

namespace oracle {
namespace {

bool ties(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::size_t intersection_size(const std::set<TagId>& a, const std::set<TagId>& b) {
  std::vector<TagId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

std::vector<TagId> nodes(const Tree& tree) {
  std::vector<TagId> out;
  for (TagId t = 0; t < static_cast<TagId>(tree.parent.size()); ++t)
    if (tree.contains(t)) out.push_back(t);
  return out;
}

double f1(double precision, double recall) {
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
}

}  // namespace

std::vector<std::set<TagId>> annotation_sets(const taxoclust::SubjectTagGraph& graph) {
  std::vector<std::set<TagId>> out;
  for (std::size_t s = 0; s < graph.subject_count(); ++s) {
    auto tags = graph.annotations(static_cast<SubjectId>(s));
    out.emplace_back(tags.begin(), tags.end());
  }
  return out;
}

int count_tag(const std::vector<std::set<TagId>>& sets, TagId t) {
  return static_cast<int>(std::count_if(sets.begin(), sets.end(), [&](const auto& s) { return s.count(t) > 0; }));
}

int count_pair(const std::vector<std::set<TagId>>& sets, TagId a, TagId b) {
  if (a == b) return 0;
  return static_cast<int>(std::count_if(sets.begin(), sets.end(),
                                        [&](const auto& s) { return s.count(a) && s.count(b); }));
}

double generality(const std::vector<std::set<TagId>>& sets, int tag_count, TagId a) {
  double g = 0.0;
  for (TagId b = 0; b < tag_count; ++b) {
    if (b == a) continue;
    const int both = count_pair(sets, a, b);
    if (both > 0) g += double(both) / double(count_tag(sets, b));
  }
  return g;
}

std::vector<TagId> Tree::path(TagId t) const {
  std::vector<TagId> out;
  for (TagId x = t; x >= 0; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Tree::is_ancestor_or_self(TagId a, TagId t) const {
  for (TagId x = t; x >= 0; x = parent[x])
    if (x == a) return true;
  return false;
}

Tree from_hierarchy(const taxoclust::TagHierarchy& h) {
  Tree tree;
  tree.root = h.root();
  tree.parent.assign(h.vocabulary_size(), -2);
  for (TagId t : h.insertion_order()) {
    tree.parent[t] = h.parent(t);
    tree.placement.push_back(t);
  }
  return tree;
}

double path_similarity(const std::vector<std::set<TagId>>& sets, const Tree& tree, TagId placed,
                       TagId incoming, double alpha) {
  const auto path = tree.path(placed);
  const int top = static_cast<int>(path.size()) - 1;
  double s = 0.0;
  for (int lc = 0; lc <= top; ++lc)
    s += std::pow(alpha, top - lc) * count_pair(sets, incoming, path[lc]) / count_tag(sets, incoming);
  return s;
}

Tree induce(const std::vector<std::set<TagId>>& sets, int tag_count, double alpha) {
  std::vector<double> g(tag_count);
  for (TagId t = 0; t < tag_count; ++t) g[t] = generality(sets, tag_count, t);

  Tree tree;
  tree.parent.assign(tag_count, -2);
  std::set<TagId> remaining;
  for (TagId t = 0; t < tag_count; ++t) remaining.insert(t);

  while (!remaining.empty()) {
    double top = -1;
    for (TagId t : remaining) top = std::max(top, g[t]);
    TagId next = -1;
    for (TagId t : remaining)
      if (ties(g[t], top) || g[t] == top) {
        next = t;
        break;
      }
    remaining.erase(next);

    if (tree.root < 0) {
      tree.root = next;
      tree.parent[next] = -1;
    } else {
      TagId best = tree.placement.front();
      double best_sim = path_similarity(sets, tree, best, next, alpha);
      for (TagId c : tree.placement) {
        const double s = path_similarity(sets, tree, c, next, alpha);
        if (s > best_sim && !ties(s, best_sim)) {
          best = c;
          best_sim = s;
        }
      }
      tree.parent[next] = best;
    }
    tree.placement.push_back(next);
  }
  return tree;
}

std::vector<TagId> assign(const std::vector<std::set<TagId>>& sets, const Tree& tree) {
  std::vector<TagId> out;
  for (const auto& tags : sets) {
    TagId best = -1;
    double best_b = -1;
    int best_level = -1;
    for (TagId c : nodes(tree)) {
      const auto p = tree.path(c);
      const std::set<TagId> path(p.begin(), p.end());
      const auto both = intersection_size(tags, path);
      const double b = double(both) / double(tags.size() + path.size() - both);
      const int level = tree.level(c);
      if (b > best_b || (b == best_b && level > best_level)) {
        best = c;
        best_b = b;
        best_level = level;
      }
    }
    out.push_back(best);
  }
  return out;
}

Tree prune(const Tree& tree, const std::vector<TagId>& cluster_of) {
  std::set<TagId> non_empty(cluster_of.begin(), cluster_of.end());
  non_empty.insert(tree.root);
  Tree out;
  out.root = tree.root;
  out.parent.assign(tree.parent.size(), -2);
  out.parent[tree.root] = -1;
  out.placement.push_back(tree.root);
  for (TagId t : tree.placement) {
    if (t == tree.root || !non_empty.count(t)) continue;
    TagId up = tree.parent[t];
    while (!non_empty.count(up)) up = tree.parent[up];
    out.parent[t] = up;
    out.placement.push_back(t);
  }
  return out;
}

double hie_f1(const Tree& induced, const std::set<std::pair<TagId, TagId>>& gold) {
  std::set<std::pair<TagId, TagId>> edges;
  for (TagId t : nodes(induced))
    if (t != induced.root) edges.emplace(induced.parent[t], t);
  std::size_t both = 0;
  for (const auto& e : edges) both += gold.count(e);
  const double precision = edges.empty() ? 0.0 : double(both) / double(edges.size());
  const double recall = double(both) / double(gold.size());
  return f1(precision, recall);
}

double sub_f1(const std::vector<std::set<TagId>>& sets, const Tree& pruned,
              const std::vector<TagId>& cluster_of, bool clusters_denominator) {
  const auto cs = nodes(pruned);
  std::set<std::pair<std::size_t, TagId>> predicted;
  for (TagId c : cs)
    for (std::size_t s = 0; s < sets.size(); ++s)
      if (pruned.is_ancestor_or_self(c, cluster_of[s])) predicted.emplace(s, c);
  std::size_t correct = 0;
  for (const auto& [s, c] : predicted) correct += sets[s].count(c);
  std::size_t relevant = 0;
  for (const auto& tags : sets)
    for (TagId t : tags)
      relevant += clusters_denominator ? pruned.contains(t) : 1;
  const double precision = predicted.empty() ? 0.0 : double(correct) / double(predicted.size());
  const double recall = relevant == 0 ? 0.0 : double(correct) / double(relevant);
  return f1(precision, recall);
}

double tag_f1(const std::vector<std::set<TagId>>& sets, int tag_count, const Tree& pruned,
              const std::vector<TagId>& cluster_of) {
  double total = 0.0;
  for (TagId t = 0; t < tag_count; ++t) {
    std::set<std::size_t> tagged;
    for (std::size_t s = 0; s < sets.size(); ++s)
      if (sets[s].count(t)) tagged.insert(s);
    double best = 0.0;
    for (TagId c : nodes(pruned)) {
      std::set<std::size_t> inherited;
      for (std::size_t s = 0; s < sets.size(); ++s)
        if (pruned.is_ancestor_or_self(c, cluster_of[s])) inherited.insert(s);
      std::size_t both = 0;
      for (auto s : tagged) both += inherited.count(s);
      if (both == 0) continue;
      best = std::max(best, f1(double(both) / inherited.size(), double(both) / tagged.size()));
    }
    total += best;
  }
  return total / tag_count;
}

taxoclust::SubjectTagGraph random_graph(std::mt19937& rng, int max_tags, int max_subjects,
                                        bool with_root) {
  std::uniform_int_distribution<int> tag_count_dist(1, max_tags - (with_root ? 1 : 0));
  std::uniform_int_distribution<int> subject_count_dist(1, max_subjects);
  const int tags = tag_count_dist(rng);
  const int subjects = subject_count_dist(rng);
  std::uniform_int_distribution<int> pick(0, tags - 1);
  std::bernoulli_distribution extra(0.35);

  taxoclust::SubjectTagGraph::Annotations annotations;
  for (int s = 0; s < subjects; ++s) {
    auto& set = annotations["s" + std::to_string(s)];
    set.insert(taxoclust::label_tag("t" + std::to_string(pick(rng))));
    for (int t = 0; t < tags; ++t)
      if (extra(rng)) set.insert(taxoclust::label_tag("t" + std::to_string(t)));
    if (with_root) set.insert(taxoclust::label_tag("root"));
  }
  return taxoclust::SubjectTagGraph(annotations);
}

}  // namespace oracle
