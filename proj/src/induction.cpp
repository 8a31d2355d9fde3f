#include "taxoclust/induction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace taxoclust {

void InductionConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("alpha must lie strictly between 0 and 1");
}

double similarity(const TagHierarchy& tree, TagId placed, TagId incoming,
                  const CooccurrenceStats& stats, double alpha) {
  if (!tree.contains(placed)) throw UsageError("candidate parent is not placed");
  if (incoming < 0 || incoming >= stats.tag_count()) throw UsageError("incoming tag out of range");
  if (tree.contains(incoming)) throw UsageError("incoming tag is already placed");

  const double n_incoming = stats.occurrences(incoming);
  const int top = tree.level(placed);
  double sum = 0.0;
  for (TagId c : tree.root_path(placed))
    sum += std::pow(alpha, top - tree.level(c)) * stats.pair(incoming, c) / n_incoming;
  return sum;
}

std::vector<TagId> generality_order(const Eigen::VectorXd& generality) {
  std::vector<TagId> order(static_cast<std::size_t>(generality.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](TagId a, TagId b) {
    if (generality(a) != generality(b)) return generality(a) > generality(b);
    return a < b;
  });
  // Re-sort runs that are equal up to accumulation noise by tag id.
  for (auto first = order.begin(); first != order.end();) {
    auto last = std::find_if(first, order.end(), [&](TagId t) {
      return !nearly_equal(generality(*first), generality(t));
    });
    std::sort(first, last);
    first = last;
  }
  return order;
}

TagHierarchy induce(const CooccurrenceStats& stats, const InductionConfig& config) {
  config.validate();
  const Eigen::Index v = stats.tag_count();
  if (v == 0) throw UsageError("cannot induce a hierarchy over an empty vocabulary");

  const std::vector<TagId> order = generality_order(stats.generality());
  const Eigen::VectorXd inv_n = stats.occurrences().cast<double>().cwiseInverse();
  const PairCounts& pairs = stats.pairs();

  // Column p holds S(p -> b) for every b once p is placed, via
  //   S(p -> .) = N(., p) / N(.) + alpha * S(parent(p) -> .)
  Eigen::MatrixXd sim(v, v);
  auto fill_column = [&](TagId p, TagId parent) {
    if (parent == kNoTag)
      sim.col(p).setZero();
    else
      sim.col(p) = config.alpha * sim.col(parent);
    for (PairCounts::InnerIterator it(pairs, p); it; ++it)
      sim(it.row(), p) += it.value() * inv_n(it.row());
  };

  TagHierarchy tree(static_cast<std::size_t>(v), order.front());
  fill_column(order.front(), kNoTag);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const TagId incoming = order[i];
    TagId best = order.front();
    for (std::size_t k = 1; k < i; ++k) {
      const TagId candidate = order[k];
      if (clearly_greater(sim(incoming, candidate), sim(incoming, best))) best = candidate;
    }
    tree.attach(incoming, best);
    fill_column(incoming, best);
  }
  return tree;
}

}  // namespace taxoclust
