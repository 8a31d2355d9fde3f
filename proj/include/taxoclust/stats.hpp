// Tag occurrence and co-occurrence counts and the generality score
//
//   G(a) = sum over tags b != a of  N(a,b) / N(b)
//
// where N(b) counts subjects carrying b and N(a,b) subjects carrying both.

#pragma once

#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "taxoclust/kg_model.hpp"

namespace taxoclust {

using CountVector = Eigen::VectorXi;
using PairCounts = Eigen::SparseMatrix<int>;  // column-major

class CooccurrenceStats {
 public:
  CooccurrenceStats() = default;
  // `pairs` must be square, symmetric, with an empty diagonal and entries in
  // [1, min(N(a), N(b))]; every N(t) must be at least 1. Explicit zeros are
  // pruned. Generality is computed here.
  CooccurrenceStats(CountVector occurrences, PairCounts pairs);

  Eigen::Index tag_count() const { return n_.size(); }
  const CountVector& occurrences() const { return n_; }
  const PairCounts& pairs() const { return n_pair_; }
  const Eigen::VectorXd& generality() const { return generality_; }

  int occurrences(TagId t) const;
  // Zero for t == u and for tags that never co-occur.
  int pair(TagId t, TagId u) const;

 private:
  CountVector n_;
  PairCounts n_pair_;
  Eigen::VectorXd generality_;
};

// Counts per subject over each annotation set's unordered pairs. With
// workers > 1 subjects are sharded and the partial counts merged; integer
// counts make the merge exact.
CooccurrenceStats count(const SubjectTagGraph& graph, unsigned workers = 1);

// Accumulates in ascending (canonical) tag order.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> generality_vector(const CountVector& occurrences,
                                                           const PairCounts& pairs) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g(occurrences.size());
  for (Eigen::Index a = 0; a < pairs.outerSize(); ++a) {
    Scalar sum(0);
    for (PairCounts::InnerIterator it(pairs, a); it; ++it)
      sum += Scalar(it.value()) / Scalar(occurrences(it.row()));
    g(a) = sum;
  }
  return g;
}

// Generality of one tag. Throws LookupError for tags outside the vocabulary.
double generality(const CooccurrenceStats& stats, TagId tag);

// Debug dump: `tag<TAB>n<TAB>generality`, most general first.
std::string stats_tsv(const CooccurrenceStats& stats, const SubjectTagGraph& graph);

}  // namespace taxoclust
