// Greedy tag hierarchy induction.
//
// The most general tag becomes the root; the remaining tags are placed in
// decreasing generality, each below the placed tag p maximizing the decayed
// path similarity
//
//   S(p -> b) = sum over c on root_path(p) of  alpha^(level(p) - level(c)) * N(b,c) / N(b)
//
// Ties:
//   generality  -> canonical tag order
//   similarity  -> earlier placed (i.e. more general) candidate
// A tag sharing no subject with any placed tag therefore lands under the root.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "taxoclust/kg_model.hpp"
#include "taxoclust/stats.hpp"

namespace taxoclust {

struct InductionConfig {
  double alpha = 0.5;

  // Throws UsageError unless 0 < alpha < 1.
  void validate() const;
};

// Values closer than this (relative, floor 1) compare equal in the
// generality and similarity tie rules.
inline constexpr double kTieTolerance = 1e-12;

inline bool nearly_equal(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kTieTolerance * scale;
}

// Strictly greater beyond the tie tolerance.
inline bool clearly_greater(double a, double b) { return a > b && !nearly_equal(a, b); }

// Direct path sum. Throws UsageError if `placed` is not in the tree or
// `incoming` already is.
double similarity(const TagHierarchy& tree, TagId placed, TagId incoming,
                  const CooccurrenceStats& stats, double alpha);

// All tags by decreasing generality; near-equal runs are ordered by tag id.
std::vector<TagId> generality_order(const Eigen::VectorXd& generality);

TagHierarchy induce(const CooccurrenceStats& stats, const InductionConfig& config);

}  // namespace taxoclust
