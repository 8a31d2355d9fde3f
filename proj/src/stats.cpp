#include "taxoclust/stats.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <thread>
#include <vector>

namespace taxoclust {
namespace {

using Triplets = std::vector<Eigen::Triplet<int>>;

void count_range(const SubjectTagGraph& graph, std::size_t begin, std::size_t end,
                 CountVector& occurrences, Triplets& pairs) {
  for (std::size_t s = begin; s < end; ++s) {
    auto tags = graph.annotations(static_cast<SubjectId>(s));
    for (std::size_t i = 0; i < tags.size(); ++i) {
      occurrences(tags[i]) += 1;
      for (std::size_t j = i + 1; j < tags.size(); ++j) {
        pairs.emplace_back(tags[i], tags[j], 1);
        pairs.emplace_back(tags[j], tags[i], 1);
      }
    }
  }
}

}  // namespace

CooccurrenceStats::CooccurrenceStats(CountVector occurrences, PairCounts pairs)
    : n_(std::move(occurrences)), n_pair_(std::move(pairs)) {
  const Eigen::Index v = n_.size();
  if (n_pair_.rows() != v || n_pair_.cols() != v)
    throw UsageError("pair count matrix does not match the vocabulary size");
  if (v > 0 && n_.minCoeff() < 1) throw UsageError("every tag must occur at least once");
  n_pair_.prune(0);
  n_pair_.makeCompressed();
  for (Eigen::Index a = 0; a < n_pair_.outerSize(); ++a) {
    for (PairCounts::InnerIterator it(n_pair_, a); it; ++it) {
      const Eigen::Index b = it.row();
      if (a == b) throw UsageError("pair counts must not have a diagonal");
      if (it.value() < 0 || it.value() > std::min(n_(a), n_(b)))
        throw UsageError("pair count outside [0, min(N(a), N(b))]");
      if (n_pair_.coeff(a, b) != it.value()) throw UsageError("pair counts must be symmetric");
    }
  }
  generality_ = generality_vector<double>(n_, n_pair_);
}

int CooccurrenceStats::occurrences(TagId t) const {
  if (t < 0 || t >= n_.size()) throw LookupError("tag id out of range");
  return n_(t);
}

int CooccurrenceStats::pair(TagId t, TagId u) const {
  if (t < 0 || t >= n_.size() || u < 0 || u >= n_.size()) throw LookupError("tag id out of range");
  return t == u ? 0 : n_pair_.coeff(t, u);
}

CooccurrenceStats count(const SubjectTagGraph& graph, unsigned workers) {
  if (graph.empty()) throw UsageError("cannot count an empty graph");
  const auto v = static_cast<Eigen::Index>(graph.tag_count());
  const std::size_t subjects = graph.subject_count();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(subjects, 1)));

  std::vector<CountVector> partial_n(workers, CountVector::Zero(v));
  std::vector<Triplets> partial_pairs(workers);
  if (workers == 1) {
    count_range(graph, 0, subjects, partial_n[0], partial_pairs[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (subjects + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(subjects, w * chunk);
      const std::size_t end = std::min(subjects, begin + chunk);
      pool.emplace_back(count_range, std::cref(graph), begin, end, std::ref(partial_n[w]),
                        std::ref(partial_pairs[w]));
    }
    for (auto& t : pool) t.join();
  }

  CountVector n = CountVector::Zero(v);
  for (const auto& p : partial_n) n += p;
  Triplets all;
  all.reserve(std::accumulate(partial_pairs.begin(), partial_pairs.end(), std::size_t{0},
                              [](std::size_t acc, const Triplets& t) { return acc + t.size(); }));
  for (auto& p : partial_pairs) all.insert(all.end(), p.begin(), p.end());

  PairCounts pairs(v, v);
  pairs.setFromTriplets(all.begin(), all.end());
  return CooccurrenceStats(std::move(n), std::move(pairs));
}

double generality(const CooccurrenceStats& stats, TagId tag) {
  if (tag < 0 || tag >= stats.tag_count()) throw LookupError("tag id out of range");
  return stats.generality()(tag);
}

std::string stats_tsv(const CooccurrenceStats& stats, const SubjectTagGraph& graph) {
  std::vector<TagId> order(static_cast<std::size_t>(stats.tag_count()));
  std::iota(order.begin(), order.end(), 0);
  const auto& g = stats.generality();
  std::stable_sort(order.begin(), order.end(), [&](TagId a, TagId b) { return g(a) > g(b); });
  std::string out;
  char buf[32];
  for (TagId t : order) {
    out += tag_label(graph.tag(t));
    out += '\t';
    out += std::to_string(stats.occurrences(t));
    out += '\t';
    auto res = std::to_chars(buf, buf + sizeof buf, g(t));
    out.append(buf, res.ptr);
    out += '\n';
  }
  return out;
}

}  // namespace taxoclust
