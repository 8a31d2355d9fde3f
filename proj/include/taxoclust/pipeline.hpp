// End-to-end runs: ingest -> stats -> induce -> assign -> prune -> evaluate.
//
// Flattening and counting happen once per input; each alpha value only
// re-runs induction onward.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxoclust/clustering.hpp"
#include "taxoclust/evaluation.hpp"
#include "taxoclust/ingest.hpp"
#include "taxoclust/kg_model.hpp"
#include "taxoclust/stats.hpp"

namespace taxoclust {

struct PipelineConfig {
  std::string input;
  InputFormat format = InputFormat::kPairs;
  std::optional<std::string> relation;
  std::optional<std::string> root_label = "root";  // unset: no root injection
  std::vector<double> alphas{0.5};
  std::optional<std::string> gold;

  // Output paths. With several alpha values the per-alpha artifacts must
  // contain the `{alpha}` placeholder.
  std::optional<std::string> hierarchy_json;
  std::optional<std::string> clusters_json;
  std::optional<std::string> dot;
  std::optional<std::string> metrics_csv;
  std::optional<std::string> stats_tsv;

  std::size_t dot_members = 4;
  unsigned workers = 1;
  SubF1Denominator denominator = SubF1Denominator::kVocabulary;

  // Throws UsageError on invalid alpha values or output templates.
  void validate() const;
};

// start, start + step, ... up to end. `end` is included when the grid lands
// within 1e-9 of it; values are rounded to 12 decimals to drop drift.
std::vector<double> alpha_grid(double start, double end, double step);

// Replaces every `{alpha}` in `path_template`.
std::string expand_alpha(const std::string& path_template, double alpha);

struct PreparedInput {
  SubjectTagGraph graph;
  CooccurrenceStats stats;
  std::optional<GoldHierarchy> gold;
  std::size_t skipped_subjects = 0;
};

PreparedInput prepare(const PipelineConfig& config);

struct AlphaRun {
  TagHierarchy induced;
  std::vector<Assignment> assignments;
  ClusterHierarchy pruned;
  MetricReport report;
};

AlphaRun run_alpha(const PreparedInput& input, double alpha, unsigned workers = 1,
                   SubF1Denominator denominator = SubF1Denominator::kVocabulary);

// Runs every alpha and only then writes the requested files, so failures
// leave no partial output.
std::vector<MetricReport> run(const PipelineConfig& config);

}  // namespace taxoclust
