#include "taxoclust/pipeline.hpp"

#include <cmath>
#include <utility>

#include "taxoclust/export.hpp"
#include "taxoclust/induction.hpp"
#include "taxoclust/pruning.hpp"

namespace taxoclust {
namespace {

constexpr std::string_view kAlphaPlaceholder = "{alpha}";

bool has_placeholder(const std::optional<std::string>& path) {
  return path && path->find(kAlphaPlaceholder) != std::string::npos;
}

}  // namespace

void PipelineConfig::validate() const {
  if (alphas.empty()) throw UsageError("no alpha values to run");
  for (double a : alphas) InductionConfig{a}.validate();
  if (alphas.size() > 1) {
    for (const auto* path : {&hierarchy_json, &clusters_json, &dot})
      if (*path && !has_placeholder(*path))
        throw UsageError("output '" + **path + "' needs an {alpha} placeholder when sweeping");
  }
  if (workers == 0) throw UsageError("worker count must be positive");
}

std::vector<double> alpha_grid(double start, double end, double step) {
  if (!(step > 0.0)) throw UsageError("alpha step must be positive");
  if (start > end) throw UsageError("alpha start exceeds alpha end");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double a = start + static_cast<double>(i) * step;
    if (a > end + 1e-9) break;
    grid.push_back(std::round(a * 1e12) / 1e12);
  }
  for (double a : grid) InductionConfig{a}.validate();
  return grid;
}

std::string expand_alpha(const std::string& path_template, double alpha) {
  std::string out = path_template;
  const std::string value = format_number(alpha);
  for (std::size_t pos = out.find(kAlphaPlaceholder); pos != std::string::npos;
       pos = out.find(kAlphaPlaceholder, pos + value.size()))
    out.replace(pos, kAlphaPlaceholder.size(), value);
  return out;
}

PreparedInput prepare(const PipelineConfig& config) {
  PreparedInput in;
  in.graph = load_graph(config.input, config.format, config.relation, &in.skipped_subjects);
  if (config.root_label) in.graph = inject_root(in.graph, *config.root_label);
  in.stats = count(in.graph, config.workers);
  if (config.gold) in.gold = parse_gold(read_file(*config.gold), in.graph.tags());
  return in;
}

AlphaRun run_alpha(const PreparedInput& input, double alpha, unsigned workers,
                   SubF1Denominator denominator) {
  AlphaRun r;
  r.induced = induce(input.stats, InductionConfig{alpha});
  r.assignments = assign_subjects(input.graph, r.induced, workers);
  r.pruned = prune(to_clusters(r.induced, r.assignments));
  r.report.alpha = alpha;
  if (input.gold) r.report.hie_f1 = hie_f1(r.induced, input.graph.tags(), *input.gold);
  r.report.sub_f1 = sub_f1(r.pruned, input.graph, denominator);
  r.report.tag_f1 = tag_f1(r.pruned, input.graph);
  r.report.cluster_count = r.pruned.cluster_count();
  r.report.pruned_count = r.induced.size() - r.pruned.cluster_count();
  return r;
}

std::vector<MetricReport> run(const PipelineConfig& config) {
  config.validate();
  const PreparedInput input = prepare(config);

  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<MetricReport> reports;
  for (double alpha : config.alphas) {
    AlphaRun r = run_alpha(input, alpha, config.workers, config.denominator);
    if (config.hierarchy_json)
      outputs.emplace_back(expand_alpha(*config.hierarchy_json, alpha), hierarchy_json(r.pruned, input.graph));
    if (config.clusters_json)
      outputs.emplace_back(expand_alpha(*config.clusters_json, alpha),
                           assignments_json(r.assignments, input.graph, alpha));
    if (config.dot)
      outputs.emplace_back(expand_alpha(*config.dot, alpha),
                           hierarchy_dot(r.pruned, input.graph, config.dot_members));
    reports.push_back(r.report);
  }
  if (config.metrics_csv) outputs.emplace_back(*config.metrics_csv, metrics_csv(reports));
  if (config.stats_tsv) outputs.emplace_back(*config.stats_tsv, stats_tsv(input.stats, input.graph));

  for (const auto& [path, text] : outputs) write_file(path, text);
  return reports;
}

}  // namespace taxoclust
