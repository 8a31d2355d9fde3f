// taxoclust: induce, evaluate, or sweep a cluster hierarchy from a TSV graph.
//
//   taxoclust induce   --input g.tsv --alpha 0.5 --hierarchy-json h.json --dot h.dot
//   taxoclust evaluate --input g.tsv --alpha 0.5 --gold gold.tsv --metrics-csv m.csv
//   taxoclust sweep    --input g.tsv --gold gold.tsv --metrics-csv m.csv

#include <iostream>

#include "CLI11.hpp"
#include "taxoclust/export.hpp"
#include "taxoclust/pipeline.hpp"

namespace {

struct Options {
  std::string input;
  std::string format = "pairs";
  std::string relation;
  std::string root_label = "root";
  bool no_root = false;
  double alpha = 0.5;
  double alpha_start = 0.05, alpha_end = 0.95, alpha_step = 0.05;
  std::string gold;
  std::string hierarchy_json, clusters_json, dot, metrics_csv, stats_tsv;
  std::size_t dot_members = 4;
  unsigned workers = 1;
  std::string denominator = "vocabulary";
};

std::optional<std::string> optional_path(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "Input TSV file")->required();
  cmd->add_option("-f,--format", o.format, "Input format: pairs or triples")->capture_default_str();
  cmd->add_option("--relation", o.relation, "Keep only triples with this relation");
  cmd->add_option("--root-label", o.root_label, "Label of the injected root tag")->capture_default_str();
  cmd->add_flag("--no-root", o.no_root, "Do not inject a root tag");
  cmd->add_option("-j,--workers", o.workers, "Worker threads")->capture_default_str();
  cmd->add_option("--stats-tsv", o.stats_tsv, "Write tag counts and generality");
}

void add_artifacts(CLI::App* cmd, Options& o) {
  cmd->add_option("--hierarchy-json", o.hierarchy_json, "Write the pruned cluster hierarchy as JSON");
  cmd->add_option("--clusters-json", o.clusters_json, "Write subject assignments as JSON");
  cmd->add_option("--dot", o.dot, "Write the pruned hierarchy as Graphviz DOT");
  cmd->add_option("--dot-members", o.dot_members, "Members shown per DOT node")->capture_default_str();
}

void add_metrics(CLI::App* cmd, Options& o) {
  cmd->add_option("--gold", o.gold, "Gold hierarchy TSV (parent<TAB>child)");
  cmd->add_option("--metrics-csv", o.metrics_csv, "Write metrics CSV");
  cmd->add_option("--sub-f1-denominator", o.denominator, "Sub-F1 recall denominator: vocabulary or clusters")
      ->capture_default_str();
}

taxoclust::PipelineConfig to_config(const Options& o) {
  taxoclust::PipelineConfig c;
  c.input = o.input;
  c.format = taxoclust::parse_input_format(o.format);
  c.relation = optional_path(o.relation);
  c.root_label = o.no_root ? std::nullopt : std::optional<std::string>(o.root_label);
  c.alphas = {o.alpha};
  c.gold = optional_path(o.gold);
  c.hierarchy_json = optional_path(o.hierarchy_json);
  c.clusters_json = optional_path(o.clusters_json);
  c.dot = optional_path(o.dot);
  c.metrics_csv = optional_path(o.metrics_csv);
  c.stats_tsv = optional_path(o.stats_tsv);
  c.dot_members = o.dot_members;
  c.workers = o.workers;
  c.denominator = taxoclust::parse_denominator(o.denominator);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-based hierarchical clustering of knowledge graph subjects"};
  app.require_subcommand(1);
  Options o;

  auto* induce = app.add_subcommand("induce", "Induce and prune a cluster hierarchy for one alpha");
  add_common(induce, o);
  add_artifacts(induce, o);
  induce->add_option("-a,--alpha", o.alpha, "Decay factor in (0, 1)")->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Induce for one alpha and report metrics");
  add_common(evaluate, o);
  add_artifacts(evaluate, o);
  add_metrics(evaluate, o);
  evaluate->add_option("-a,--alpha", o.alpha, "Decay factor in (0, 1)")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Report metrics over a grid of alpha values");
  add_common(sweep, o);
  add_artifacts(sweep, o);
  add_metrics(sweep, o);
  sweep->add_option("--alpha-start", o.alpha_start)->capture_default_str();
  sweep->add_option("--alpha-end", o.alpha_end)->capture_default_str();
  sweep->add_option("--alpha-step", o.alpha_step)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    auto config = to_config(o);
    if (sweep->parsed()) config.alphas = taxoclust::alpha_grid(o.alpha_start, o.alpha_end, o.alpha_step);
    const auto reports = taxoclust::run(config);
    if (induce->parsed()) {
      const auto& r = reports.front();
      std::cout << "alpha " << taxoclust::format_number(r.alpha) << ": " << r.cluster_count
                << " clusters (" << r.pruned_count << " pruned)\n";
    } else {
      std::cout << taxoclust::metrics_csv(reports);
    }
  } catch (const std::exception& e) {
    std::cerr << "taxoclust: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
