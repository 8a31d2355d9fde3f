// Serialized forms of a clustering run. All writers are deterministic: the
// same input always yields byte-identical text.

#pragma once

#include <span>
#include <string>

#include "taxoclust/clustering.hpp"
#include "taxoclust/evaluation.hpp"
#include "taxoclust/kg_model.hpp"

namespace taxoclust {

// Shortest round-trip decimal form.
std::string format_number(double value);

// Nested {"tag", "members", "children"} objects starting at the root.
std::string hierarchy_json(const ClusterHierarchy& clusters, const SubjectTagGraph& graph);

// {"alpha", "assignments": [{"subject", "cluster", "belonging"}...]}
std::string assignments_json(std::span<const Assignment> assignments, const SubjectTagGraph& graph,
                             double alpha);

// Graphviz digraph with record nodes `tag | first k members`. With k = 0 the
// member section is left out entirely.
std::string hierarchy_dot(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
                          std::size_t max_members_per_node);

// Header `alpha,hie_f1,sub_f1,tag_f1,clusters,pruned`; hie_f1 left empty when
// no gold hierarchy was given.
std::string metrics_csv(std::span<const MetricReport> reports);

// Writes `text` to `path`, throwing Error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace taxoclust
