#include "taxoclust/export.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

namespace taxoclust {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json node_json(const ClusterHierarchy& clusters, const SubjectTagGraph& graph, TagId t) {
  ordered_json node;
  node["tag"] = tag_label(graph.tag(t));
  auto members = ordered_json::array();
  for (SubjectId s : clusters.members(t)) members.push_back(graph.subject(s));
  node["members"] = std::move(members);
  auto children = ordered_json::array();
  for (TagId c : clusters.tree().children(t)) children.push_back(node_json(clusters, graph, c));
  node["children"] = std::move(children);
  return node;
}

// Escapes characters that are structural inside a record label.
std::string record_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (std::string_view("{}|<>\"\\ ").find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string hierarchy_json(const ClusterHierarchy& clusters, const SubjectTagGraph& graph) {
  return node_json(clusters, graph, clusters.tree().root()).dump(2) + "\n";
}

std::string assignments_json(std::span<const Assignment> assignments, const SubjectTagGraph& graph,
                             double alpha) {
  ordered_json doc;
  doc["alpha"] = alpha;
  auto list = ordered_json::array();
  for (const Assignment& a : assignments) {
    ordered_json row;
    row["subject"] = graph.subject(a.subject);
    row["cluster"] = tag_label(graph.tag(a.cluster));
    row["belonging"] = a.belonging;
    list.push_back(std::move(row));
  }
  doc["assignments"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string hierarchy_dot(const ClusterHierarchy& clusters, const SubjectTagGraph& graph,
                          std::size_t max_members_per_node) {
  const TagHierarchy& tree = clusters.tree();
  std::string out = "digraph clusters {\n  node [shape=record];\n";
  for (TagId t : tree.preorder()) {
    std::string label = "{" + record_escape(tag_label(graph.tag(t)));
    if (max_members_per_node > 0) {
      label += "|";
      const auto members = clusters.members(t);
      const std::size_t shown = std::min(members.size(), max_members_per_node);
      for (std::size_t i = 0; i < shown; ++i) label += record_escape(graph.subject(members[i])) + "\\l";
    }
    label += "}";
    out += "  n" + std::to_string(t) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [parent, child] : tree.edges())
    out += "  n" + std::to_string(parent) + " -> n" + std::to_string(child) + ";\n";
  out += "}\n";
  return out;
}

std::string metrics_csv(std::span<const MetricReport> reports) {
  std::string out = "alpha,hie_f1,sub_f1,tag_f1,clusters,pruned\n";
  for (const MetricReport& r : reports) {
    out += format_number(r.alpha) + ",";
    if (r.hie_f1) out += format_number(*r.hie_f1);
    out += "," + format_number(r.sub_f1) + "," + format_number(r.tag_f1) + "," +
           std::to_string(r.cluster_count) + "," + std::to_string(r.pruned_count) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace taxoclust
