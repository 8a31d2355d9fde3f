#pragma once

#include <string>
#include <vector>

#include "taxoclust/kg_model.hpp"

inline taxoclust::TagId tag_id(const taxoclust::SubjectTagGraph& g, const std::string& label) {
  return g.find_tag(taxoclust::label_tag(label)).value();
}

inline std::vector<taxoclust::TagId> tag_ids(const taxoclust::SubjectTagGraph& g,
                                             std::initializer_list<const char*> labels) {
  std::vector<taxoclust::TagId> out;
  for (const char* l : labels) out.push_back(tag_id(g, l));
  return out;
}

inline std::vector<std::string> member_names(const taxoclust::ClusterHierarchy& c,
                                             const taxoclust::SubjectTagGraph& g, taxoclust::TagId t) {
  std::vector<std::string> out;
  for (auto s : c.members(t)) out.push_back(g.subject(s));
  return out;
}

inline std::vector<std::string> child_labels(const taxoclust::TagHierarchy& h,
                                             const taxoclust::SubjectTagGraph& g, taxoclust::TagId t) {
  std::vector<std::string> out;
  for (auto c : h.children(t)) out.push_back(taxoclust::tag_label(g.tag(c)));
  return out;
}
