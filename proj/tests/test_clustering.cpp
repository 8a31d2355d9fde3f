#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "taxoclust/clustering.hpp"
#include "taxoclust/induction.hpp"
#include "taxoclust/stats.hpp"
#include "test_util.hpp"

using namespace taxoclust;

namespace {

std::set<Tag> labels(std::initializer_list<const char*> names) {
  std::set<Tag> out;
  for (const char* n : names) out.insert(label_tag(n));
  return out;
}

}  // namespace

TEST_CASE("belonging is the Jaccard coefficient") {
  CHECK(belonging(labels({"root", "A", "A1"}), labels({"root", "A", "A1"})) == 1.0);
  CHECK(belonging(labels({"root", "A", "A1"}), labels({"root", "A", "A2"})) == 0.5);
  CHECK(belonging(labels({"root", "B"}), labels({"root", "A", "A1"})) == 0.25);
  CHECK(belonging(labels({}), labels({"root"})) == 0.0);
  CHECK(belonging(labels({"x"}), labels({"root"})) == 0.0);
  const std::vector<TagId> a{1, 3, 5}, p{0, 1, 5, 7};
  CHECK(belonging(a, p) == doctest::Approx(2.0 / 5.0));
}

TEST_CASE("G0 assignment") {
  const auto g = fixture_g0();
  const auto tree = induce(count(g), {0.5});
  const auto clusters = assign(g, tree);
  using V = std::vector<std::string>;
  CHECK(member_names(clusters, g, tag_id(g, "A1")) == V{"s1", "s2"});
  CHECK(member_names(clusters, g, tag_id(g, "A2")) == V{"s3"});
  CHECK(member_names(clusters, g, tag_id(g, "B")) == V{"s4", "s5"});
  CHECK(clusters.is_empty(tag_id(g, "root")));
  CHECK(clusters.is_empty(tag_id(g, "A")));
  CHECK(is_partition(clusters, g.subject_count()));

  const auto sets = oracle::annotation_sets(g);
  CHECK(oracle::assign(sets, oracle::from_hierarchy(tree)) == clusters.cluster_of(g.subject_count()));
  for (const auto& a : assign_subjects(g, tree)) CHECK(a.belonging == 1.0);
}

TEST_CASE("subjects tagged only with the root stay at the root") {
  auto ann = fixture_g0().to_annotations();
  ann["s6"] = labels({"root"});
  const SubjectTagGraph g(ann);
  const auto tree = induce(count(g), {0.5});
  const auto result = assign_subjects(g, tree);
  const auto& s6 = result.at(*g.find_subject("s6"));
  CHECK(s6.cluster == tag_id(g, "root"));
  CHECK(s6.belonging == 1.0);
}

TEST_CASE("equal belonging prefers the deeper cluster, then the lower tag id") {
  // Tree root -> a -> b -> d -> e, root -> c.
  //   s1 {root, a, c, e}: a 2/4, c 2/4, e 3/6 tie; e is deepest.
  //   s2 {root, a, c}:    a 2/3, c 2/3 tie at depth 1; a has the lower id.
  //   s3 {b, d}:          b 1/4, d 2/4, e 2/5; d wins outright.
  const SubjectTagGraph g({{"s1", labels({"root", "a", "c", "e"})},
                           {"s2", labels({"root", "a", "c"})},
                           {"s3", labels({"b", "d"})}});
  const TagId a = tag_id(g, "a"), b = tag_id(g, "b"), c = tag_id(g, "c"), d = tag_id(g, "d"),
              e = tag_id(g, "e"), root = tag_id(g, "root");
  TagHierarchy tree(g.tag_count(), root);
  tree.attach(a, root);
  tree.attach(b, a);
  tree.attach(d, b);
  tree.attach(e, d);
  tree.attach(c, root);
  const auto result = assign_subjects(g, tree);
  CHECK(result[0].cluster == e);
  CHECK(result[0].belonging == 0.5);
  CHECK(result[1].cluster == a);
  CHECK(result[2].cluster == d);

  std::vector<TagId> got;
  for (const auto& r : result) got.push_back(r.cluster);
  CHECK(oracle::assign(oracle::annotation_sets(g), oracle::from_hierarchy(tree)) == got);
}

TEST_CASE("a subject matching a leaf's full path lands on that leaf") {
  const auto g = fixture_g0();
  const auto tree = induce(count(g), {0.7});
  for (const auto& a : assign_subjects(g, tree)) {
    const auto tags = g.annotations(a.subject);
    CHECK(std::vector<TagId>(tags.begin(), tags.end()) ==
          [&] { auto p = tree.root_path(a.cluster); std::sort(p.begin(), p.end()); return p; }());
  }
}

TEST_CASE("perfect matches beat every strict ancestor") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 20, true);
    const auto tree = induce(count(g), {0.5});
    for (const auto& a : assign_subjects(g, tree)) {
      if (a.belonging != 1.0) continue;
      const auto tags = g.annotations(a.subject);
      auto path = tree.root_path(a.cluster);
      path.pop_back();
      while (!path.empty()) {
        auto sorted = path;
        std::sort(sorted.begin(), sorted.end());
        CHECK(belonging(tags, sorted) < 1.0);
        path.pop_back();
      }
    }
  }
}

TEST_CASE("assignment is independent of the worker count") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 20, trial % 2 == 0);
    const auto tree = induce(count(g), {0.6});
    const auto one = assign_subjects(g, tree, 1);
    for (unsigned w : {2u, 5u, 32u}) CHECK(assign_subjects(g, tree, w) == one);
    CHECK(assign(g, tree, 3) == assign(g, tree, 1));
  }
}

TEST_CASE("assignment rejects a hierarchy over another vocabulary") {
  const auto g = fixture_g0();
  CHECK_THROWS_AS(assign(g, TagHierarchy(3, 0)), UsageError);
  CHECK_THROWS_AS(assign(g, TagHierarchy(5, 0)), UsageError);  // only the root placed
}
