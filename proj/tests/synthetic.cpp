#include "synthetic.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace synthetic {

Dataset make(int subjects, int tags, std::uint32_t seed, double dropout, double noise) {
  std::mt19937 rng(seed);
  auto name = [](int t) { return t == 0 ? std::string("root") : "c" + std::to_string(t); };

  Dataset d;
  std::vector<int> parent(tags, -1);
  for (int t = 1; t < tags; ++t) {
    // Bias towards recent nodes for some depth.
    const int lo = std::max(0, t - 1 - 3 * (t / 4));
    parent[t] = std::uniform_int_distribution<int>(lo, t - 1)(rng);
    d.gold_tsv += name(parent[t]) + "\t" + name(t) + "\n";
  }

  std::uniform_int_distribution<int> node(1, tags - 1);
  std::bernoulli_distribution drop(dropout), add(noise);
  for (int s = 0; s < subjects; ++s) {
    const std::string subject = "e" + std::to_string(s);
    const int leaf = tags > 1 ? node(rng) : 0;
    bool wrote = false;
    for (int t = leaf; t > 0; t = parent[t]) {
      if (t != leaf && drop(rng)) continue;
      d.pairs_tsv += subject + "\t" + name(t) + "\n";
      wrote = true;
    }
    if ((add(rng) || !wrote) && tags > 1) d.pairs_tsv += subject + "\t" + name(node(rng)) + "\n";
  }
  return d;
}

}  // namespace synthetic
