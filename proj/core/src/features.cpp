// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <unordered_set>

#include "imbhn/error.hpp"

namespace imbhn {

const char* feature_kind_name(FeatureKind kind) {
  return kind == FeatureKind::topical ? "topical" : "local";
}

namespace {

// Surfaces that may never become features: every surface observed at a
// target position, plus the target lemma itself. A word occurring in every
// instance carries no discriminative signal.
std::unordered_set<std::string> excluded_surfaces(const Corpus& train) {
  std::unordered_set<std::string> excluded;
  excluded.insert(to_lower(train.target_lemma));
  for (const Instance& inst : train.instances) {
    excluded.insert(inst.context[inst.target_index].surface);
  }
  return excluded;
}

void build_index(FeatureSpace& space) {
  space.index.reserve(space.vocabulary.size());
  for (std::size_t i = 0; i < space.vocabulary.size(); ++i) {
    space.index.emplace(space.vocabulary[i], static_cast<int>(i));
  }
}

// Window positions of an instance: within omega of the target, target
// position itself excluded, truncated at the context boundaries.
template <class Fn>
void for_each_window_position(const Instance& inst, int omega, Fn&& fn) {
  const std::size_t n = inst.context.size();
  const std::size_t t = inst.target_index;
  const std::size_t lo = t >= static_cast<std::size_t>(omega)
                             ? t - static_cast<std::size_t>(omega)
                             : 0;
  const std::size_t hi = std::min(n - 1, t + static_cast<std::size_t>(omega));
  for (std::size_t p = lo; p <= hi; ++p) {
    if (p == t) continue;
    fn(p);
  }
}

}  // namespace

FeatureSpace fit_topical_space(const Corpus& train, int num_topics) {
  if (train.instances.empty()) {
    throw ValidationError("fit_topical_space: empty corpus");
  }
  if (num_topics < 1) {
    throw ValidationError("fit_topical_space: num_topics must be >= 1");
  }
  const auto excluded = excluded_surfaces(train);

  // std::map keeps candidates lexicographically sorted, which is exactly
  // the tie order we need after the stable sort by count.
  std::map<std::string, long long> counts;
  for (const Instance& inst : train.instances) {
    for (std::size_t p = 0; p < inst.context.size(); ++p) {
      if (p == inst.target_index) continue;
      const std::string& w = inst.context[p].surface;
      if (excluded.count(w)) continue;
      ++counts[w];
    }
  }

  std::vector<std::pair<std::string, long long>> ranked(counts.begin(),
                                                        counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });

  FeatureSpace space;
  space.kind = FeatureKind::topical;
  space.num_topics = num_topics;
  space.n_train = static_cast<int>(train.instances.size());
  const std::size_t take =
      std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(num_topics));
  space.vocabulary.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    space.vocabulary.push_back(ranked[i].first);
  }
  build_index(space);
  return space;
}

FeatureSpace fit_local_space(const Corpus& train, int omega) {
  if (train.instances.empty()) {
    throw ValidationError("fit_local_space: empty corpus");
  }
  if (omega < 1) {
    throw ValidationError("fit_local_space: omega must be >= 1");
  }
  const auto excluded = excluded_surfaces(train);

  std::map<std::string, int> df;  // sorted -> deterministic vocabulary
  for (const Instance& inst : train.instances) {
    std::unordered_set<std::string> seen;
    for_each_window_position(inst, omega, [&](std::size_t p) {
      const std::string& w = inst.context[p].surface;
      if (excluded.count(w)) return;
      seen.insert(w);
    });
    for (const std::string& w : seen) ++df[w];
  }

  FeatureSpace space;
  space.kind = FeatureKind::local;
  space.window = omega;
  space.n_train = static_cast<int>(train.instances.size());
  space.vocabulary.reserve(df.size());
  for (const auto& [word, count] : df) {
    space.vocabulary.push_back(word);
    space.df.emplace(word, count);
  }
  build_index(space);
  return space;
}

double topical_weight(const Instance& instance, const std::string& feature) {
  const std::size_t n = instance.context.size();
  const std::size_t t = instance.target_index;
  // delta: fewest intermediary words between the target occurrence and any
  // occurrence of the feature. Adjacent words have delta 0.
  long long best = -1;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == t) continue;
    if (instance.context[p].surface != feature) continue;
    const long long delta =
        std::llabs(static_cast<long long>(p) - static_cast<long long>(t)) - 1;
    if (best < 0 || delta < best) best = delta;
  }
  if (best < 0) return 0.0;
  return 1.0 - static_cast<double>(best) / static_cast<double>(n);
}

double local_weight(const Instance& instance, const std::string& feature,
                    const FeatureSpace& space) {
  if (space.index_of(feature) < 0) return 0.0;
  int tf = 0;
  for_each_window_position(instance, space.window, [&](std::size_t p) {
    if (instance.context[p].surface == feature) ++tf;
  });
  if (tf == 0) return 0.0;
  const auto it = space.df.find(feature);
  if (it == space.df.end()) return 0.0;
  const double idf = std::log(static_cast<double>(space.n_train) /
                              static_cast<double>(it->second));
  return static_cast<double>(tf) * idf;
}

WeightedEdgeList vectorize(const Instance& instance,
                           const FeatureSpace& space) {
  // Collect weights keyed by vocabulary position so the output is ordered
  // and unique by construction.
  std::map<int, double> by_index;

  if (space.kind == FeatureKind::topical) {
    const std::size_t n = instance.context.size();
    const std::size_t t = instance.target_index;
    std::map<int, long long> min_delta;
    for (std::size_t p = 0; p < n; ++p) {
      if (p == t) continue;
      const int idx = space.index_of(instance.context[p].surface);
      if (idx < 0) continue;
      const long long delta =
          std::llabs(static_cast<long long>(p) - static_cast<long long>(t)) - 1;
      auto [it, inserted] = min_delta.emplace(idx, delta);
      if (!inserted && delta < it->second) it->second = delta;
    }
    for (const auto& [idx, delta] : min_delta) {
      const double w =
          1.0 - static_cast<double>(delta) / static_cast<double>(n);
      if (w != 0.0) by_index[idx] = w;
    }
  } else {
    std::map<int, int> tf;
    for_each_window_position(instance, space.window, [&](std::size_t p) {
      const int idx = space.index_of(instance.context[p].surface);
      if (idx >= 0) ++tf[idx];
    });
    for (const auto& [idx, count] : tf) {
      const auto it = space.df.find(space.vocabulary[idx]);
      const double idf = std::log(static_cast<double>(space.n_train) /
                                  static_cast<double>(it->second));
      const double w = static_cast<double>(count) * idf;
      if (w != 0.0) by_index[idx] = w;
    }
  }

  WeightedEdgeList edges;
  edges.reserve(by_index.size());
  for (const auto& [idx, w] : by_index) {
    edges.push_back({space.vocabulary[idx], w});
  }
  return edges;
}

}  // namespace imbhn
