// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "imbhn/corpus.hpp"

namespace imbhn {

enum class FeatureKind { topical, local };

const char* feature_kind_name(FeatureKind kind);

/// A fitted feature vocabulary. Topical spaces hold the most frequent
/// training words; local spaces hold the words seen inside the omega-window
/// around the target, plus the document frequencies needed for tf-idf.
/// Immutable once fitted; vectorize() is pure.
struct FeatureSpace {
  FeatureKind kind = FeatureKind::topical;
  std::vector<std::string> vocabulary;
  int num_topics = 0;  // topical: requested |T|
  int window = 0;      // local: omega
  std::unordered_map<std::string, int> df;  // local: word -> #train instances
  int n_train = 0;

  std::unordered_map<std::string, int> index;  // word -> vocabulary position

  /// Vocabulary position of a word, -1 if absent.
  int index_of(const std::string& word) const {
    auto it = index.find(word);
    return it == index.end() ? -1 : it->second;
  }
};

struct WeightedEdge {
  std::string feature;
  double weight = 0.0;
};

/// Sparse feature vector of one instance: unique features, weights > 0,
/// ordered by vocabulary position.
using WeightedEdgeList = std::vector<WeightedEdge>;

/// Selects the num_topics most frequent words over all training contexts.
/// Words observed as the target occurrence (and the target lemma) are
/// excluded. Ties at the frequency boundary break lexicographically, so the
/// result does not depend on instance order. The vocabulary may be smaller
/// than num_topics on small corpora. Corpus must be preprocessed.
FeatureSpace fit_topical_space(const Corpus& train, int num_topics);

/// Collects the words within omega positions of the target across all
/// training instances and their per-instance document frequencies.
/// Vocabulary is sorted lexicographically. Corpus must be preprocessed.
FeatureSpace fit_local_space(const Corpus& train, int omega);

/// Distance-based co-occurrence weight: 1 - delta/l, where delta is the
/// smallest number of intermediary words between the target occurrence and
/// any occurrence of the feature, and l is the context length. 0 when the
/// feature does not occur. Always in [0, 1]; adjacent words score exactly 1.
double topical_weight(const Instance& instance, const std::string& feature);

/// tf-idf weight of a feature for one instance: tf counts occurrences inside
/// the omega-window only, idf = ln(n_train / df). 0 when the feature is
/// outside the window or unknown to the space.
double local_weight(const Instance& instance, const std::string& feature,
                    const FeatureSpace& space);

/// Builds the weighted edge list of an instance against a fitted space.
/// Zero-weight features are omitted; unknown words are dropped.
WeightedEdgeList vectorize(const Instance& instance, const FeatureSpace& space);

}  // namespace imbhn
