// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imbhn/corpus.hpp"
#include "imbhn/features.hpp"
#include "imbhn/matrix.hpp"
#include "imbhn/network.hpp"

namespace imbhn {

// Reference classifiers for the comparison tables. They consume exactly the
// same weighted vectors as the bipartite model: network rows at fit time,
// vectorize() output at predict time.

/// Sparse vector keyed by vocabulary position, index-ascending.
using SparseVec = std::vector<std::pair<int, double>>;

/// Maps a WeightedEdgeList onto vocabulary positions.
SparseVec to_sparse(const WeightedEdgeList& edges, const FeatureSpace& space);

/// Most frequent sense and its relative frequency; ties break in
/// sense-inventory order.
std::pair<std::string, double> majority_baseline(const Corpus& train);
int majority_class_index(const Corpus& train);

/// Multinomial naive Bayes over the weighted vectors, add-one smoothing.
struct NaiveBayesModel {
  std::vector<double> class_log_priors;  // -inf for empty classes
  Matrix feature_log_likelihoods;        // |features| x |classes|
  std::vector<std::string> classes;
};

NaiveBayesModel train_nb(const BipartiteNetwork& net);
std::vector<double> nb_log_posteriors(const NaiveBayesModel& model,
                                      const SparseVec& vec);
/// Argmax posterior; ties to the lowest class index.
int predict_nb(const NaiveBayesModel& model, const SparseVec& vec);

/// k-nearest-neighbors by cosine similarity over the stored training rows.
struct KnnModel {
  std::vector<SparseVec> vectors;
  std::vector<double> norms;
  std::vector<int> labels;
  int k = 3;  // clamped to the training size at fit time
  int n_classes = 0;
  int fallback_class = 0;  // majority training class, used for zero queries
};

KnnModel fit_knn(const BipartiteNetwork& net, int k);

/// Majority vote among the k most similar training vectors. Similarity ties
/// prefer the lower training index; vote ties the lower class index.
/// A zero query falls back to the majority training class.
int predict_knn(const KnnModel& model, const SparseVec& vec);

}  // namespace imbhn
