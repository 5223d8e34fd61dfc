// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "imbhn/corpus.hpp"
#include "imbhn/features.hpp"
#include "imbhn/matrix.hpp"
#include "imbhn/network.hpp"

namespace imbhn {

enum class InitKind { zeros, random, prior };

const char* init_kind_name(InitKind kind);

struct TrainConfig {
  double eta = 0.1;          // correction rate
  double epsilon_min = 0.01; // stop when the iteration MSE drops below this
  int max_iters = 1000;
  InitKind init = InitKind::zeros;
  std::uint64_t rng_seed = 0;
};

/// Relevance of each feature word for each sense class,
/// |features| x |classes|.
using RelevanceMatrix = Matrix;

/// Builds the initial relevance matrix. zeros: all-zero. random: i.i.d.
/// uniform [0,1) from the seeded generator, filled row-major. prior: the
/// fraction of training instances of each class connected to the feature;
/// throws ValidationError when a class has no training instances.
RelevanceMatrix init_relevance(const BipartiteNetwork& net, InitKind init,
                               std::uint64_t rng_seed);

struct Forward {
  std::vector<double> scores;  // per class: sum_i W[k][i] * F[i][j]
  int predicted = 0;           // argmax, ties to the lowest class index
};

/// Scores instance k under the current relevance matrix.
Forward forward(const BipartiteNetwork& net, const RelevanceMatrix& relevance,
                std::size_t k);

/// E = Y - Phi, elementwise. Entries are in {-1, 0, +1}; a misclassified
/// row has exactly one +1 (gold) and one -1 (predicted).
Matrix compute_error(const Matrix& labels, const Matrix& predictions);

/// Result of the error-correction loop on one network.
struct TrainResult {
  RelevanceMatrix relevance;
  std::vector<double> mse_history;       // one entry per iteration
  std::vector<int> misclassified_history;
  int iterations_run = 0;
  bool converged = false;  // final MSE < epsilon_min
};

/// Observer invoked after each iteration's update with the post-update
/// relevance matrix and the iteration's MSE.
using TrainCallback =
    std::function<void(int iteration, const RelevanceMatrix&, double mse)>;

/// Batch error-correction training. Each iteration classifies every
/// instance with the current relevance matrix, forms the error matrix
/// E = Y - Phi, applies F += eta * W^T * E in one step, and records
/// MSE = sum(E^2) / (|D| * |C|). Stops when the MSE drops below
/// epsilon_min or after max_iters iterations. Throws TrainingError if an
/// update produces a non-finite entry.
TrainResult train_relevance(const BipartiteNetwork& net,
                            const TrainConfig& config,
                            const TrainCallback& callback = {});

/// A trained classifier: the induced relevance matrix plus everything
/// needed to vectorize and label new instances. Immutable and shareable.
struct TrainedModel {
  RelevanceMatrix relevance;
  FeatureSpace space;
  std::vector<std::string> classes;
  std::vector<double> history;  // per-iteration MSE
  std::vector<int> misclassified_history;
  int iterations_run = 0;
  bool converged = false;
  int majority_class = 0;  // fallback for instances with no known features
  TrainConfig config;
  std::string target_lemma;
};

/// Fits a space, builds the network and trains, returning a complete model.
/// Corpus must be preprocessed.
TrainedModel train_model(const Corpus& train, const FeatureSpace& space,
                         const TrainConfig& config);

/// Classifies one preprocessed instance: vectorize against the model's
/// space, take the argmax of the class scores (ties to the lowest class
/// index). Instances with no known features get the majority training class.
int classify_index(const TrainedModel& model, const Instance& instance);
std::string classify(const TrainedModel& model, const Instance& instance);

}  // namespace imbhn
